#pragma once

#include <cstdint>
#include <vector>

#include "mip/errors.hpp"

namespace mip {

// Dense coefficient vector over GF(p), one entry per group element.
using Vec = std::vector<uint8_t>;

class GfpMat;
namespace kernels {
int rref_serial(GfpMat& m);
int rref_parallel(GfpMat& m);
} // namespace kernels

/**
 * Row space over GF(p). Rows are bit-packed into 64-bit words when p == 2,
 * byte-per-entry otherwise. rref() puts the matrix into reduced row echelon
 * form, which is unique for the row space, so two spans compare equal iff
 * they are the same subspace, regardless of how the rows were generated.
 */
class GfpMat {
  public:
    GfpMat() = default;
    GfpMat(int p, int cols);

    static GfpMat identity(int p, int n);
    static GfpMat from_rows(int p, int cols, const std::vector<Vec>& rows);

    int p() const { return p_; }
    int cols() const { return cols_; }
    int rows() const { return rows_; }
    bool reduced() const { return reduced_; }
    int words() const { return words_; }

    void append_row(const Vec& v);
    Vec row(int i) const;
    uint8_t get(int r, int c) const;
    void set(int r, int c, uint8_t v);

    // raw word access for the p == 2 kernels
    uint64_t* wrow(int i) { return bits_.data() + (size_t)i * words_; }
    const uint64_t* wrow(int i) const { return bits_.data() + (size_t)i * words_; }
    uint8_t* brow(int i) { return vals_.data() + (size_t)i * cols_; }
    const uint8_t* brow(int i) const { return vals_.data() + (size_t)i * cols_; }

    void reserve_rows(int n);
    void append_zero_rows(int n);
    void swap_rows(int i, int j);
    void trim_rows(int n); // keep first n rows

    // canonical reduced row echelon form; drops zero rows
    void rref();
    int rank() const;
    const std::vector<int>& pivots() const { return pivots_; }

    // residue of v modulo the row space (requires reduced form)
    Vec reduce_vec(Vec v) const;
    bool contains_vec(const Vec& v) const;
    bool contains(const GfpMat& other) const;
    bool same_space(const GfpMat& other) const;
    bool is_zero_space() const { return rows_ == 0; }

    // insert one vector maintaining reduced form; true if the rank grew
    bool insert_reduce(Vec v);

  private:
    friend int kernels::rref_serial(GfpMat&);
    friend int kernels::rref_parallel(GfpMat&);

    int p_ = 2;
    int cols_ = 0;
    int words_ = 0;
    int rows_ = 0;
    bool reduced_ = false;
    std::vector<uint64_t> bits_; // p == 2
    std::vector<uint8_t> vals_;  // p > 2
    std::vector<int> pivots_;
};

// sum and intersection of subspaces (inputs need not be reduced)
GfpMat span_sum(const GfpMat& a, const GfpMat& b);
GfpMat intersect_spaces(const GfpMat& a, const GfpMat& b);

/**
 * Kernel of the linear map taking row i of dom to row i of img (rows
 * correspond 1:1). Returned rows are combinations of dom's rows, i.e. live
 * in dom's ambient space. dom must be reduced.
 */
GfpMat kernel_into(const GfpMat& dom, const GfpMat& img);

namespace kernels {

// Reference implementations and OpenMP variants. Both must agree exactly;
// the parallel form distributes the elimination / product loops only.
int rref_serial(GfpMat& m);
int rref_parallel(GfpMat& m);

// Appends to out every product (row of a) * (row of b) in the group algebra
// whose multiplication table is mul (n x n element indices).
void product_rows_serial(const GfpMat& a, const GfpMat& b, const int* mul,
                         int n, GfpMat& out);
void product_rows_parallel(const GfpMat& a, const GfpMat& b, const int* mul,
                           int n, GfpMat& out);

} // namespace kernels

// dispatch on parallel_enabled()
int rref_dispatch(GfpMat& m);
GfpMat product_span(const GfpMat& a, const GfpMat& b, const int* mul, int n);

// convenience on Vec
Vec vec_add(const Vec& a, const Vec& b, int p);
Vec vec_sub(const Vec& a, const Vec& b, int p);
bool vec_is_zero(const Vec& a);

} // namespace mip
