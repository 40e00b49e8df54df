#include "mip/gfp.hpp"

#include <algorithm>
#include <cstring>

#include "mip/parallel.hpp"

namespace mip {

namespace {

int inv_mod(int a, int p) {
    // p prime, a != 0 mod p
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

} // namespace

GfpMat::GfpMat(int p, int cols) : p_(p), cols_(cols) {
    if (p < 2)
        throw Error("GfpMat: p must be prime, got " + std::to_string(p));
    words_ = (p == 2) ? (cols + 63) / 64 : 0;
    reduced_ = true; // empty matrix
}

GfpMat GfpMat::identity(int p, int n) {
    GfpMat m(p, n);
    m.append_zero_rows(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, 1);
        m.pivots_.push_back(i);
    }
    m.reduced_ = true;
    return m;
}

GfpMat GfpMat::from_rows(int p, int cols, const std::vector<Vec>& rows) {
    GfpMat m(p, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void GfpMat::append_row(const Vec& v) {
    if ((int)v.size() != cols_)
        throw Error("GfpMat: row length mismatch");
    append_zero_rows(1);
    int i = rows_ - 1;
    for (int c = 0; c < cols_; ++c)
        if (v[c] % p_) set(i, c, v[c] % p_);
    reduced_ = false;
    pivots_.clear();
}

void GfpMat::append_zero_rows(int n) {
    rows_ += n;
    if (p_ == 2)
        bits_.resize((size_t)rows_ * words_, 0);
    else
        vals_.resize((size_t)rows_ * cols_, 0);
}

void GfpMat::reserve_rows(int n) {
    if (p_ == 2)
        bits_.reserve((size_t)n * words_);
    else
        vals_.reserve((size_t)n * cols_);
}

Vec GfpMat::row(int i) const {
    Vec v(cols_, 0);
    for (int c = 0; c < cols_; ++c) v[c] = get(i, c);
    return v;
}

uint8_t GfpMat::get(int r, int c) const {
    if (p_ == 2)
        return (bits_[(size_t)r * words_ + c / 64] >> (c % 64)) & 1;
    return vals_[(size_t)r * cols_ + c];
}

void GfpMat::set(int r, int c, uint8_t v) {
    if (p_ == 2) {
        uint64_t& w = bits_[(size_t)r * words_ + c / 64];
        uint64_t bit = uint64_t(1) << (c % 64);
        if (v % 2)
            w |= bit;
        else
            w &= ~bit;
    } else {
        vals_[(size_t)r * cols_ + c] = v % p_;
    }
}

void GfpMat::swap_rows(int i, int j) {
    if (i == j) return;
    if (p_ == 2) {
        for (int w = 0; w < words_; ++w)
            std::swap(bits_[(size_t)i * words_ + w], bits_[(size_t)j * words_ + w]);
    } else {
        for (int c = 0; c < cols_; ++c)
            std::swap(vals_[(size_t)i * cols_ + c], vals_[(size_t)j * cols_ + c]);
    }
}

void GfpMat::trim_rows(int n) {
    rows_ = n;
    if (p_ == 2)
        bits_.resize((size_t)n * words_);
    else
        vals_.resize((size_t)n * cols_);
}

void GfpMat::rref() { rref_dispatch(*this); }

int GfpMat::rank() const {
    if (reduced_) return rows_;
    GfpMat c = *this;
    c.rref();
    return c.rows();
}

Vec GfpMat::reduce_vec(Vec v) const {
    if (!reduced_)
        throw Error("GfpMat::reduce_vec requires reduced form");
    if ((int)v.size() != cols_)
        throw Error("GfpMat: vector length mismatch");
    for (auto& x : v) x %= p_;
    for (int k = 0; k < rows_; ++k) {
        int c = pivots_[k];
        if (!v[c]) continue;
        int f = v[c];
        for (int j = 0; j < cols_; ++j)
            v[j] = (uint8_t)((v[j] + (p_ - f) * get(k, j)) % p_);
    }
    return v;
}

bool GfpMat::contains_vec(const Vec& v) const {
    return vec_is_zero(reduce_vec(v));
}

bool GfpMat::contains(const GfpMat& other) const {
    for (int i = 0; i < other.rows(); ++i)
        if (!contains_vec(other.row(i))) return false;
    return true;
}

bool GfpMat::same_space(const GfpMat& other) const {
    if (p_ != other.p_ || cols_ != other.cols_) return false;
    const GfpMat* a = this;
    const GfpMat* b = &other;
    GfpMat ca, cb;
    if (!a->reduced_) {
        ca = *a;
        ca.rref();
        a = &ca;
    }
    if (!b->reduced_) {
        cb = *b;
        cb.rref();
        b = &cb;
    }
    if (a->rows_ != b->rows_ || a->pivots_ != b->pivots_) return false;
    if (p_ == 2) return a->bits_ == b->bits_;
    return a->vals_ == b->vals_;
}

bool GfpMat::insert_reduce(Vec v) {
    if (!reduced_)
        throw Error("GfpMat::insert_reduce requires reduced form");
    v = reduce_vec(std::move(v));
    int lead = -1;
    for (int c = 0; c < cols_; ++c)
        if (v[c]) {
            lead = c;
            break;
        }
    if (lead < 0) return false;
    if (p_ > 2 && v[lead] != 1) {
        int f = inv_mod(v[lead], p_);
        for (auto& x : v) x = (uint8_t)(x * f % p_);
    }
    // clear the new pivot column in existing rows
    for (int k = 0; k < rows_; ++k) {
        int f = get(k, lead);
        if (!f) continue;
        for (int j = 0; j < cols_; ++j)
            set(k, j, (uint8_t)((get(k, j) + (p_ - f) * v[j]) % p_));
    }
    int pos = 0;
    while (pos < rows_ && pivots_[pos] < lead) ++pos;
    // splice the row in at pos
    if (p_ == 2) {
        std::vector<uint64_t> wv(words_, 0);
        for (int c = 0; c < cols_; ++c)
            if (v[c]) wv[c / 64] |= uint64_t(1) << (c % 64);
        bits_.insert(bits_.begin() + (size_t)pos * words_, wv.begin(), wv.end());
    } else {
        vals_.insert(vals_.begin() + (size_t)pos * cols_, v.begin(), v.end());
    }
    pivots_.insert(pivots_.begin() + pos, lead);
    ++rows_;
    return true;
}

namespace kernels {

int rref_serial(GfpMat& m) {
    const int n = m.cols_;
    const int p = m.p_;
    int r = 0;
    std::vector<int> piv;
    if (p == 2) {
        const int W = m.words_;
        for (int c = 0; c < n && r < m.rows_; ++c) {
            int sel = -1;
            for (int i = r; i < m.rows_; ++i)
                if ((m.wrow(i)[c / 64] >> (c % 64)) & 1) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            m.swap_rows(sel, r);
            const uint64_t* pr = m.wrow(r);
            for (int j = 0; j < m.rows_; ++j) {
                if (j == r) continue;
                uint64_t* rj = m.wrow(j);
                if ((rj[c / 64] >> (c % 64)) & 1)
                    for (int w = 0; w < W; ++w) rj[w] ^= pr[w];
            }
            piv.push_back(c);
            ++r;
        }
    } else {
        for (int c = 0; c < n && r < m.rows_; ++c) {
            int sel = -1;
            for (int i = r; i < m.rows_; ++i)
                if (m.get(i, c)) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            m.swap_rows(sel, r);
            int f = inv_mod(m.get(r, c), p);
            if (f != 1)
                for (int j = 0; j < n; ++j)
                    m.set(r, j, (uint8_t)(m.get(r, j) * f % p));
            for (int i = 0; i < m.rows_; ++i) {
                if (i == r) continue;
                int g = m.get(i, c);
                if (!g) continue;
                for (int j = 0; j < n; ++j)
                    m.set(i, j, (uint8_t)((m.get(i, j) + (p - g) * m.get(r, j)) % p));
            }
            piv.push_back(c);
            ++r;
        }
    }
    m.trim_rows(r);
    m.pivots_ = std::move(piv);
    m.reduced_ = true;
    return r;
}

int rref_parallel(GfpMat& m) {
#ifndef _OPENMP
    return rref_serial(m);
#else
    const int n = m.cols_;
    const int p = m.p_;
    int r = 0;
    std::vector<int> piv;
    if (p == 2) {
        const int W = m.words_;
        for (int c = 0; c < n && r < m.rows_; ++c) {
            int sel = -1;
            for (int i = r; i < m.rows_; ++i)
                if ((m.wrow(i)[c / 64] >> (c % 64)) & 1) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            m.swap_rows(sel, r);
            const uint64_t* pr = m.wrow(r);
#pragma omp parallel for schedule(static)
            for (int j = 0; j < m.rows_; ++j) {
                if (j == r) continue;
                uint64_t* rj = m.wrow(j);
                if ((rj[c / 64] >> (c % 64)) & 1)
                    for (int w = 0; w < W; ++w) rj[w] ^= pr[w];
            }
            piv.push_back(c);
            ++r;
        }
    } else {
        for (int c = 0; c < n && r < m.rows_; ++c) {
            int sel = -1;
            for (int i = r; i < m.rows_; ++i)
                if (m.get(i, c)) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            m.swap_rows(sel, r);
            int f = inv_mod(m.get(r, c), p);
            if (f != 1)
                for (int j = 0; j < n; ++j)
                    m.set(r, j, (uint8_t)(m.get(r, j) * f % p));
#pragma omp parallel for schedule(static)
            for (int i = 0; i < m.rows_; ++i) {
                if (i == r) continue;
                int g = m.get(i, c);
                if (!g) continue;
                for (int j = 0; j < n; ++j)
                    m.set(i, j, (uint8_t)((m.get(i, j) + (p - g) * m.get(r, j)) % p));
            }
            piv.push_back(c);
            ++r;
        }
    }
    m.trim_rows(r);
    m.pivots_ = std::move(piv);
    m.reduced_ = true;
    return r;
#endif
}

namespace {

inline void product_into_row2(const uint64_t* u, const uint64_t* v, int words,
                              const int* mul, int n, uint64_t* out) {
    for (int wu = 0; wu < words; ++wu) {
        uint64_t a = u[wu];
        while (a) {
            int g = wu * 64 + __builtin_ctzll(a);
            a &= a - 1;
            const int* mg = mul + (size_t)g * n;
            for (int wv = 0; wv < words; ++wv) {
                uint64_t b = v[wv];
                while (b) {
                    int h = wv * 64 + __builtin_ctzll(b);
                    b &= b - 1;
                    int k = mg[h];
                    out[k / 64] ^= uint64_t(1) << (k % 64);
                }
            }
        }
    }
}

inline void product_into_rowp(const uint8_t* u, const uint8_t* v, int p,
                              const int* mul, int n, uint8_t* out) {
    for (int g = 0; g < n; ++g) {
        if (!u[g]) continue;
        const int* mg = mul + (size_t)g * n;
        int ug = u[g];
        for (int h = 0; h < n; ++h) {
            if (!v[h]) continue;
            int k = mg[h];
            out[k] = (uint8_t)((out[k] + ug * v[h]) % p);
        }
    }
}

} // namespace

void product_rows_serial(const GfpMat& a, const GfpMat& b, const int* mul,
                         int n, GfpMat& out) {
    if (a.cols() != n || b.cols() != n || out.cols() != n)
        throw Error("product_rows: dimension mismatch");
    const int base = out.rows();
    const int ra = a.rows(), rb = b.rows();
    out.append_zero_rows(ra * rb);
    if (a.p() == 2) {
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < rb; ++j)
                product_into_row2(a.wrow(i), b.wrow(j), a.words(), mul, n,
                                  out.wrow(base + i * rb + j));
    } else {
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < rb; ++j)
                product_into_rowp(a.brow(i), b.brow(j), a.p(), mul, n,
                                  out.brow(base + i * rb + j));
    }
}

void product_rows_parallel(const GfpMat& a, const GfpMat& b, const int* mul,
                           int n, GfpMat& out) {
#ifndef _OPENMP
    product_rows_serial(a, b, mul, n, out);
#else
    if (a.cols() != n || b.cols() != n || out.cols() != n)
        throw Error("product_rows: dimension mismatch");
    const int base = out.rows();
    const int ra = a.rows(), rb = b.rows();
    out.append_zero_rows(ra * rb);
    if (a.p() == 2) {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < ra * rb; ++t)
            product_into_row2(a.wrow(t / rb), b.wrow(t % rb), a.words(), mul, n,
                              out.wrow(base + t));
    } else {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < ra * rb; ++t)
            product_into_rowp(a.brow(t / rb), b.brow(t % rb), a.p(), mul, n,
                              out.brow(base + t));
    }
#endif
}

} // namespace kernels

int rref_dispatch(GfpMat& m) {
    return parallel_enabled() ? kernels::rref_parallel(m)
                              : kernels::rref_serial(m);
}

GfpMat product_span(const GfpMat& a, const GfpMat& b, const int* mul, int n) {
    GfpMat out(a.p(), n);
    out.reserve_rows(a.rows() * b.rows());
    if (parallel_enabled())
        kernels::product_rows_parallel(a, b, mul, n, out);
    else
        kernels::product_rows_serial(a, b, mul, n, out);
    out.rref();
    return out;
}

GfpMat span_sum(const GfpMat& a, const GfpMat& b) {
    if (a.p() != b.p() || a.cols() != b.cols())
        throw Error("span_sum: shape mismatch");
    GfpMat m(a.p(), a.cols());
    for (int i = 0; i < a.rows(); ++i) m.append_row(a.row(i));
    for (int i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
    m.rref();
    return m;
}

GfpMat intersect_spaces(const GfpMat& a, const GfpMat& b) {
    if (a.p() != b.p() || a.cols() != b.cols())
        throw Error("intersect_spaces: shape mismatch");
    const int n = a.cols();
    GfpMat m(a.p(), 2 * n);
    for (int i = 0; i < a.rows(); ++i) {
        Vec r = a.row(i);
        Vec d(2 * n, 0);
        std::copy(r.begin(), r.end(), d.begin());
        std::copy(r.begin(), r.end(), d.begin() + n);
        m.append_row(d);
    }
    for (int i = 0; i < b.rows(); ++i) {
        Vec r = b.row(i);
        Vec d(2 * n, 0);
        std::copy(r.begin(), r.end(), d.begin());
        m.append_row(d);
    }
    m.rref();
    GfpMat res(a.p(), n);
    for (int i = 0; i < m.rows(); ++i) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            if (m.get(i, c)) left_zero = false;
        if (!left_zero) continue;
        Vec r(n, 0);
        for (int c = 0; c < n; ++c) r[c] = m.get(i, n + c);
        res.append_row(r);
    }
    res.rref();
    return res;
}

GfpMat kernel_into(const GfpMat& dom, const GfpMat& img) {
    if (dom.rows() != img.rows())
        throw Error("kernel_into: row count mismatch");
    const int k = dom.rows();
    const int w = img.cols();
    GfpMat m(dom.p(), w + k);
    for (int i = 0; i < k; ++i) {
        Vec r = img.row(i);
        Vec d(w + k, 0);
        std::copy(r.begin(), r.end(), d.begin());
        d[w + i] = 1;
        m.append_row(d);
    }
    m.rref();
    GfpMat res(dom.p(), dom.cols());
    for (int i = 0; i < m.rows(); ++i) {
        bool img_zero = true;
        for (int c = 0; c < w && img_zero; ++c)
            if (m.get(i, c)) img_zero = false;
        if (!img_zero) continue;
        Vec combo(dom.cols(), 0);
        for (int j = 0; j < k; ++j) {
            int coef = m.get(i, w + j);
            if (!coef) continue;
            Vec dj = dom.row(j);
            for (int c = 0; c < dom.cols(); ++c)
                combo[c] = (uint8_t)((combo[c] + coef * dj[c]) % dom.p());
        }
        res.append_row(combo);
    }
    res.rref();
    return res;
}

Vec vec_add(const Vec& a, const Vec& b, int p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (uint8_t)((a[i] + b[i]) % p);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b, int p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = (uint8_t)((a[i] + p - b[i] % p) % p);
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (auto x : a)
        if (x) return false;
    return true;
}

} // namespace mip
