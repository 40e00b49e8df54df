#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mip/errors.hpp"

namespace mip {

constexpr int kOrderCap = 4096;
constexpr long long kIsoBudgetDefault = 100000000LL;

/**
 * Finite group as a dense multiplication table. The identity always has
 * index 0; every constructor enforces that.
 */
struct Group {
    int n = 0;
    std::vector<int> mul;    // n*n, mul[a*n+b] = index of a*b
    std::vector<int> inv;
    std::vector<int> eorder; // element orders
    int prime = 0;           // p if n is a power of the prime p, else 0

    int at(int a, int b) const { return mul[(size_t)a * n + b]; }
    bool is_prime_power() const { return n == 1 || prime != 0; }
    bool is_pgroup(int p) const { return n == 1 || prime == p; }
    int plog() const; // log_prime(n), 0 for the trivial group
    int conj(int g, int x) const { return at(at(x, g), inv[x]); } // x g x^-1
    int comm(int a, int b) const { return at(at(a, b), at(inv[a], inv[b])); }
    int pow(int g, long long e) const;
    int exponent() const;
};

// Builds and fully validates a group from a multiplication table.
// Associativity is checked exhaustively up to order `full_cap` inside
// table_associative and by random sampling above that.
Group group_from_cayley(std::vector<int> table, int n);

// Closure of 0-based permutation generators (Dimino, whole cosets at a
// time). Throws OrderCapExceeded past order_cap.
Group group_from_permutations(const std::vector<std::vector<int>>& gens,
                              int order_cap = kOrderCap);

// Subset of a fixed parent group's elements as a bitset.
struct Elems {
    int n = 0;
    std::vector<uint64_t> bits;

    Elems() = default;
    explicit Elems(int n_) : n(n_), bits((n_ + 63) / 64, 0) {}
    bool test(int g) const { return (bits[g / 64] >> (g % 64)) & 1; }
    void set(int g) { bits[g / 64] |= uint64_t(1) << (g % 64); }
    void reset(int g) { bits[g / 64] &= ~(uint64_t(1) << (g % 64)); }
    int count() const;
    std::vector<int> list() const;
    bool subset_of(const Elems& o) const;
    bool operator==(const Elems& o) const = default;
};

Elems closure(const Group& G, const std::vector<int>& seed);
Elems trivial_subgroup(const Group& G);
Elems full_subgroup(const Group& G);
bool is_subgroup(const Group& G, const Elems& S);
bool is_normal_subgroup(const Group& G, const Elems& S);
bool is_abelian_subset(const Group& G, const Elems& S);
Elems subgroup_product(const Group& G, const Elems& A, const Elems& B);
Elems elems_intersect(const Elems& A, const Elems& B);

struct ConjClasses {
    std::vector<int> class_of;             // element -> class id
    std::vector<std::vector<int>> members; // class id -> elements (ascending)
};
ConjClasses conjugacy_classes(const Group& G);

struct Quotient {
    Group Q;
    std::vector<int> proj; // parent element -> quotient element
};
// Cosets are represented by their smallest element; the coset of the
// identity maps to index 0. Throws NotNormal.
Quotient quotient(const Group& G, const Elems& N);

struct Embedded {
    Group H;
    std::vector<int> to_parent;
    std::vector<int> from_parent; // -1 for elements outside the subset
};
Embedded subgroup_group(const Group& G, const Elems& S);

struct ProductGroup {
    Group P;
    std::vector<int> embed_a; // a -> index of (a, 1)
    std::vector<int> embed_b; // b -> index of (1, b)
};
// Index of (a, b) is a * |B| + b.
ProductGroup direct_product(const Group& A, const Group& B);

// Small generating set, chosen greedily by lowest index.
std::vector<int> generating_set(const Group& G);

/**
 * Explicit isomorphism A -> B (image of every element of A), or nullopt.
 * Backtracking over generator images, pruned by iterated element
 * signatures (orders, class sizes, power maps, root counts). `budget`
 * caps elementary consistency steps; SearchBudgetExceeded past it.
 */
std::optional<std::vector<int>> find_isomorphism(
    const Group& A, const Group& B, long long budget = kIsoBudgetDefault);
bool isomorphic(const Group& A, const Group& B,
                long long budget = kIsoBudgetDefault);

/**
 * Isomorphism type of a finite abelian p-group, carried in two equivalent
 * forms: invariant factors, and the sizes of the iterated power subgroups
 * {g^(p^k)} whose ratios determine (and are determined by) the factors.
 */
struct AbelianType {
    std::vector<long long> cyclic_orders; // non-increasing
    std::vector<long long> mho_sizes;     // starts at |G|, ends at 1
    bool operator==(const AbelianType&) const = default;
    std::string str() const;
};
AbelianType abelian_type(const Group& A); // throws NotAbelian / NotPGroup

// Full triple check up to order full_cap, seeded random sampling above.
bool table_associative(const std::vector<int>& mul, int n,
                       int full_cap = 512, long long samples = 1000000,
                       uint64_t seed = 1);

namespace kernels {
bool associativity_serial(const int* mul, int n, int full_cap,
                          long long samples, uint64_t seed);
bool associativity_parallel(const int* mul, int n, int full_cap,
                            long long samples, uint64_t seed);
} // namespace kernels

} // namespace mip
