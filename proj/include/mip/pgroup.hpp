#pragma once

#include "mip/group.hpp"

namespace mip {

// Subgroup machinery for finite p-groups. Everything returns subsets of the
// parent group as Elems bitsets. Functions that depend on the prime throw
// NotPGroup when the order is not a prime power.

Elems center(const Group& G);
Elems commutator_subgroup(const Group& G);
Elems centralizer(const Group& G, const Elems& S);

Elems omega_subgroup(const Group& G, int nth); // <g : g^(p^n) = 1>
Elems mho_subgroup(const Group& G, int nth);   // <g^(p^n) : g in G>
Elems mho_star(const Group& G, int nth);       // mho_n(G) gamma(G)
Elems omega_star(const Group& G, int nth);     // Omega_n(Z(G))
Elems frattini(const Group& G);                // = mho_star(1)
Elems socle(const Group& G);                   // = omega_star(1)

int dg(const Group& G); // log_p |G : Frat(G)|, minimal generator count
int nilpotency_class(const Group& G);

// number of conjugacy classes that are classes of p^n-th powers
int knum(const Group& G, int nth);

struct MaxElemAb {
    std::vector<Elems> reps;     // one representative per conjugacy orbit
    std::vector<int> rank;       // log_p of the representative's order
    std::vector<int> orbit_size;
};
MaxElemAb maximal_elementary_abelian(const Group& G);
// a_seq[r-1] = number of orbits of maximal elementary abelian subgroups of
// rank r, for r = 1..plog
std::vector<int> a_numbers(const Group& G);

// D_1 = G, D_n = [D_(n-1), G] * mho_1(D_ceil(n/p)); ends with the first
// trivial term
std::vector<Elems> jennings_by_recursion(const Group& G);

// 2-group generated by two distinct involutions (Klein four counts)
bool is_dihedral_2group(const Group& G);

// every subgroup, ascending by order; guarded by order_cap
std::vector<Elems> all_subgroups(const Group& G, int order_cap = 128);

} // namespace mip
