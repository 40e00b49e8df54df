#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mip/gfp.hpp"
#include "mip/group.hpp"

namespace mip {

enum class Tri { True, False, Inconclusive };
const char* tri_str(Tri t);

/**
 * The modular group algebra F_p[G] of a p-group over its defining prime.
 * Elements are dense coefficient vectors indexed by group element.
 */
struct GroupAlgebra {
    const Group* G = nullptr;
    int p = 0;
    int n = 0; // = |G| = dim
    const int* mul() const { return G->mul.data(); }
};
GroupAlgebra group_algebra(const Group& G); // throws NotPGroup

Vec unit_vec(int g, int n);
Vec elem_minus_one(const GroupAlgebra& A, int g); // basis(g) - basis(1)
Vec algebra_mul(const GroupAlgebra& A, const Vec& x, const Vec& y);
Vec algebra_pow(const GroupAlgebra& A, Vec x, long long e);
int augmentation(const GroupAlgebra& A, const Vec& x);

GfpMat full_space(const GroupAlgebra& A);
GfpMat augmentation_ideal(const GroupAlgebra& A);
// span{h - 1 : h in N} alone, no right multiplication by the group
GfpMat subgroup_diff_span(const GroupAlgebra& A, const Elems& N);
// Delta(FN) FG for a subgroup N; equals the kernel of FG -> F[G/N] when N
// is normal
GfpMat relative_augmentation(const GroupAlgebra& A, const Elems& N);
GfpMat commutator_subspace(const GroupAlgebra& A); // span{xy - yx}
GfpMat center_subspace(const GroupAlgebra& A);     // class sums
GfpMat center_cap_commutator(const GroupAlgebra& A); // non-singleton sums
GfpMat smallest_ideal(const GroupAlgebra& A, const GfpMat& seed);
// smallest ideal of Z(FG) containing seed (seed must be central)
GfpMat smallest_center_ideal(const GroupAlgebra& A, const GfpMat& seed);

struct DeltaChain {
    std::vector<GfpMat> pw; // pw[k] = Delta^k; pw[0] = FG; last entry is 0
};
DeltaChain delta_chain(const GroupAlgebra& A);
const GfpMat& delta_power(const DeltaChain& ch, int k); // clamps at the end
int nilpotency_index(const DeltaChain& ch); // least t with Delta^t = 0

// D_k = {g : g - 1 in Delta^k}, from D_1 = G down to the first trivial term
std::vector<Elems> dimension_subgroups(const GroupAlgebra& A,
                                       const DeltaChain& ch);
// log_p |D_k/D_(k+1)| for k = 1..len
std::vector<int> jennings_layer_ranks(const Group& G,
                                      const std::vector<Elems>& dser);

// {x in Z(FG) : x^(p^n) = 0}
GfpMat omega_center(const GroupAlgebra& A, int nth);
// {x^(p^m) : x in V} for V spanning a commutative subalgebra: a subspace,
// computed as the span of the p^m-th powers of a basis (valid over F_p).
GfpMat power_image(const GroupAlgebra& A, const GfpMat& V, int mth);
// same set by brute-force enumeration of V; p^dim(V) capped by 2^log2_cap
GfpMat power_image_exhaustive(const GroupAlgebra& A, const GfpMat& V, int mth,
                              int log2_cap = 20);

struct ResidueSquares {
    int rank = 0;                 // dim Delta/Delta^2
    std::vector<Vec> basis;       // coset representatives for that quotient
    std::vector<std::vector<uint8_t>> isotropic; // nonzero tuples whose
                                  // representative power lands in Delta^(p+1)
};
// the map Delta/Delta^2 -> Delta^p/Delta^(p+1), x -> x^p
ResidueSquares residue_power_map(const GroupAlgebra& A, const DeltaChain& ch,
                                 int rank_cap = 20);

struct Omega1Report {
    Tri verdict = Tri::Inconclusive;
    std::optional<Vec> witness; // x with x^p = 0, x in Delta \ Delta^2
    std::string method;
};
// decides Omega_1(FG) subseteq Delta^2; fallback search over Delta^2
// perturbations is capped at 2^fallback_log2 per isotropic coset
Omega1Report omega1_in_delta_squared(const GroupAlgebra& A,
                                     int fallback_log2 = 10);

// --- verification routines; each throws CheckFailed on a counterexample ---

// (x+y)^(p^n) = x^(p^n) + y^(p^n) modulo the commutator subspace, on random
// pairs
void check_power_additivity(const GroupAlgebra& A, int nth, uint64_t seed,
                            int trials);
// the five structural facts about Z(FG), gamma(FG) and class sums
void check_center_structure(const GroupAlgebra& A);
// Delta^k(F[KxL]) = Delta(FK)Delta^(k-1) (+) Delta(FL)^k for all k
void check_product_filtration(const Group& K, const Group& L);
// Delta(F Frat)FG in Delta^2;  Delta(F Soc)FG + Delta^2 = Omega_1(Z) + Delta^2
void check_socle_frattini_augmentation(const GroupAlgebra& A);
// abelian G: Delta(F mho_m(Omega_n(G)))FG = span of p^m-th powers of
// Omega_n(FG) times FG
void check_abelian_power_ideal(const GroupAlgebra& A, int mth, int nth,
                               bool exhaustive_crosscheck);
// Delta(F gamma(G)mho_m(Omega*_n(G)))FG is the smallest ideal containing
// gamma(FG) and mho_m(Omega_n(Z(FG)))
void check_power_omega_ideal(const GroupAlgebra& A, int mth, int nth);
// Delta(F mho*_n(G))FG is the smallest ideal containing gamma(FG) and the
// p^n-th powers of Delta(FG); n = 1 relates the Frattini subgroup to
// Delta-powers
void check_mho_star_ideal(const GroupAlgebra& A, int nth);
// Z(FG) cap Delta(FN)FG = Delta(F[Z cap N])FZ (+) (Z(FG) cap gamma(FG))
// for N >= gamma(G)
void check_center_cap_relative(const GroupAlgebra& A, const Elems& N);

struct ThetaReport {
    GfpMat theta;            // ideal of Z(FG) built from the m,n parameters
    long long center_codim;  // codim inside Z(FG)
};
// builds Theta = mho_m(Z(FG) cap Delta(F mho*_n)FG) Z(FG) + (Z cap gamma),
// checks it equals Delta(F[mho_m(Z cap mho*_n)]) FZ (+) (Z cap gamma) and
// that its codimension in Z(FG) is |Z : mho_m(Z cap mho*_n)|
ThetaReport check_theta_subspace(const GroupAlgebra& A, int mth, int nth);

} // namespace mip
