#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mip/group.hpp"
#include "mip/modalg.hpp"
#include "mip/pgroup.hpp"

namespace mip {

// For each n >= 0, the abelian types of the four quotients/sections
//   G / gamma(G) Omega_n(Z(G))
//   gamma(G) Omega_n(Z(G)) / gamma(G)
//   Z(G) cap mho_n(G) gamma(G)
//   Z(G) / (Z(G) cap mho_n(G) gamma(G))
// all of which are determined by the group algebra.
struct QuotientSeriesEntry {
    int n;
    AbelianType over_gamma_omega;  // G / gamma Omega_n(Z)
    AbelianType gamma_omega_layer; // gamma Omega_n(Z) / gamma
    AbelianType center_cap_mho;    // Z cap mho_n(G) gamma
    AbelianType center_mod_mho;    // Z / (Z cap mho_n(G) gamma)
    bool operator==(const QuotientSeriesEntry&) const = default;
};
std::vector<QuotientSeriesEntry> quotient_series(const Group& G);

// The twelve sections determined by the algebra, at n = 1 (Soc = Omega_1(Z),
// Frat = mho_1(G) gamma(G)), as abelian types.
struct SectionList {
    AbelianType g_over_gamma;          // G/gamma
    AbelianType g_over_gamma_soc;      // G/(gamma Soc)
    AbelianType g_over_gamma_center;   // G/(gamma Z)
    AbelianType gamma_soc_over_gamma;  // gamma Soc / gamma
    AbelianType gamma_center_over_gamma; // gamma Z / gamma
    AbelianType g_over_frat_soc;       // G/(Frat Soc)
    AbelianType center;                // Z
    AbelianType center_cap_frat;       // Z cap Frat
    AbelianType center_cap_gamma;      // Z cap gamma
    AbelianType center_mod_frat;       // Z/(Z cap Frat)
    AbelianType center_mod_gamma;      // Z/(Z cap gamma)
    AbelianType soc_cap_frat;          // Soc cap Frat
    long long order_over_soc_index = 0; // |G| / |Soc : Soc cap Frat|
    bool operator==(const SectionList&) const = default;
};
SectionList section_list(const Group& G);

// Optional imported annotation that is not computed here: the number of
// generators of the mod-p cohomology ring.
struct EAnnotation {
    int e = 0;
    std::string source;
};

struct Fingerprint {
    long long order = 0;
    int p = 0;
    std::string name;
    std::vector<QuotientSeriesEntry> series; // n = 0 .. log_p|G|
    SectionList sections;
    std::vector<long long> k_seq; // k_n = classes of p^n-th powers, n=0..log
    std::vector<long long> a_seq; // a_r = classes of max elem ab of rank r
    int dg = 0;                   // minimal generator count
    std::vector<int> jennings_ranks;
    Tri omega1_in_delta2 = Tri::Inconclusive;
    long long soc_order = 0;
    long long soc_cap_frat_order = 0;
    std::optional<EAnnotation> e_annotation;
};
Fingerprint fingerprint(const Group& G, const std::string& name = "");

// Recomputes the quotient-series data through the canonical algebra-side
// ideal constructions for the given (n, m) and compares dimensions against
// the group-side computation. True iff everything matches.
bool algebra_crosscheck(const Group& G, int nth, int mth);

struct CompareResult {
    bool distinguished = false;
    std::string field;     // first differing field, fixed evaluation order
    std::string lhs, rhs;  // printable values
};
// Field order: order, sections (12 + derived), k_seq, a_seq, series,
// dg, jennings, soc sizes, omega1 verdicts, then e annotations when both
// sides carry one.
CompareResult compare_fingerprints(const Fingerprint& A, const Fingerprint& B);

std::string fingerprint_json(const Fingerprint& fp);
void print_fingerprint(std::ostream& out, const Fingerprint& fp);

} // namespace mip
