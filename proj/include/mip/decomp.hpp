#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "mip/group.hpp"
#include "mip/invariants.hpp"
#include "mip/modalg.hpp"
#include "mip/pgroup.hpp"

namespace mip {

// G = T x U with T elementary abelian, T cap Frat(G) = 1,
// |T| = |Soc(G) : Soc(G) cap Frat(G)|, Soc(G) U = G and
// |U| = |G| / |Soc : Soc cap Frat|.  U then has no elementary abelian
// direct factor (Soc(U) <= Frat(U)).  T and U are unique up to isomorphism
// but not as subgroups; `seed` varies the choice when there is one.
struct ElementaryDecomposition {
    Elems T, U;
    Group Tg, Ug;                 // the factors as groups in their own right
    std::vector<int> t_of, u_of;  // g = t*u factorization, componentwise
    int t_rank = 0;               // log_p |T|
};
ElementaryDecomposition elementary_decomposition(const Group& G,
                                                 uint64_t seed = 0);

// The p-th power map passes through the decomposition: g^p = u(g)^p for
// every g (the T component is elementary abelian), and Frat(G) = Frat(U).
bool power_structure_commutes(const Group& G,
                              const ElementaryDecomposition& dec);

// The ideal I = Delta(FT)FG that realizes FG = I (+) FU:
//   codim I = |G| / |Soc : Soc cap Frat|, and for all n >= 1
//   I Delta^(n-1) + Delta^(n+1) = Delta(F Soc) Delta^(n-1) + Delta^(n+1).
// Both properties are verified, as is the induced algebra splitting
// (the projection FG -> FU along I is multiplicative on group elements).
struct ElementaryIdealReport {
    long long codim = 0;
    int checked_filtration_terms = 0;
};
ElementaryIdealReport elementary_ideal_report(
    const Group& G, const ElementaryDecomposition& dec);

struct ReducedComparison {
    int t_rank_a = 0, t_rank_b = 0;
    CompareResult reduced; // fingerprints of the complements U
    bool distinguished = false;
    std::string field;
};
// Compare after splitting off the elementary abelian direct factors:
// FG = FT (x) FU reduces the question to the ranks of T and the pair (U, V).
ReducedComparison reduce_and_compare(const Group& A, const Group& B);

} // namespace mip
