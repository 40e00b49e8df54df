#pragma once

#include <optional>
#include <string>

#include "mip/group.hpp"
#include "mip/modalg.hpp"

namespace mip {

// Two-generator 2-groups with a central cyclic subgroup <c> of order 2^m and
// dihedral quotient of order 2^n.  Presentation on a, b, c with
//   c^(2^m) = 1, [a,c] = [b,c] = 1,
//   a^2 = c^alpha, b^2 = c^beta, (ab)^(2^(n-1)) = c^gamma,
// where (alpha, beta, gamma) selects the kind:
//   D: (0, 0, 2^(m-1))
//   Q: (1, 1, 2^(m-1) + 2^(n-1) mod 2^m)
//   S: (0, 1, 2^(m-1) + 2^(n-2) mod 2^m)
enum class FamilyKind { D, Q, S };
const char* family_kind_str(FamilyKind k);
std::optional<FamilyKind> parse_family_kind(const std::string& s);

struct FamilyParams {
    FamilyKind kind;
    int m; // central order exponent, m >= 1
    int n; // dihedral quotient exponent, n >= 2
    long long order() const { return 1LL << (m + n); }
    std::string name() const; // e.g. "D(2^[3|4])"
};

struct FamilyGroup {
    FamilyParams params;
    Group G;
    int a, b, c; // element indices of the three generators
};

// Builds the group of order 2^(m+n) from the presentation above, as a Cayley
// table on normal forms (ab)^i a^j c^k.  Validates the defining relations and
// |Z|, |G/Z| before returning.  Throws ValidationFailed if the construction
// does not satisfy its own presentation.
FamilyGroup family_group(FamilyKind kind, int m, int n);

// The coincidences in the parameter range: S(2^[1|2]) = D(2^[1|2]) and
// S(2^[m|2]) = Q(2^[m|2]) for m > 1.  Returns the explicit isomorphism for
// the given m (images of every element), built from the generator images
//   m = 1:  a -> a, b -> ab
//   m > 1:  a -> a b c^(2^(m-2)-1), b -> b
// and verified before returning.
std::vector<int> exceptional_isomorphism(int m);

// Recognizer: if Z(G) is cyclic of order 2^m >= 2 and G/Z(G) is dihedral of
// order 2^n >= 4, returns the parameters of the unique family member G is
// isomorphic to.  Otherwise nullopt.
std::optional<FamilyParams> recognize_family(const Group& G);

// |Soc(G)| = p detects a cyclic center
bool has_cyclic_center(const Group& G);
// |G : gamma(G)Z(G)| = 4 detects a dihedral central quotient (2-groups)
bool has_dihedral_central_quotient(const Group& G);

struct QSDistinction {
    FamilyParams q_params, s_params;
    bool q_contained;        // Omega_1 subset Delta^2 holds for the Q member
    bool s_contained;        // and fails for the S member
    Vec s_witness;           // x = a - 1 in F[S...], x^2 = 0, x not in Delta^2
    std::vector<int> quotient_layer_ranks; // Jennings ranks of G/D_3(G)
    long long quotient_order;
};
// Separates Q(2^[m|n]) from S(2^[m|n]) for m > 1, n > 2 by the position of
// the squares-to-zero elements relative to Delta^2, witnessed inside the
// common order-16 quotient G/D_3(G).
QSDistinction qs_distinguish(int m, int n);

} // namespace mip
