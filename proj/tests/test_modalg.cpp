#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mip/catalog.hpp"
#include "mip/gfp.hpp"
#include "mip/group.hpp"
#include "mip/modalg.hpp"
#include "mip/pgroup.hpp"

using namespace mip;

namespace {

// Heisenberg group mod 3: triples (a,b,c), (a,b,c)(d,e,f)=(a+d,b+e,c+f+ae).
// Gives a nonabelian group at an odd prime, order 27, exponent 3, class 2.
Group heisenberg27() {
    auto idx = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };
    std::vector<int> table(27 * 27);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    for (int e = 0; e < 3; ++e)
                        for (int f = 0; f < 3; ++f)
                            table[(size_t)idx(a, b, c) * 27 + idx(d, e, f)] =
                                idx((a + d) % 3, (b + e) % 3,
                                    (c + f + a * e) % 3);
    return group_from_cayley(std::move(table), 27);
}

// kernel of FG -> F[G/N] computed straight from the quotient projection
GfpMat projection_kernel(const GroupAlgebra& A, const Elems& N) {
    Quotient q = quotient(*A.G, N);
    GfpMat dom = full_space(A);
    dom.rref();
    GfpMat img(A.p, q.Q.n);
    for (int g = 0; g < A.n; ++g) img.append_row(unit_vec(q.proj[g], q.Q.n));
    return kernel_into(dom, img);
}

std::vector<int> chain_dims(const DeltaChain& ch) {
    std::vector<int> d;
    for (const GfpMat& m : ch.pw) d.push_back((int)m.rank());
    return d;
}

} // namespace

TEST_SUITE("modalg") {

TEST_CASE("algebra plumbing: units, products, powers, augmentation") {
    Group C4 = cyclic_group(4);
    GroupAlgebra A = group_algebra(C4);
    CHECK(A.p == 2);
    CHECK(A.n == 4);
    int r = 1; // a generator of C4 sits somewhere; find one of order 4
    for (int g = 0; g < 4; ++g)
        if (C4.eorder[g] == 4) r = g;
    Vec x = elem_minus_one(A, r);
    CHECK(augmentation(A, x) == 0);
    CHECK(augmentation(A, unit_vec(r, 4)) == 1);
    // (r - 1)^2 = r^2 - 2r + 1 = r^2 + 1 over F2
    Vec x2 = algebra_mul(A, x, x);
    CHECK(x2 == vec_add(unit_vec(C4.at(r, r), 4), unit_vec(0, 4), 2));
    CHECK(algebra_pow(A, x, 4) == Vec(4, 0));
    CHECK(algebra_pow(A, x, 3) == algebra_mul(A, x2, x));
    CHECK_THROWS_AS(group_algebra(cyclic_group(6)), NotPGroup);
}

TEST_CASE("augmentation ideal has codimension one") {
    for (const Group& G : {cyclic_group(2), dihedral_group(8),
                           quaternion_group(16), heisenberg27()}) {
        GroupAlgebra A = group_algebra(G);
        GfpMat d = augmentation_ideal(A);
        CHECK((int)d.rank() == A.n - 1);
        for (int i = 0; i < (int)d.rows(); ++i)
            CHECK(augmentation(A, d.row(i)) == 0);
        CHECK((int)full_space(A).rank() == A.n);
    }
}

TEST_CASE("delta chain dimensions for small cyclic algebras") {
    // F2[C2]: Delta is one-dimensional and squares to zero
    GroupAlgebra A2 = group_algebra(cyclic_group(2));
    DeltaChain c2 = delta_chain(A2);
    CHECK(chain_dims(c2) == std::vector<int>{2, 1, 0});
    CHECK(nilpotency_index(c2) == 2);

    // F2[C4] = F2[t]/(t^4): dimensions step down by one
    GroupAlgebra A4 = group_algebra(cyclic_group(4));
    DeltaChain c4 = delta_chain(A4);
    CHECK(chain_dims(c4) == std::vector<int>{4, 3, 2, 1, 0});
    CHECK(nilpotency_index(c4) == 4);

    // F3[C3]
    DeltaChain c3 = delta_chain(group_algebra(cyclic_group(3)));
    CHECK(chain_dims(c3) == std::vector<int>{3, 2, 1, 0});

    // Klein four: Delta^2 is spanned by the all-ones vector
    GroupAlgebra AV = group_algebra(abelian_group({2, 2}));
    DeltaChain cv = delta_chain(AV);
    CHECK(chain_dims(cv) == std::vector<int>{4, 3, 1, 0});
    CHECK(delta_power(cv, 2).contains_vec(Vec{1, 1, 1, 1}));
}

TEST_CASE("delta chain of the dihedral algebra of order 8") {
    GroupAlgebra A = group_algebra(dihedral_group(8));
    DeltaChain ch = delta_chain(A);
    CHECK(chain_dims(ch) == std::vector<int>{8, 7, 5, 3, 1, 0});
    CHECK(nilpotency_index(ch) == 5);
    // clamping past the end stays at the zero space
    CHECK(delta_power(ch, 9).is_zero_space());
}

TEST_CASE("relative augmentation ideals match quotient kernels") {
    Group D8 = dihedral_group(8);
    GroupAlgebra A = group_algebra(D8);
    for (const Elems& N : all_subgroups(D8)) {
        if (!is_normal_subgroup(D8, N)) continue;
        GfpMat ra = relative_augmentation(A, N);
        CHECK((int)ra.rank() == D8.n - D8.n / N.count());
        CHECK(ra.same_space(projection_kernel(A, N)));
    }
    Group H = heisenberg27();
    GroupAlgebra AH = group_algebra(H);
    Elems Z = center(H);
    CHECK(relative_augmentation(AH, Z).same_space(projection_kernel(AH, Z)));
}

TEST_CASE("relative augmentation of a non-normal subgroup still has the free-module dimension") {
    Group D8 = dihedral_group(8);
    GroupAlgebra A = group_algebra(D8);
    for (const Elems& N : all_subgroups(D8)) {
        if (is_normal_subgroup(D8, N)) continue;
        CHECK((int)relative_augmentation(A, N).rank() ==
              D8.n - D8.n / N.count());
        CHECK((int)subgroup_diff_span(A, N).rank() == N.count() - 1);
    }
}

TEST_CASE("commutator and center subspaces") {
    GroupAlgebra A = group_algebra(dihedral_group(8));
    CHECK((int)commutator_subspace(A).rank() == 3); // |G| - #classes
    CHECK((int)center_subspace(A).rank() == 5);     // #classes
    CHECK((int)center_cap_commutator(A).rank() == 3);
    CHECK(center_cap_commutator(A).same_space(
        intersect_spaces(center_subspace(A), commutator_subspace(A))));

    GroupAlgebra AH = group_algebra(heisenberg27());
    CHECK((int)center_subspace(AH).rank() == 11);
    CHECK((int)commutator_subspace(AH).rank() == 16);

    // abelian: commutator subspace is zero, center is everything
    GroupAlgebra AA = group_algebra(abelian_group({4, 2}));
    CHECK(commutator_subspace(AA).is_zero_space());
    CHECK((int)center_subspace(AA).rank() == 8);
}

TEST_CASE("commutator subspace sits inside the square of the augmentation ideal") {
    for (const Group& G : {dihedral_group(8), quaternion_group(8),
                           dihedral_group(16), heisenberg27()}) {
        GroupAlgebra A = group_algebra(G);
        DeltaChain ch = delta_chain(A);
        CHECK(delta_power(ch, 2).contains(commutator_subspace(A)));
    }
}

TEST_CASE("smallest ideal generated by a central difference is the relative augmentation ideal") {
    Group D8 = dihedral_group(8);
    GroupAlgebra A = group_algebra(D8);
    Elems Z = center(D8);
    int z = -1;
    for (int g : Z.list())
        if (g != 0) z = g;
    GfpMat seed(A.p, A.n);
    seed.append_row(elem_minus_one(A, z));
    CHECK(smallest_ideal(A, seed).same_space(relative_augmentation(A, Z)));

    // a generator of C4 generates the whole augmentation ideal
    Group C4 = cyclic_group(4);
    GroupAlgebra A4 = group_algebra(C4);
    GfpMat s4(A4.p, 4);
    int r = -1;
    for (int g = 0; g < 4; ++g)
        if (C4.eorder[g] == 4) r = g;
    s4.append_row(elem_minus_one(A4, r));
    CHECK(smallest_ideal(A4, s4).same_space(augmentation_ideal(A4)));
}

TEST_CASE("the central commutator space is already an ideal of the center") {
    for (const Group& G : {dihedral_group(8), quaternion_group(16),
                           heisenberg27()}) {
        GroupAlgebra A = group_algebra(G);
        GfpMat zc = center_cap_commutator(A);
        CHECK(smallest_center_ideal(A, zc).same_space(zc));
    }
}

TEST_CASE("dimension subgroups from the delta chain match the group recursion") {
    for (const Group& G :
         {cyclic_group(4), dihedral_group(8), quaternion_group(8),
          dihedral_group(16), abelian_group({2, 2}), heisenberg27(),
          direct_product(cyclic_group(2), dihedral_group(8)).P}) {
        GroupAlgebra A = group_algebra(G);
        DeltaChain ch = delta_chain(A);
        std::vector<Elems> da = dimension_subgroups(A, ch);
        std::vector<Elems> dr = jennings_by_recursion(G);
        REQUIRE(da.size() == dr.size());
        for (size_t i = 0; i < da.size(); ++i) CHECK(da[i] == dr[i]);
    }
}

TEST_CASE("jennings layer ranks count the graded dimensions") {
    Group D8 = dihedral_group(8);
    GroupAlgebra A = group_algebra(D8);
    auto d8 = dimension_subgroups(A, delta_chain(A));
    CHECK(jennings_layer_ranks(D8, d8) == std::vector<int>{2, 1});

    Group D16 = dihedral_group(16);
    GroupAlgebra B = group_algebra(D16);
    auto d16 = dimension_subgroups(B, delta_chain(B));
    CHECK(jennings_layer_ranks(D16, d16) == std::vector<int>{2, 1, 0, 1});

    // graded dimension identity: t(G) = 1 + sum n (p-1) rank_n
    for (const Group& G : {dihedral_group(8), dihedral_group(16),
                           quaternion_group(16), heisenberg27()}) {
        GroupAlgebra AG = group_algebra(G);
        DeltaChain ch = delta_chain(AG);
        auto ranks = jennings_layer_ranks(G, dimension_subgroups(AG, ch));
        long long t = 1;
        for (size_t i = 0; i < ranks.size(); ++i)
            t += (long long)(i + 1) * (AG.p - 1) * ranks[i];
        CHECK(t == nilpotency_index(ch));
    }
}

TEST_CASE("kernels of central power maps") {
    // F2[C4] = F2[t]/(t^4): x^2 = 0 exactly on span{t^2, t^3}
    GroupAlgebra A4 = group_algebra(cyclic_group(4));
    GfpMat k4 = omega_center(A4, 1);
    CHECK((int)k4.rank() == 2);
    DeltaChain c4 = delta_chain(A4);
    CHECK(delta_power(c4, 2).same_space(k4));

    GroupAlgebra A2 = group_algebra(cyclic_group(2));
    CHECK(omega_center(A2, 1).same_space(augmentation_ideal(A2)));

    // center of F2[D8]: squares of class sums land in F, kernel is a1 = a2
    GroupAlgebra AD = group_algebra(dihedral_group(8));
    CHECK((int)omega_center(AD, 1).rank() == 4);
    CHECK(omega_center(AD, 0).is_zero_space());
    // for large n the kernel is every nilpotent central element
    GfpMat zcap = intersect_spaces(center_subspace(AD), augmentation_ideal(AD));
    CHECK(omega_center(AD, 3).same_space(zcap));

    GroupAlgebra AH = group_algebra(heisenberg27());
    GfpMat kh = omega_center(AH, 1);
    for (int i = 0; i < (int)kh.rows(); ++i)
        CHECK(vec_is_zero(algebra_pow(AH, kh.row(i), 3)));
}

TEST_CASE("power images of commutative subspaces, spanned vs exhaustive") {
    GroupAlgebra A4 = group_algebra(cyclic_group(4));
    GfpMat all4 = full_space(A4);
    GfpMat sq = power_image(A4, all4, 1);
    CHECK((int)sq.rank() == 2); // span{1, r^2}
    CHECK(sq.same_space(power_image_exhaustive(A4, all4, 1)));
    CHECK(power_image(A4, all4, 2).same_space(
        power_image_exhaustive(A4, all4, 2)));

    GroupAlgebra AV = group_algebra(abelian_group({2, 2}));
    CHECK(power_image(AV, full_space(AV), 1)
              .same_space(power_image_exhaustive(AV, full_space(AV), 1)));

    GroupAlgebra AD = group_algebra(dihedral_group(8));
    GfpMat z = center_subspace(AD);
    GfpMat zsq = power_image(AD, z, 1);
    CHECK((int)zsq.rank() == 1);
    CHECK(zsq.contains_vec(unit_vec(0, 8)));
    CHECK(zsq.same_space(power_image_exhaustive(AD, z, 1)));

    GroupAlgebra AH = group_algebra(heisenberg27());
    GfpMat zh = center_subspace(AH);
    CHECK(power_image(AH, zh, 1)
              .same_space(power_image_exhaustive(AH, zh, 1)));
}

TEST_CASE("residue power map: rank and isotropic counts") {
    GroupAlgebra AD = group_algebra(dihedral_group(8));
    ResidueSquares rd = residue_power_map(AD, delta_chain(AD));
    CHECK(rd.rank == 2);
    CHECK(rd.isotropic.size() == 2); // the reflection direction and one mix

    GroupAlgebra AQ = group_algebra(quaternion_group(8));
    ResidueSquares rq = residue_power_map(AQ, delta_chain(AQ));
    CHECK(rq.rank == 2);
    CHECK(rq.isotropic.empty());

    GroupAlgebra A4 = group_algebra(cyclic_group(4));
    ResidueSquares r4 = residue_power_map(A4, delta_chain(A4));
    CHECK(r4.rank == 1);
    CHECK(r4.isotropic.empty());
}

TEST_CASE("socle membership of the radical square, decided three ways") {
    // direct group witness: an involution outside the frattini subgroup
    Omega1Report d8 = omega1_in_delta_squared(group_algebra(dihedral_group(8)));
    CHECK(d8.verdict == Tri::False);
    REQUIRE(d8.witness.has_value());
    {
        GroupAlgebra A = group_algebra(dihedral_group(8));
        CHECK(vec_is_zero(algebra_pow(A, *d8.witness, 2)));
        DeltaChain ch = delta_chain(A);
        CHECK(delta_power(ch, 1).contains_vec(*d8.witness));
        CHECK(!delta_power(ch, 2).contains_vec(*d8.witness));
    }

    // no isotropic residue at all
    CHECK(omega1_in_delta_squared(group_algebra(quaternion_group(8))).verdict ==
          Tri::True);
    CHECK(omega1_in_delta_squared(group_algebra(quaternion_group(16))).verdict ==
          Tri::True);
    CHECK(omega1_in_delta_squared(group_algebra(cyclic_group(4))).verdict ==
          Tri::True);

    // elementary abelian: plenty of involutions outside delta^2
    CHECK(omega1_in_delta_squared(group_algebra(abelian_group({2, 2}))).verdict ==
          Tri::False);
    CHECK(omega1_in_delta_squared(group_algebra(cyclic_group(2))).verdict ==
          Tri::False);

    // odd prime
    CHECK(omega1_in_delta_squared(group_algebra(cyclic_group(9))).verdict ==
          Tri::True);
    CHECK(omega1_in_delta_squared(group_algebra(cyclic_group(3))).verdict ==
          Tri::False);
}

TEST_CASE("power maps are additive modulo the commutator subspace") {
    for (const Group& G : {dihedral_group(8), quaternion_group(16),
                           semidihedral_group(16), heisenberg27()}) {
        GroupAlgebra A = group_algebra(G);
        check_power_additivity(A, 1, 11, 60);
        check_power_additivity(A, 2, 12, 60);
    }
    // abelian: additivity is exact, commutator subspace is zero
    check_power_additivity(group_algebra(abelian_group({4, 2})), 1, 13, 60);
}

TEST_CASE("center structure checks pass on small algebras") {
    for (const Group& G :
         {dihedral_group(8), quaternion_group(8), dihedral_group(16),
          abelian_group({4, 2}), heisenberg27(),
          direct_product(cyclic_group(2), dihedral_group(8)).P}) {
        check_center_structure(group_algebra(G));
    }
}

TEST_CASE("filtration of a direct product splits") {
    check_product_filtration(cyclic_group(2), dihedral_group(8));
    check_product_filtration(cyclic_group(2), cyclic_group(4));
    check_product_filtration(abelian_group({2, 2}), quaternion_group(8));
    check_product_filtration(cyclic_group(3), cyclic_group(9));
}

TEST_CASE("socle and frattini augmentation ideals behave") {
    for (const Group& G :
         {dihedral_group(8), quaternion_group(8), abelian_group({4, 2}),
          cyclic_group(8), abelian_group({2, 2}), heisenberg27(),
          direct_product(cyclic_group(2), dihedral_group(8)).P}) {
        check_socle_frattini_augmentation(group_algebra(G));
    }
}

TEST_CASE("abelian power-omega ideals match in both presentations") {
    for (int m : {0, 1, 2})
        for (int n : {0, 1, 2}) {
            check_abelian_power_ideal(group_algebra(abelian_group({4, 2})), m,
                                      n, true);
            check_abelian_power_ideal(group_algebra(abelian_group({8, 2})), m,
                                      n, false);
        }
    check_abelian_power_ideal(group_algebra(abelian_group({9, 3})), 1, 1,
                              true);
}

TEST_CASE("central power-omega ideals on nonabelian groups") {
    for (int m : {0, 1})
        for (int n : {0, 1}) {
            check_power_omega_ideal(group_algebra(dihedral_group(8)), m, n);
            check_power_omega_ideal(group_algebra(quaternion_group(8)), m, n);
        }
    check_power_omega_ideal(group_algebra(dihedral_group(16)), 1, 1);
    check_power_omega_ideal(group_algebra(heisenberg27()), 1, 1);
}

TEST_CASE("starred power ideals") {
    for (int n : {0, 1, 2}) {
        check_mho_star_ideal(group_algebra(dihedral_group(8)), n);
        check_mho_star_ideal(group_algebra(quaternion_group(8)), n);
        check_mho_star_ideal(group_algebra(abelian_group({4, 2})), n);
    }
    check_mho_star_ideal(group_algebra(heisenberg27()), 1);
}

TEST_CASE("center cap relative augmentation splits over the group center") {
    Group D8 = dihedral_group(8);
    GroupAlgebra A = group_algebra(D8);
    Elems g = commutator_subgroup(D8);
    for (const Elems& N : all_subgroups(D8)) {
        if (!g.subset_of(N)) continue;
        check_center_cap_relative(A, N); // N >= gamma is automatically normal
    }
    Group Q8 = quaternion_group(8);
    GroupAlgebra AQ = group_algebra(Q8);
    for (const Elems& N : all_subgroups(Q8)) {
        if (!commutator_subgroup(Q8).subset_of(N)) continue;
        check_center_cap_relative(AQ, N);
    }
}

TEST_CASE("theta ideals of the center have the predicted codimension") {
    GroupAlgebra A = group_algebra(dihedral_group(8));
    CHECK(check_theta_subspace(A, 0, 1).center_codim == 1);
    CHECK(check_theta_subspace(A, 1, 1).center_codim == 2);
    for (int m : {0, 1, 2})
        for (int n : {0, 1, 2}) {
            check_theta_subspace(A, m, n);
            check_theta_subspace(group_algebra(quaternion_group(8)), m, n);
        }
    check_theta_subspace(group_algebra(heisenberg27()), 1, 1);
    check_theta_subspace(group_algebra(abelian_group({4, 2})), 1, 1);
}

} // TEST_SUITE
