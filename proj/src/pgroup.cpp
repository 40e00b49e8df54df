#include "mip/pgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mip/errors.hpp"

namespace mip {

Elems center(const Group& G) {
    Elems z(G.n);
    for (int g = 0; g < G.n; ++g) {
        bool central = true;
        for (int x = 0; x < G.n && central; ++x)
            central = G.at(g, x) == G.at(x, g);
        if (central) z.set(g);
    }
    return z;
}

Elems centralizer(const Group& G, const Elems& S) {
    std::vector<int> ss = S.list();
    Elems c(G.n);
    for (int g = 0; g < G.n; ++g) {
        bool ok = true;
        for (int s : ss)
            if (G.at(g, s) != G.at(s, g)) {
                ok = false;
                break;
            }
        if (ok) c.set(g);
    }
    return c;
}

Elems commutator_subgroup(const Group& G) {
    std::vector<int> comms;
    Elems seen(G.n);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            int c = G.comm(a, b);
            if (!seen.test(c)) {
                seen.set(c);
                comms.push_back(c);
            }
        }
    return closure(G, comms);
}

Elems omega_subgroup(const Group& G, int nth) {
    int p = G.prime;
    if (!p) throw NotPGroup("omega of a non-p-group");
    long long q = 1;
    for (int i = 0; i < nth; ++i) q *= p;
    std::vector<int> gens;
    for (int g = 0; g < G.n; ++g)
        if (G.pow(g, q) == 0) gens.push_back(g);
    return closure(G, gens);
}

Elems mho_subgroup(const Group& G, int nth) {
    int p = G.prime;
    if (!p) throw NotPGroup("mho of a non-p-group");
    long long q = 1;
    for (int i = 0; i < nth; ++i) q *= p;
    std::vector<int> gens;
    Elems seen(G.n);
    for (int g = 0; g < G.n; ++g) {
        int h = G.pow(g, q);
        if (!seen.test(h)) {
            seen.set(h);
            gens.push_back(h);
        }
    }
    return closure(G, gens);
}

Elems mho_star(const Group& G, int nth) {
    return subgroup_product(G, mho_subgroup(G, nth), commutator_subgroup(G));
}

Elems omega_star(const Group& G, int nth) {
    Embedded Z = subgroup_group(G, center(G));
    Elems oz = omega_subgroup(Z.H, nth);
    Elems out(G.n);
    for (int h : oz.list()) out.set(Z.to_parent[h]);
    return out;
}

Elems frattini(const Group& G) { return mho_star(G, 1); }
Elems socle(const Group& G) { return omega_star(G, 1); }

int dg(const Group& G) {
    int p = G.prime;
    if (!p) throw NotPGroup("dg of a non-p-group");
    long long idx = G.n / (long long)frattini(G).count();
    int d = 0;
    while (idx > 1) {
        idx /= p;
        ++d;
    }
    return d;
}

int nilpotency_class(const Group& G) {
    // lower central series via repeated [L, G]
    Elems L = commutator_subgroup(G);
    int c = 1;
    while (L.count() > 1) {
        std::vector<int> gens;
        Elems seen(G.n);
        for (int a : L.list())
            for (int b = 0; b < G.n; ++b) {
                int x = G.comm(a, b);
                if (!seen.test(x)) {
                    seen.set(x);
                    gens.push_back(x);
                }
            }
        Elems next = closure(G, gens);
        if (next == L) break; // not nilpotent; callers only pass p-groups
        L = next;
        ++c;
    }
    return c;
}

int knum(const Group& G, int nth) {
    int p = G.prime;
    if (!p) throw NotPGroup("knum of a non-p-group");
    long long q = 1;
    for (int i = 0; i < nth; ++i) q *= p;
    ConjClasses cc = conjugacy_classes(G);
    std::vector<char> hit(cc.members.size(), 0);
    for (int g = 0; g < G.n; ++g) hit[cc.class_of[G.pow(g, q)]] = 1;
    int k = 0;
    for (char h : hit) k += h;
    return k;
}

namespace {

// all elementary abelian subgroups as bitsets, grown one commuting
// involution-layer generator at a time
std::vector<Elems> elementary_abelian_subgroups(const Group& G) {
    int p = G.prime;
    std::vector<int> order_p;
    for (int g = 1; g < G.n; ++g)
        if (G.eorder[g] == p) order_p.push_back(g);

    std::set<std::vector<uint64_t>> seen;
    std::vector<Elems> out;
    Elems triv = trivial_subgroup(G);
    seen.insert(triv.bits);
    out.push_back(triv);

    // BFS by rank
    std::vector<Elems> frontier{triv};
    while (!frontier.empty()) {
        std::vector<Elems> next;
        for (const Elems& E : frontier) {
            for (int g : order_p) {
                if (E.test(g)) continue;
                bool commutes = true;
                for (int x : E.list())
                    if (G.at(g, x) != G.at(x, g)) {
                        commutes = false;
                        break;
                    }
                if (!commutes) continue;
                Elems bigger = subgroup_product(G, E, closure(G, {g}));
                if (seen.insert(bigger.bits).second) {
                    next.push_back(bigger);
                    out.push_back(bigger);
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

} // namespace

MaxElemAb maximal_elementary_abelian(const Group& G) {
    int p = G.prime;
    if (!p) throw NotPGroup("elementary abelian survey of a non-p-group");
    std::vector<Elems> all = elementary_abelian_subgroups(G);

    // maximal = not contained in a larger one
    std::vector<Elems> maximal;
    for (const Elems& E : all) {
        bool contained = false;
        for (const Elems& F : all)
            if (E.count() < F.count() && E.subset_of(F)) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(E);
    }

    // conjugation orbits
    MaxElemAb res;
    std::set<std::vector<uint64_t>> used;
    for (const Elems& E : maximal) {
        if (used.count(E.bits)) continue;
        int orbit = 0;
        for (int x = 0; x < G.n; ++x) {
            Elems c(G.n);
            for (int e : E.list()) c.set(G.conj(e, x));
            if (used.insert(c.bits).second) ++orbit;
        }
        res.reps.push_back(E);
        long long sz = E.count();
        int r = 0;
        while (sz > 1) {
            sz /= p;
            ++r;
        }
        res.rank.push_back(r);
        res.orbit_size.push_back(orbit);
    }
    return res;
}

std::vector<int> a_numbers(const Group& G) {
    MaxElemAb m = maximal_elementary_abelian(G);
    std::vector<int> a(G.plog(), 0);
    for (size_t i = 0; i < m.reps.size(); ++i)
        if (m.rank[i] >= 1) a[m.rank[i] - 1] += 1;
    return a;
}

std::vector<Elems> jennings_by_recursion(const Group& G) {
    int p = G.prime;
    if (!p) throw NotPGroup("dimension series of a non-p-group");
    std::vector<Elems> D;
    D.push_back(full_subgroup(G)); // D_1
    while (D.back().count() > 1) {
        int n = (int)D.size() + 1; // computing D_n
        const Elems& prev = D[n - 2];
        const Elems& half = D[(n + p - 1) / p - 1]; // D_ceil(n/p)
        std::vector<int> gens;
        Elems seen(G.n);
        for (int a : prev.list())
            for (int b = 0; b < G.n; ++b) {
                int c = G.comm(a, b);
                if (!seen.test(c)) {
                    seen.set(c);
                    gens.push_back(c);
                }
            }
        for (int a : half.list()) {
            int c = G.pow(a, p);
            if (!seen.test(c)) {
                seen.set(c);
                gens.push_back(c);
            }
        }
        D.push_back(closure(G, gens));
    }
    return D;
}

bool is_dihedral_2group(const Group& G) {
    if (G.prime != 2) return false;
    std::vector<int> invol;
    for (int g = 1; g < G.n; ++g)
        if (G.eorder[g] == 2) invol.push_back(g);
    for (size_t i = 0; i < invol.size(); ++i)
        for (size_t j = i + 1; j < invol.size(); ++j)
            if ((int)closure(G, {invol[i], invol[j]}).count() == G.n)
                return true;
    return false;
}

std::vector<Elems> all_subgroups(const Group& G, int order_cap) {
    if (G.n > order_cap)
        throw EnumerationTooLarge("subgroup enumeration capped at order " +
                                  std::to_string(order_cap));
    std::set<std::vector<uint64_t>> seen;
    std::vector<Elems> out;
    Elems triv = trivial_subgroup(G);
    seen.insert(triv.bits);
    out.push_back(triv);
    std::vector<Elems> frontier{triv};
    while (!frontier.empty()) {
        std::vector<Elems> next;
        for (const Elems& E : frontier)
            for (int g = 1; g < G.n; ++g) {
                if (E.test(g)) continue;
                std::vector<int> gens = E.list();
                gens.push_back(g);
                Elems bigger = closure(G, gens);
                if (seen.insert(bigger.bits).second) {
                    next.push_back(bigger);
                    out.push_back(bigger);
                }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Elems& a, const Elems& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.bits < b.bits;
    });
    return out;
}

} // namespace mip
