#include "mip/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "mip/parallel.hpp"

namespace mip {

namespace {

inline uint64_t xs64(uint64_t& s) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
}

inline uint64_t mix2(uint64_t a, uint64_t b) {
    uint64_t x = a + 0x9e3779b97f4a7c15ULL + (b << 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

int smallest_prime_factor(int n) {
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

} // namespace

int Group::plog() const {
    if (n == 1) return 0;
    if (!prime) throw NotPGroup("plog: order is not a prime power");
    int k = 0;
    long long m = n;
    while (m > 1) {
        m /= prime;
        ++k;
    }
    return k;
}

int Group::pow(int g, long long e) const {
    if (e < 0) {
        g = inv[g];
        e = -e;
    }
    int r = 0, x = g;
    while (e) {
        if (e & 1) r = at(r, x);
        x = at(x, x);
        e >>= 1;
    }
    return r;
}

int Group::exponent() const {
    long long l = 1;
    for (int g = 0; g < n; ++g) l = std::lcm(l, (long long)eorder[g]);
    return (int)l;
}

namespace kernels {

bool associativity_serial(const int* mul, int n, int full_cap,
                          long long samples, uint64_t seed) {
    auto at = [&](int a, int b) { return mul[(size_t)a * n + b]; };
    if (n <= full_cap) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int ab = at(a, b);
                for (int c = 0; c < n; ++c)
                    if (at(ab, c) != at(a, at(b, c))) return false;
            }
        return true;
    }
    uint64_t s = seed ? seed : 0x9e3779b97f4a7c15ULL;
    for (long long i = 0; i < samples; ++i) {
        int a = (int)(xs64(s) % n);
        int b = (int)(xs64(s) % n);
        int c = (int)(xs64(s) % n);
        if (at(at(a, b), c) != at(a, at(b, c))) return false;
    }
    return true;
}

bool associativity_parallel(const int* mul, int n, int full_cap,
                            long long samples, uint64_t seed) {
#ifndef _OPENMP
    return associativity_serial(mul, n, full_cap, samples, seed);
#else
    auto at = [&](int a, int b) { return mul[(size_t)a * n + b]; };
    bool ok = true;
    if (n <= full_cap) {
        const long long nn = (long long)n * n;
#pragma omp parallel for schedule(static) reduction(&& : ok)
        for (long long t = 0; t < nn; ++t) {
            if (!ok) continue;
            const int a = (int)(t / n), b = (int)(t % n);
            const int ab = at(a, b);
            bool mine = true;
            for (int c = 0; c < n; ++c)
                if (at(ab, c) != at(a, at(b, c))) {
                    mine = false;
                    break;
                }
            ok = ok && mine;
        }
        return ok;
    }
    // same triple stream as the serial path
    std::vector<int> trip(3 * samples);
    uint64_t s = seed ? seed : 0x9e3779b97f4a7c15ULL;
    for (long long i = 0; i < 3 * samples; ++i) trip[i] = (int)(xs64(s) % n);
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (long long i = 0; i < samples; ++i) {
        if (!ok) continue;
        const int a = trip[3 * i], b = trip[3 * i + 1], c = trip[3 * i + 2];
        ok = ok && (at(at(a, b), c) == at(a, at(b, c)));
    }
    return ok;
#endif
}

} // namespace kernels

bool table_associative(const std::vector<int>& mul, int n, int full_cap,
                       long long samples, uint64_t seed) {
    return parallel_enabled()
               ? kernels::associativity_parallel(mul.data(), n, full_cap,
                                                 samples, seed)
               : kernels::associativity_serial(mul.data(), n, full_cap,
                                               samples, seed);
}

Group group_from_cayley(std::vector<int> table, int n) {
    if (n <= 0) throw ValidationFailed("group order must be positive");
    if ((long long)table.size() != (long long)n * n)
        throw ValidationFailed("multiplication table has wrong size");
    for (int x : table)
        if (x < 0 || x >= n)
            throw ValidationFailed("table entry out of range");
    for (int g = 0; g < n; ++g)
        if (table[g] != g || table[(size_t)g * n] != g)
            throw ValidationFailed("identity must sit at index 0");
    std::vector<char> seen(n);
    for (int g = 0; g < n; ++g) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int h = 0; h < n; ++h) {
            int v = table[(size_t)g * n + h];
            if (seen[v])
                throw ValidationFailed("row " + std::to_string(g) +
                                       " is not a permutation");
            seen[v] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int h = 0; h < n; ++h) {
            int v = table[(size_t)h * n + g];
            if (seen[v])
                throw ValidationFailed("column " + std::to_string(g) +
                                       " is not a permutation");
            seen[v] = 1;
        }
    }
    if (!table_associative(table, n))
        throw ValidationFailed("multiplication table is not associative");

    Group G;
    G.n = n;
    G.mul = std::move(table);
    G.inv.assign(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (G.at(g, h) == 0) {
                G.inv[g] = h;
                break;
            }
    G.eorder.assign(n, 1);
    for (int g = 1; g < n; ++g) {
        int x = g, k = 1;
        while (x != 0) {
            x = G.at(x, g);
            ++k;
        }
        G.eorder[g] = k;
    }
    if (n > 1) {
        int p = smallest_prime_factor(n);
        long long m = n;
        while (m % p == 0) m /= p;
        G.prime = (m == 1) ? p : 0;
    }
    return G;
}

Group group_from_permutations(const std::vector<std::vector<int>>& gens,
                              int order_cap) {
    if (gens.empty())
        throw ValidationFailed("need at least one permutation generator");
    const int d = (int)gens[0].size();
    if (d <= 0) throw NotAPermutation("empty permutation");
    for (const auto& g : gens) {
        if ((int)g.size() != d)
            throw NotAPermutation("generators have different degrees");
        std::vector<char> seen(d, 0);
        for (int x : g) {
            if (x < 0 || x >= d || seen[x])
                throw NotAPermutation("images are not a permutation of the domain");
            seen[x] = 1;
        }
    }

    using Perm = std::vector<int>;
    auto compose = [d](const Perm& a, const Perm& b) {
        Perm r(d);
        for (int x = 0; x < d; ++x) r[x] = a[b[x]];
        return r;
    };

    std::vector<Perm> elems;
    std::map<Perm, int> index;
    Perm id(d);
    std::iota(id.begin(), id.end(), 0);
    elems.push_back(id);
    index.emplace(id, 0);

    auto push = [&](const Perm& q) {
        auto it = index.find(q);
        if (it != index.end()) return;
        if ((int)elems.size() >= order_cap)
            throw OrderCapExceeded("closure exceeds order cap " +
                                   std::to_string(order_cap));
        index.emplace(q, (int)elems.size());
        elems.push_back(q);
    };

    // Dimino: grow the subgroup one generator at a time, appending whole
    // cosets of the previous subgroup so only representatives get tested.
    for (size_t i = 0; i < gens.size(); ++i) {
        if (index.count(gens[i])) continue;
        const std::vector<Perm> old_elems = elems;
        const int old_order = (int)old_elems.size();
        const int rep_start = (int)elems.size();
        for (const auto& h : old_elems) push(compose(h, gens[i]));
        for (int pos = rep_start; pos < (int)elems.size(); pos += old_order) {
            const Perm rep = elems[pos];
            for (size_t j = 0; j <= i; ++j) {
                Perm t = compose(rep, gens[j]);
                if (!index.count(t))
                    for (const auto& h : old_elems) push(compose(h, t));
            }
        }
    }

    const int n = (int)elems.size();
    std::vector<int> table((size_t)n * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            table[(size_t)g * n + h] = index.at(compose(elems[g], elems[h]));
    return group_from_cayley(std::move(table), n);
}

int Elems::count() const {
    int c = 0;
    for (uint64_t w : bits) c += __builtin_popcountll(w);
    return c;
}

std::vector<int> Elems::list() const {
    std::vector<int> out;
    out.reserve(count());
    for (int w = 0; w < (int)bits.size(); ++w) {
        uint64_t x = bits[w];
        while (x) {
            out.push_back(w * 64 + __builtin_ctzll(x));
            x &= x - 1;
        }
    }
    return out;
}

bool Elems::subset_of(const Elems& o) const {
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & ~o.bits[i]) return false;
    return true;
}

Elems closure(const Group& G, const std::vector<int>& seed) {
    Elems S(G.n);
    S.set(0);
    std::vector<int> work{0};
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int s : seed) {
            int y = G.at(x, s);
            if (!S.test(y)) {
                S.set(y);
                work.push_back(y);
            }
        }
    }
    return S;
}

Elems trivial_subgroup(const Group& G) {
    Elems S(G.n);
    S.set(0);
    return S;
}

Elems full_subgroup(const Group& G) {
    Elems S(G.n);
    for (int g = 0; g < G.n; ++g) S.set(g);
    return S;
}

bool is_subgroup(const Group& G, const Elems& S) {
    if (S.n != G.n || !S.test(0)) return false;
    auto l = S.list();
    for (int a : l) {
        if (!S.test(G.inv[a])) return false;
        for (int b : l)
            if (!S.test(G.at(a, b))) return false;
    }
    return true;
}

bool is_normal_subgroup(const Group& G, const Elems& S) {
    if (!is_subgroup(G, S)) return false;
    for (int s : S.list())
        for (int x = 0; x < G.n; ++x)
            if (!S.test(G.conj(s, x))) return false;
    return true;
}

bool is_abelian_subset(const Group& G, const Elems& S) {
    auto l = S.list();
    for (size_t i = 0; i < l.size(); ++i)
        for (size_t j = i + 1; j < l.size(); ++j)
            if (G.at(l[i], l[j]) != G.at(l[j], l[i])) return false;
    return true;
}

Elems subgroup_product(const Group& G, const Elems& A, const Elems& B) {
    auto seed = A.list();
    auto bl = B.list();
    seed.insert(seed.end(), bl.begin(), bl.end());
    return closure(G, seed);
}

Elems elems_intersect(const Elems& A, const Elems& B) {
    Elems S(A.n);
    for (size_t i = 0; i < S.bits.size(); ++i) S.bits[i] = A.bits[i] & B.bits[i];
    return S;
}

ConjClasses conjugacy_classes(const Group& G) {
    ConjClasses cc;
    cc.class_of.assign(G.n, -1);
    for (int g = 0; g < G.n; ++g) {
        if (cc.class_of[g] != -1) continue;
        int id = (int)cc.members.size();
        std::set<int> orbit;
        for (int x = 0; x < G.n; ++x) orbit.insert(G.conj(g, x));
        cc.members.emplace_back(orbit.begin(), orbit.end());
        for (int m : cc.members.back()) cc.class_of[m] = id;
    }
    return cc;
}

Quotient quotient(const Group& G, const Elems& N) {
    if (!is_subgroup(G, N))
        throw ValidationFailed("quotient: subset is not a subgroup");
    if (!is_normal_subgroup(G, N))
        throw NotNormal("quotient: subgroup is not normal");
    auto nl = N.list();
    std::vector<int> rep_of(G.n, -1);
    std::vector<int> reps;
    for (int g = 0; g < G.n; ++g) {
        if (rep_of[g] != -1) continue;
        for (int s : nl) rep_of[G.at(g, s)] = g;
        reps.push_back(g);
    }
    const int m = (int)reps.size();
    std::vector<int> qidx(G.n, -1);
    for (int i = 0; i < m; ++i) qidx[reps[i]] = i;
    std::vector<int> table((size_t)m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[(size_t)i * m + j] = qidx[rep_of[G.at(reps[i], reps[j])]];
    Quotient out;
    out.Q = group_from_cayley(std::move(table), m);
    out.proj.resize(G.n);
    for (int g = 0; g < G.n; ++g) out.proj[g] = qidx[rep_of[g]];
    return out;
}

Embedded subgroup_group(const Group& G, const Elems& S) {
    if (!is_subgroup(G, S))
        throw ValidationFailed("subgroup_group: subset is not a subgroup");
    Embedded e;
    e.to_parent = S.list();
    const int m = (int)e.to_parent.size();
    e.from_parent.assign(G.n, -1);
    for (int i = 0; i < m; ++i) e.from_parent[e.to_parent[i]] = i;
    std::vector<int> table((size_t)m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[(size_t)i * m + j] =
                e.from_parent[G.at(e.to_parent[i], e.to_parent[j])];
    e.H = group_from_cayley(std::move(table), m);
    return e;
}

ProductGroup direct_product(const Group& A, const Group& B) {
    const int na = A.n, nb = B.n, n = na * nb;
    std::vector<int> table((size_t)n * n);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    table[(size_t)(a1 * nb + b1) * n + (a2 * nb + b2)] =
                        A.at(a1, a2) * nb + B.at(b1, b2);
    ProductGroup pg;
    pg.P = group_from_cayley(std::move(table), n);
    pg.embed_a.resize(na);
    pg.embed_b.resize(nb);
    for (int a = 0; a < na; ++a) pg.embed_a[a] = a * nb;
    for (int b = 0; b < nb; ++b) pg.embed_b[b] = b;
    return pg;
}

std::vector<int> generating_set(const Group& G) {
    std::vector<int> gens;
    Elems got = trivial_subgroup(G);
    while (got.count() < G.n) {
        int pick = -1;
        for (int g = 0; g < G.n; ++g) {
            if (got.test(g)) continue;
            if (pick < 0 || G.eorder[g] > G.eorder[pick]) pick = g;
        }
        gens.push_back(pick);
        got = closure(G, gens);
    }
    return gens;
}

// ---------------------------------------------------------------------
// isomorphism search

namespace {

std::vector<uint64_t> element_signatures(const Group& G) {
    auto cc = conjugacy_classes(G);
    std::vector<int> csize(G.n), rc2(G.n, 0), rc3(G.n, 0);
    for (int g = 0; g < G.n; ++g)
        csize[g] = (int)cc.members[cc.class_of[g]].size();
    for (int h = 0; h < G.n; ++h) {
        int h2 = G.at(h, h);
        rc2[h2]++;
        rc3[G.at(h2, h)]++;
    }
    std::vector<uint64_t> sig(G.n);
    for (int g = 0; g < G.n; ++g)
        sig[g] = mix2(mix2(G.eorder[g], csize[g]), mix2(rc2[g], rc3[g]));
    for (int round = 0; round < 3; ++round) {
        std::vector<uint64_t> nxt(G.n);
        for (int g = 0; g < G.n; ++g) {
            int sq = G.at(g, g);
            int cu = G.at(sq, g);
            nxt[g] = mix2(sig[g], mix2(sig[sq], mix2(sig[cu], sig[G.inv[g]])));
        }
        sig.swap(nxt);
    }
    return sig;
}

struct IsoChain {
    std::vector<int> gens;                  // chosen generators of A
    std::vector<int> order;                 // position -> element
    std::vector<int> pos_of;                // element -> position
    std::vector<std::array<int, 2>> def;    // position -> defining pair of
                                            // positions, {-1,-1} for seeds
    std::vector<int> level_start;           // per level: first new position
};

IsoChain build_chain(const Group& A, const std::vector<uint64_t>& sigA,
                     const std::map<uint64_t, int>& sigB_count) {
    IsoChain ch;
    ch.pos_of.assign(A.n, -1);
    ch.order.push_back(0);
    ch.pos_of[0] = 0;
    ch.def.push_back({-1, -1});

    auto grow = [&](int gen) {
        ch.level_start.push_back((int)ch.order.size());
        ch.gens.push_back(gen);
        if (ch.pos_of[gen] == -1) {
            ch.pos_of[gen] = (int)ch.order.size();
            ch.order.push_back(gen);
            ch.def.push_back({-1, -1});
        }
        // worklist closure; every new element records how it was formed
        std::vector<int> work{ch.pos_of[gen]};
        size_t wi = 0;
        while (wi < work.size()) {
            int w = work[wi++];
            int sz = (int)ch.order.size();
            for (int u = 0; u < sz; ++u) {
                for (int dir = 0; dir < 2; ++dir) {
                    int x = dir ? A.at(ch.order[w], ch.order[u])
                                : A.at(ch.order[u], ch.order[w]);
                    if (ch.pos_of[x] != -1) continue;
                    ch.pos_of[x] = (int)ch.order.size();
                    ch.order.push_back(x);
                    ch.def.push_back(dir ? std::array<int, 2>{w, u}
                                         : std::array<int, 2>{u, w});
                    work.push_back(ch.pos_of[x]);
                }
            }
        }
    };

    while ((int)ch.order.size() < A.n) {
        int pick = -1;
        long long pick_key0 = 0;
        for (int g = 0; g < A.n; ++g) {
            if (ch.pos_of[g] != -1) continue;
            auto it = sigB_count.find(sigA[g]);
            long long cands = it == sigB_count.end() ? 0 : it->second;
            // fewest candidates first, then higher order
            long long key = cands * 10000 - A.eorder[g];
            if (pick < 0 || key < pick_key0) {
                pick = g;
                pick_key0 = key;
            }
        }
        grow(pick);
    }
    ch.level_start.push_back((int)ch.order.size());
    return ch;
}

struct IsoSearch {
    const Group& A;
    const Group& B;
    const IsoChain& ch;
    const std::vector<uint64_t>& sigA;
    const std::vector<uint64_t>& sigB;
    std::vector<std::vector<int>> cand; // per level
    std::vector<int> phi;
    std::vector<char> used;
    long long budget;
    long long steps = 0;

    void charge(long long k) {
        steps += k;
        if (steps > budget)
            throw SearchBudgetExceeded(
                "isomorphism search exceeded its node budget");
    }

    bool dfs(size_t level) {
        if (level == ch.gens.size()) return true;
        const int lo = ch.level_start[level];
        const int hi = ch.level_start[level + 1];
        for (int b : cand[level]) {
            charge(1);
            if (used[b]) continue;
            std::vector<int> trail;
            bool ok = true;
            for (int pos = lo; pos < hi && ok; ++pos) {
                int elem = ch.order[pos];
                int img;
                if (ch.def[pos][0] < 0) {
                    img = b;
                } else {
                    int bu = phi[ch.order[ch.def[pos][0]]];
                    int bv = phi[ch.order[ch.def[pos][1]]];
                    img = B.at(bu, bv);
                }
                charge(1);
                if (used[img] || sigA[elem] != sigB[img]) {
                    ok = false;
                    break;
                }
                phi[elem] = img;
                used[img] = 1;
                trail.push_back(elem);
            }
            if (ok) {
                // products within the enlarged subgroup must commute with phi;
                // pairs fully inside the previous level were already checked
                charge((long long)hi * hi - (long long)lo * lo);
                for (int u = 0; u < hi && ok; ++u) {
                    int v0 = (u < lo) ? lo : 0;
                    int gu = ch.order[u];
                    for (int v = v0; v < hi; ++v) {
                        int gv = ch.order[v];
                        if (phi[A.at(gu, gv)] != B.at(phi[gu], phi[gv])) {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if (ok && dfs(level + 1)) return true;
            for (int e : trail) {
                used[phi[e]] = 0;
                phi[e] = -1;
            }
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Group& A,
                                                 const Group& B,
                                                 long long budget) {
    if (A.n != B.n) return std::nullopt;
    if (A.n == 1) return std::vector<int>{0};
    {
        auto ea = A.eorder, eb = B.eorder;
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        if (ea != eb) return std::nullopt;
    }
    auto sigA = element_signatures(A);
    auto sigB = element_signatures(B);
    {
        auto sa = sigA, sb = sigB;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::map<uint64_t, int> sigB_count;
    for (auto s : sigB) sigB_count[s]++;

    IsoChain ch = build_chain(A, sigA, sigB_count);
    IsoSearch srch{A, B, ch, sigA, sigB, {}, {}, {}, budget, 0};
    srch.cand.resize(ch.gens.size());
    for (size_t l = 0; l < ch.gens.size(); ++l) {
        for (int b = 0; b < B.n; ++b)
            if (sigB[b] == sigA[ch.gens[l]]) srch.cand[l].push_back(b);
        if (srch.cand[l].empty()) return std::nullopt;
    }
    srch.phi.assign(A.n, -1);
    srch.used.assign(B.n, 0);
    srch.phi[0] = 0;
    srch.used[0] = 1;
    if (!srch.dfs(0)) return std::nullopt;

    // paranoia: the level checks cover every pair, re-verify cheaply anyway
    if (A.n <= 512) {
        for (int u = 0; u < A.n; ++u)
            for (int v = 0; v < A.n; ++v)
                if (srch.phi[A.at(u, v)] != B.at(srch.phi[u], srch.phi[v]))
                    throw Error("isomorphism search produced a bad map");
    }
    return srch.phi;
}

bool isomorphic(const Group& A, const Group& B, long long budget) {
    return find_isomorphism(A, B, budget).has_value();
}

AbelianType abelian_type(const Group& A) {
    for (int a = 0; a < A.n; ++a)
        for (int b = a + 1; b < A.n; ++b)
            if (A.at(a, b) != A.at(b, a))
                throw NotAbelian("abelian_type: group is not abelian");
    AbelianType t;
    t.mho_sizes.push_back(A.n);
    if (A.n == 1) return t;
    if (!A.prime) throw NotPGroup("abelian_type: order is not a prime power");
    const int p = A.prime;
    std::set<int> cur;
    for (int g = 0; g < A.n; ++g) cur.insert(g);
    while (cur.size() > 1) {
        std::set<int> nxt;
        for (int g : cur) nxt.insert(A.pow(g, p));
        cur.swap(nxt);
        t.mho_sizes.push_back((long long)cur.size());
    }
    auto lg = [&](long long v) {
        int k = 0;
        while (v > 1) {
            v /= p;
            ++k;
        }
        return k;
    };
    // #factors of order >= p^(j+1) is log_p of the j-th consecutive ratio
    std::vector<int> atleast;
    for (size_t i = 0; i + 1 < t.mho_sizes.size(); ++i)
        atleast.push_back(lg(t.mho_sizes[i] / t.mho_sizes[i + 1]));
    atleast.push_back(0);
    for (int j = (int)atleast.size() - 1; j >= 1; --j) {
        int cnt = atleast[j - 1] - atleast[j];
        long long q = 1;
        for (int k = 0; k < j; ++k) q *= p;
        for (int c = 0; c < cnt; ++c) t.cyclic_orders.push_back(q);
    }
    return t;
}

std::string AbelianType::str() const {
    std::string s = "[";
    for (size_t i = 0; i < cyclic_orders.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cyclic_orders[i]);
    }
    s += "]";
    return s;
}

} // namespace mip
