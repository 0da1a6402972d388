#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "matroid/constructions.hpp"
#include "matroid/matroid.hpp"
#include "matroid/structure.hpp"

namespace matroidlab::testutil {

// Unpruned reference search: every disjoint (C, D) with the right leftover
// size, no independence or parallel-class reasoning.
inline bool naive_has_minor(const Matroid& host, const Matroid& pattern) {
    const int n = host.size();
    const int keep = pattern.size();
    if (keep > n) return false;
    const Mask full = host.full_mask();
    for (Mask c = 0; c <= full; ++c) {
        if (popcount(c) > n - keep) continue;
        const int d_size = n - keep - popcount(c);
        Matroid hc = host.contracted(c);
        bool found = !for_each_combination(hc.size(), d_size, [&](Mask d) {
            Matroid cand = hc.deleted(d);
            if (cand.rank() != pattern.rank()) return true;
            return !isomorphism(pattern, cand);
        });
        if (found) return true;
    }
    return false;
}

inline bool rank_axioms_hold(const Matroid& m) {
    const Mask full = m.full_mask();
    if (m.rank_of(0) != 0) return false;
    for (Mask x = 0; x <= full; ++x) {
        for (Mask rest = full & ~x; rest; rest &= rest - 1) {
            int e = lowest_bit(rest);
            int d = m.rank_of(x | bit(e)) - m.rank_of(x);
            if (d < 0 || d > 1) return false;
        }
    }
    for (Mask x = 0; x <= full; ++x)
        for (Mask y = 0; y <= full; ++y)
            if (m.rank_of(x) + m.rank_of(y) < m.rank_of(x | y) + m.rank_of(x & y)) return false;
    return true;
}

inline bool rank_axioms_sampled(const Matroid& m, int samples, unsigned seed) {
    std::mt19937 rng(seed);
    const Mask full = m.full_mask();
    std::uniform_int_distribution<Mask> dist(0, full);
    if (m.rank_of(0) != 0) return false;
    for (int i = 0; i < samples; ++i) {
        Mask x = dist(rng), y = dist(rng);
        if (m.rank_of(x) + m.rank_of(y) < m.rank_of(x | y) + m.rank_of(x & y)) return false;
        int e = int(dist(rng)) % m.size();
        Mask xe = x | bit(e);
        int d = m.rank_of(xe) - m.rank_of(x);
        if (d < 0 || d > 1) return false;
    }
    return true;
}

inline bool basis_exchange_holds(const Matroid& m) {
    auto bases = m.bases();
    for (Mask b1 : bases)
        for (Mask b2 : bases) {
            for (Mask r = b1 & ~b2; r; r &= r - 1) {
                int x = lowest_bit(r);
                bool swapped = false;
                for (Mask s = b2 & ~b1; s && !swapped; s &= s - 1) {
                    int y = lowest_bit(s);
                    Mask cand = (b1 & ~bit(x)) | bit(y);
                    swapped = m.is_basis(cand);
                }
                if (!swapped) return false;
            }
        }
    return true;
}

// All modular cuts by filtering every subset of the flat list against the
// two axioms directly.
inline std::vector<ModularCut> brute_modular_cuts(const Matroid& m) {
    auto flats = m.all_flats();
    const int nf = int(flats.size());
    std::vector<ModularCut> out;
    for (Mask pick = 0; pick < (Mask(1) << nf); ++pick) {
        bool ok = true;
        for (int i = 0; i < nf && ok; ++i) {
            if (!(pick & bit(i))) continue;
            for (int j = 0; j < nf && ok; ++j) {
                if (i == j) continue;
                if (subset_of(flats[i], flats[j]) && !(pick & bit(j))) ok = false;
            }
        }
        for (int i = 0; i < nf && ok; ++i) {
            if (!(pick & bit(i))) continue;
            for (int j = i + 1; j < nf && ok; ++j) {
                if (!(pick & bit(j))) continue;
                if (m.rank_of(flats[i]) + m.rank_of(flats[j]) ==
                    m.rank_of(flats[i] | flats[j]) + m.rank_of(flats[i] & flats[j])) {
                    int k = -1;
                    for (int t = 0; t < nf; ++t)
                        if (flats[t] == (flats[i] & flats[j])) k = t;
                    if (k < 0 || !(pick & bit(k))) ok = false;
                }
            }
        }
        if (!ok) continue;
        ModularCut cut;
        for (int i = 0; i < nf; ++i)
            if (pick & bit(i)) cut.flats.push_back(flats[i]);
        std::sort(cut.flats.begin(), cut.flats.end(), [&](Mask a, Mask b) {
            return std::pair(m.rank_of(a), a) < std::pair(m.rank_of(b), b);
        });
        out.push_back(std::move(cut));
    }
    std::sort(out.begin(), out.end(),
              [](const ModularCut& a, const ModularCut& b) { return a.flats < b.flats; });
    return out;
}

// Spanning-tree count of K4 by direct enumeration over edge triples.
inline int k4_spanning_trees() {
    const std::pair<int, int> edges[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    int count = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                std::vector<int> parent(4);
                std::iota(parent.begin(), parent.end(), 0);
                auto find = [&](int x) {
                    while (parent[x] != x) x = parent[x] = parent[parent[x]];
                    return x;
                };
                bool acyclic = true;
                for (int e : {a, b, c}) {
                    int u = find(edges[e].first), v = find(edges[e].second);
                    if (u == v) acyclic = false;
                    parent[u] = v;
                }
                if (acyclic) ++count;
            }
    return count;
}

}  // namespace matroidlab::testutil
