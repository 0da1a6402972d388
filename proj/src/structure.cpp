#include "matroid/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace matroidlab {

int lambda(const Matroid& m, Mask a) {
    if (!subset_of(a, m.full_mask())) throw std::invalid_argument("side outside ground set");
    return m.rank_of(a) + m.rank_of(m.full_mask() & ~a) - m.rank();
}

bool is_connected(const Matroid& m) {
    const int n = m.size();
    if (n <= 1) return true;
    const Mask full = m.full_mask();
    for (Mask a = 1; a < full; ++a)
        if ((a & 1) && lambda(m, a) == 0) return false;
    return true;
}

bool is_three_connected(const Matroid& m) {
    const int n = m.size();
    if (n <= 1) return true;
    const Mask full = m.full_mask();
    for (Mask a = 1; a < full; ++a) {
        if (!(a & 1)) continue;
        int l = lambda(m, a);
        if (l == 0) return false;
        int small = std::min(popcount(a), n - popcount(a));
        if (l <= 1 && small >= 2) return false;
    }
    return true;
}

std::vector<Separation> find_separations(const Matroid& m, int k) {
    std::vector<Separation> out;
    const int n = m.size();
    const Mask full = m.full_mask();
    for (Mask a = 1; a < full; ++a) {
        if (!(a & 1)) continue;
        if (std::min(popcount(a), n - popcount(a)) < k) continue;
        int l = lambda(m, a);
        if (l <= k - 1) out.push_back({a, l, k});
    }
    return out;
}

namespace {

bool is_two_separation(const Matroid& m, Mask a) {
    Mask b = m.full_mask() & ~a;
    return popcount(a) >= 2 && popcount(b) >= 2 && lambda(m, a) <= 1;
}

void require_scc(const Matroid& m, const char* who) {
    if (!m.is_simple()) throw std::invalid_argument(std::string(who) + ": matroid not simple");
    if (!m.is_cosimple()) throw std::invalid_argument(std::string(who) + ": matroid not cosimple");
    if (!is_connected(m)) throw std::invalid_argument(std::string(who) + ": matroid not connected");
}

}  // namespace

Separation normalize_two_separation(const Matroid& m, Mask a) {
    require_scc(m, "normalize_two_separation");
    if (!is_two_separation(m, a))
        throw std::invalid_argument("normalize_two_separation: not a 2-separation");
    Mask side = m.full_closure(a);
    if (!is_two_separation(m, side))
        throw std::logic_error("full closure of a 2-separation side failed to stay a 2-separation");
    return {side, lambda(m, side), 2};
}

bool is_fan(const Matroid& m, const std::vector<int>& seq) {
    const int k = int(seq.size());
    if (k < 3) return false;
    Mask seen = 0;
    for (int e : seq) {
        if (e < 0 || e >= m.size() || (seen & bit(e))) return false;
        seen |= bit(e);
    }
    for (int parity = 0; parity < 2; ++parity) {
        bool ok = true;
        for (int i = 0; i + 2 < k; ++i) {
            Mask w = bit(seq[i]) | bit(seq[i + 1]) | bit(seq[i + 2]);
            bool want_tri = (i % 2 == 0) == (parity == 0);
            if (want_tri ? !m.is_triangle(w) : !m.is_triad(w)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

std::vector<Fan> all_leaf_fans(const Matroid& m, int exact_len = -1) {
    const int n = m.size();
    std::vector<Fan> leaves;
    std::vector<int> seq;
    Mask used = 0;

    std::function<void(bool)> dfs = [&](bool first_tri) {
        if (exact_len > 0 && int(seq.size()) == exact_len) {
            leaves.push_back({seq, first_tri});
            return;
        }
        bool extended = false;
        const int next_window = int(seq.size()) - 2;
        const bool want_tri = (next_window % 2 == 0) == first_tri;
        const int a = seq[seq.size() - 2], b = seq[seq.size() - 1];
        for (int e = 0; e < n; ++e) {
            if (used & bit(e)) continue;
            Mask w = bit(a) | bit(b) | bit(e);
            if (want_tri ? !m.is_triangle(w) : !m.is_triad(w)) continue;
            seq.push_back(e);
            used |= bit(e);
            dfs(first_tri);
            used &= ~bit(e);
            seq.pop_back();
            extended = true;
        }
        if (!extended && exact_len < 0) leaves.push_back({seq, first_tri});
    };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x == y || x == z || y == z) continue;
                Mask w = bit(x) | bit(y) | bit(z);
                seq = {x, y, z};
                used = w;
                if (m.is_triangle(w)) dfs(true);
                if (m.is_triad(w)) dfs(false);
            }
    return leaves;
}

std::vector<Fan> canonical_fans(std::vector<Fan> fans) {
    for (auto& f : fans) {
        std::vector<int> rev(f.seq.rbegin(), f.seq.rend());
        if (rev < f.seq) f.seq = std::move(rev);
    }
    std::sort(fans.begin(), fans.end(), [](const Fan& a, const Fan& b) {
        return a.seq < b.seq;
    });
    fans.erase(std::unique(fans.begin(), fans.end(),
                           [](const Fan& a, const Fan& b) { return a.seq == b.seq; }),
               fans.end());
    return fans;
}

}  // namespace

std::vector<Fan> find_fans(const Matroid& m) {
    std::vector<Fan> fans = canonical_fans(all_leaf_fans(m));
    std::vector<Fan> out;
    for (const Fan& f : fans) {
        bool dominated = false;
        for (const Fan& g : fans)
            if (g.seq.size() > f.seq.size() && subset_of(f.support(), g.support())) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(f);
    }
    return out;
}

std::vector<Fan> find_fans_of_length(const Matroid& m, int len) {
    return canonical_fans(all_leaf_fans(m, len));
}

std::vector<FanElement> classify_fan(const Matroid& m, const Fan& f) {
    if (!is_fan(m, f.seq)) throw std::invalid_argument("classify_fan: not a fan");
    const Mask sup = f.support();
    std::vector<Mask> tris;
    std::vector<int> idx = mask_to_indices(sup);
    for_each_combination_of(idx, 3, [&](Mask w) {
        if (m.is_triangle(w)) tris.push_back(w);
        return true;
    });
    const int k = int(f.seq.size());
    std::vector<FanElement> out(k);
    for (int i = 0; i < k; ++i) {
        int cnt = 0;
        for (Mask t : tris)
            if (t & bit(f.seq[i])) ++cnt;
        bool interior = i > 0 && i < k - 1;
        bool rim = interior ? cnt == 1 : cnt == 0;
        out[i] = rim ? FanElement::rim : FanElement::spoke;
    }
    return out;
}

bool is_maximal_fan(const Matroid& m, const Fan& f) {
    if (!is_fan(m, f.seq)) return false;
    for (const Fan& g : canonical_fans(all_leaf_fans(m)))
        if (g.seq.size() > f.seq.size() && subset_of(f.support(), g.support())) return false;
    return true;
}

Separation cover_fan_by_separation(const Matroid& m, const Fan& f, Mask a) {
    require_scc(m, "cover_fan_by_separation");
    if (!is_two_separation(m, a))
        throw std::invalid_argument("cover_fan_by_separation: not a 2-separation");
    if (!is_fan(m, f.seq)) throw std::invalid_argument("cover_fan_by_separation: not a fan");
    Mask t1 = bit(f.seq[0]) | bit(f.seq[1]) | bit(f.seq[2]);
    // Exactly one side meets the first window in >= 2 of its 3 elements.
    Mask start = popcount(a & t1) >= 2 ? a : m.full_mask() & ~a;
    Mask side = m.full_closure(start);
    if (!is_two_separation(m, side) || !subset_of(f.support(), side))
        throw std::logic_error("fan-covering separation construction failed");
    return {side, lambda(m, side), 2};
}

IsoMap IsoMap::inverse() const {
    IsoMap out;
    out.image.assign(image.size(), -1);
    for (int i = 0; i < int(image.size()); ++i) out.image[image[i]] = i;
    return out;
}

IsoMap IsoMap::compose_after(const IsoMap& first) const {
    IsoMap out;
    out.image.resize(first.image.size());
    for (int i = 0; i < int(first.image.size()); ++i) out.image[i] = image[first.image[i]];
    return out;
}

bool verify_map(const Matroid& a, const Matroid& b, const IsoMap& phi) {
    const int n = a.size();
    if (b.size() != n || int(phi.image.size()) != n) return false;
    Mask hit = 0;
    for (int i = 0; i < n; ++i) {
        if (phi.image[i] < 0 || phi.image[i] >= n) return false;
        hit |= bit(phi.image[i]);
    }
    if (popcount(hit) != n) return false;
    const Mask full = a.full_mask();
    for (Mask x = 0; x <= full; ++x) {
        Mask y = 0;
        for (Mask rest = x; rest; rest &= rest - 1) y |= bit(phi.image[lowest_bit(rest)]);
        if (a.rank_of(x) != b.rank_of(y)) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> element_keys(const Matroid& m) {
    const int n = m.size();
    std::vector<int> tdeg(n, 0), ddeg(n, 0);
    for (Mask t : m.triangles())
        for (int i : mask_to_indices(t)) ++tdeg[i];
    for (Mask t : m.triads())
        for (int i : mask_to_indices(t)) ++ddeg[i];
    std::vector<std::vector<int>> hsz(n);
    for (Mask h : m.hyperplanes()) {
        int s = popcount(h);
        for (int i : mask_to_indices(h)) hsz[i].push_back(s);
    }
    std::vector<std::vector<int>> keys(n);
    for (int i = 0; i < n; ++i) {
        std::sort(hsz[i].begin(), hsz[i].end());
        keys[i] = {m.rank_of(bit(i)), tdeg[i], ddeg[i]};
        keys[i].insert(keys[i].end(), hsz[i].begin(), hsz[i].end());
    }
    return keys;
}

struct IsoSearch {
    const Matroid& a;
    const Matroid& b;
    int n;
    std::vector<int> color_a, color_b;
    std::vector<int> order;        // domain traversal order over a's indices
    std::vector<int> image;        // a index -> b index
    std::vector<char> used;
    std::vector<Mask> sub_a, sub_b;  // all subsets of the assigned prefix
    std::function<bool(const IsoMap&)> sink;  // false stops the search

    // Colors equal-profile elements alike; returns false when the color
    // multisets already rule out any isomorphism.
    bool init(bool least_order) {
        n = a.size();
        if (b.size() != n || a.rank() != b.rank()) return false;
        auto ka = element_keys(a), kb = element_keys(b);
        std::map<std::vector<int>, int> palette;
        for (auto& k : ka) palette.emplace(k, 0);
        for (auto& k : kb) palette.emplace(k, 0);
        int next = 0;
        for (auto& [k, id] : palette) id = next++;
        color_a.resize(n);
        color_b.resize(n);
        std::vector<int> cnt_a(next, 0), cnt_b(next, 0);
        for (int i = 0; i < n; ++i) {
            color_a[i] = palette[ka[i]];
            color_b[i] = palette[kb[i]];
            ++cnt_a[color_a[i]];
            ++cnt_b[color_b[i]];
        }
        if (cnt_a != cnt_b) return false;
        order.resize(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        if (!least_order)
            std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
                return cnt_a[color_a[x]] < cnt_a[color_a[y]];
            });
        image.assign(n, -1);
        used.assign(n, 0);
        sub_a = {0};
        sub_b = {0};
        return true;
    }

    bool consistent(int x, int y) {
        const size_t sz = sub_a.size();
        for (size_t i = 0; i < sz; ++i)
            if (a.rank_of(sub_a[i] | bit(x)) != b.rank_of(sub_b[i] | bit(y))) return false;
        return true;
    }

    void push(int x, int y) {
        const size_t sz = sub_a.size();
        for (size_t i = 0; i < sz; ++i) {
            sub_a.push_back(sub_a[i] | bit(x));
            sub_b.push_back(sub_b[i] | bit(y));
        }
        image[x] = y;
        used[y] = 1;
    }

    void pop(int x, int y) {
        sub_a.resize(sub_a.size() / 2);
        sub_b.resize(sub_b.size() / 2);
        image[x] = -1;
        used[y] = 0;
    }

    bool search(int pos) {
        if (pos == n) {
            IsoMap phi{image};
            return sink(phi);
        }
        int x = order[pos];
        for (int y = 0; y < n; ++y) {
            if (used[y] || color_a[x] != color_b[y]) continue;
            if (!consistent(x, y)) continue;
            push(x, y);
            bool go_on = search(pos + 1);
            pop(x, y);
            if (!go_on) return false;
        }
        return true;
    }
};

std::optional<IsoMap> iso_search(const Matroid& a, const Matroid& b, bool least_order) {
    if (a.size() > 16 || b.size() > 16)
        throw std::invalid_argument("isomorphism search capped at 16 elements");
    IsoSearch s{a, b, 0, {}, {}, {}, {}, {}, {}, {}, nullptr};
    if (!s.init(least_order)) return std::nullopt;
    std::optional<IsoMap> found;
    s.sink = [&](const IsoMap& phi) {
        found = phi;
        return false;
    };
    s.search(0);
    return found;
}

}  // namespace

std::optional<IsoMap> isomorphism(const Matroid& a, const Matroid& b) {
    return iso_search(a, b, false);
}

std::optional<IsoMap> least_isomorphism(const Matroid& a, const Matroid& b) {
    return iso_search(a, b, true);
}

std::vector<IsoMap> automorphisms(const Matroid& m) {
    if (m.size() > 10) throw std::invalid_argument("automorphism enumeration capped at 10 elements");
    IsoSearch s{m, m, 0, {}, {}, {}, {}, {}, {}, {}, nullptr};
    std::vector<IsoMap> out;
    if (!s.init(true)) return out;
    s.sink = [&](const IsoMap& phi) {
        out.push_back(phi);
        return true;
    };
    s.search(0);
    return out;  // generated in lexicographic order already
}

std::vector<std::vector<int>> orbits(int n, const std::vector<IsoMap>& maps) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& phi : maps)
        for (int i = 0; i < n; ++i) {
            int ra = find(i), rb = find(phi.image[i]);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(members);
    return out;
}

bool is_transitive_on(const std::vector<IsoMap>& maps, const std::vector<int>& elems) {
    if (elems.empty()) return true;
    if (maps.empty()) return elems.size() == 1;
    auto orb = orbits(int(maps[0].image.size()), maps);
    for (const auto& o : orb) {
        bool any = false, all = true;
        for (int e : elems) {
            bool in = std::find(o.begin(), o.end(), e) != o.end();
            any = any || in;
            all = all && in;
        }
        if (any) return all && o.size() == elems.size();
    }
    return false;
}

namespace {

struct PatternInfo {
    int rank, size, tri, triad;
    bool simple;
};

PatternInfo pattern_info(const Matroid& p) {
    return {p.rank(), p.size(), int(p.triangles().size()), int(p.triads().size()), p.is_simple()};
}

bool screen_minor(const Matroid& cand, const PatternInfo& info) {
    if (int(cand.triangles().size()) != info.tri) return false;
    if (int(cand.triads().size()) != info.triad) return false;
    return true;
}

// Shared enumeration skeleton; visit() gets (C_host, D_host, minor) and
// returns false to stop the whole search.
template <class Visit>
void scan_minors(const Matroid& host, const Matroid& pattern, bool canonize_parallel,
                 Visit&& visit) {
    const int k = host.rank() - pattern.rank();
    const int d = host.size() - pattern.size() - k;
    if (k < 0 || d < 0) return;
    const PatternInfo info = pattern_info(pattern);
    const int n = host.size();
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;

    bool stopped = false;
    for_each_combination_of(all, k, [&](Mask c) {
        if (host.rank_of(c) != k) return true;  // contract sets stay independent
        Matroid hc = host.contracted(c);
        std::vector<int> pool_host = mask_to_indices(host.full_mask() & ~c);
        const int m = int(pool_host.size());
        std::vector<int> sub(m);
        for (int j = 0; j < m; ++j) sub[j] = j;

        const Mask hc_loops = hc.loops();
        if (info.simple && popcount(hc_loops) > d) return true;
        std::vector<Mask> par;
        if (info.simple && canonize_parallel) par = hc.parallel_classes();

        for_each_combination_of(sub, d, [&](Mask dm) {
            if (info.simple) {
                if (!subset_of(hc_loops, dm)) return true;
                if (canonize_parallel) {
                    for (Mask cls : par) {
                        Mask kept = cls & ~dm;
                        if (kept && kept != bit(lowest_bit(cls))) return true;
                    }
                }
            }
            Mask s = hc.full_mask() & ~dm;
            if (hc.rank_of(s) != info.rank) return true;
            Matroid cand = hc.deleted(dm);
            if (!screen_minor(cand, info)) return true;
            Mask d_host = 0;
            for (Mask rest = dm; rest; rest &= rest - 1)
                d_host |= bit(pool_host[lowest_bit(rest)]);
            if (!visit(c, d_host, cand)) {
                stopped = true;
                return false;
            }
            return true;
        });
        return !stopped;
    });
}

}  // namespace

std::optional<MinorWitness> has_minor(const Matroid& host, const Matroid& pattern) {
    std::optional<MinorWitness> out;
    scan_minors(host, pattern, /*canonize_parallel=*/true,
                [&](Mask c, Mask d, const Matroid& cand) {
                    auto iso = least_isomorphism(pattern, cand);
                    if (!iso) return true;
                    out = MinorWitness{c, d, *iso};
                    return false;
                });
    return out;
}

std::vector<std::pair<Mask, Mask>> minor_embeddings(const Matroid& host, const Matroid& pattern) {
    std::vector<std::pair<Mask, Mask>> out;
    scan_minors(host, pattern, /*canonize_parallel=*/false,
                [&](Mask c, Mask d, const Matroid& cand) {
                    if (isomorphism(pattern, cand)) out.emplace_back(c, d);
                    return true;
                });
    return out;
}

ExClassReport in_ex_class(const Matroid& m, const std::vector<Matroid>& patterns) {
    ExClassReport rep;
    rep.in_class = true;
    for (const Matroid& p : patterns) {
        rep.witnesses.push_back(has_minor(m, p));
        if (rep.witnesses.back()) rep.in_class = false;
    }
    return rep;
}

}  // namespace matroidlab
