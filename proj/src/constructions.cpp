#include "matroid/constructions.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "matroid/structure.hpp"

namespace matroidlab {

Matroid wheel(int n) {
    if (n < 2) throw std::invalid_argument("wheel wants n >= 2");
    if (n == 2) {
        // Two spokes and a doubled rim edge; only used to seed whirl(2).
        LinearRep rep;
        rep.field = FieldId::GF3;
        rep.rows = 2;
        rep.labels = {"s1", "r1", "s2", "r2"};
        rep.cols = {{1, 0}, {1, 2}, {0, 1}, {1, 2}};
        return Matroid::from_linear(std::move(rep));
    }
    LinearRep rep;
    rep.field = FieldId::GF3;
    rep.rows = n;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint8_t> spoke(n, 0), rim(n, 0);
        spoke[i - 1] = 1;
        rim[i - 1] = 1;
        rim[i % n] = 2;  // e_i - e_{i+1}
        rep.labels.push_back("s" + std::to_string(i));
        rep.cols.push_back(spoke);
        rep.labels.push_back("r" + std::to_string(i));
        rep.cols.push_back(rim);
    }
    return Matroid::from_linear(std::move(rep));
}

Matroid whirl(int n) {
    if (n < 2) throw std::invalid_argument("whirl wants n >= 2");
    Matroid w = wheel(n);
    std::vector<std::string> rim;
    for (int i = 1; i <= n; ++i) rim.push_back("r" + std::to_string(i));
    return w.relaxed(w.mask_of(rim));
}

Matroid glue_across_flat(const Matroid& n_side, const Matroid& m_side,
                         const std::vector<std::string>& from_n,
                         const std::vector<std::string>& to_m) {
    if (from_n.size() != to_m.size() || from_n.empty())
        throw std::invalid_argument("glue: label lists must match and be nonempty");
    const Mask tn = n_side.mask_of(from_n);
    const Mask tm = m_side.mask_of(to_m);
    const int tsize = int(from_n.size());
    if (popcount(tn) != tsize || popcount(tm) != tsize)
        throw std::invalid_argument("glue: repeated labels");
    if (n_side.closure(tn) != tn)
        throw std::invalid_argument("glue: shared set is not a flat of the first matroid");

    std::vector<int> tn_idx(tsize), tm_idx(tsize);
    for (int i = 0; i < tsize; ++i) {
        tn_idx[i] = n_side.ground().index_of(from_n[i]);
        tm_idx[i] = m_side.ground().index_of(to_m[i]);
    }
    // Common restriction: ranks agree under the bijection.
    for (Mask s = 0; s < (Mask(1) << tsize); ++s) {
        Mask sn = 0, sm = 0;
        for (int i = 0; i < tsize; ++i)
            if (s & bit(i)) {
                sn |= bit(tn_idx[i]);
                sm |= bit(tm_idx[i]);
            }
        if (n_side.rank_of(sn) != m_side.rank_of(sm))
            throw std::invalid_argument("glue: shared set is not a common restriction");
    }
    std::vector<Mask> fn = n_side.all_flats();
    for (Mask f : fn)
        if (n_side.rank_of(tn) + n_side.rank_of(f) !=
            n_side.rank_of(tn | f) + n_side.rank_of(tn & f))
            throw std::invalid_argument("glue: shared flat is not modular in the first matroid");

    // Combined ground set: M's labels, then N's leftovers in N order.
    std::vector<std::string> labels = m_side.ground().labels();
    std::vector<int> n_to_combined(n_side.size(), -1);
    for (int i = 0; i < tsize; ++i) n_to_combined[tn_idx[i]] = tm_idx[i];
    for (int i = 0; i < n_side.size(); ++i) {
        if (n_to_combined[i] >= 0) continue;
        const std::string& l = n_side.ground().label(i);
        if (m_side.ground().contains(l))
            throw std::invalid_argument("glue: label clash outside the shared set: " + l);
        n_to_combined[i] = int(labels.size());
        labels.push_back(l);
    }
    GroundSet ground(labels);
    const int total = ground.size();
    if (total > Matroid::kTableLimit)
        throw std::invalid_argument("glue: combined ground set too large");

    // Flats of the gluing: unions of an N-flat and an M-flat with the same
    // trace on the shared set.
    std::vector<Mask> fm = m_side.all_flats();
    std::unordered_map<Mask, std::vector<Mask>> n_by_trace;  // trace in M index space
    for (Mask f : fn) {
        Mask trace = 0;
        for (int i = 0; i < tsize; ++i)
            if (f & bit(tn_idx[i])) trace |= bit(tm_idx[i]);
        Mask rest = 0;
        for (Mask r = f & ~tn; r; r &= r - 1) rest |= bit(n_to_combined[lowest_bit(r)]);
        n_by_trace[trace].push_back(rest);
    }
    std::vector<Mask> flats;
    for (Mask f : fm) {
        auto it = n_by_trace.find(f & tm);
        if (it == n_by_trace.end()) continue;
        for (Mask rest : it->second) flats.push_back(Mask(f) | rest);
    }
    std::sort(flats.begin(), flats.end(), [](Mask a, Mask b) {
        return std::pair(popcount(a), a) < std::pair(popcount(b), b);
    });

    // Rank of a flat = longest chain of flats below it.
    const int nf = int(flats.size());
    std::vector<int> frank(nf, 0);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < i; ++j)
            if (flats[j] != flats[i] && subset_of(flats[j], flats[i]))
                frank[i] = std::max(frank[i], frank[j] + 1);
    const int top = *std::max_element(frank.begin(), frank.end());
    if (top != n_side.rank() + m_side.rank() - n_side.rank_of(tn))
        throw std::logic_error("glue: chain rank disagrees with the rank sum formula");

    // r(X) = rank of the least flat containing X; scanning flats by
    // ascending rank makes the first hit the answer.
    std::vector<std::vector<Mask>> by_rank(top + 1);
    for (int i = 0; i < nf; ++i) by_rank[frank[i]].push_back(flats[i]);
    std::vector<std::uint8_t> table(size_t(1) << total, std::uint8_t(top));
    for (Mask x = 0; x < table.size(); ++x) {
        bool done = false;
        for (int r = 0; r <= top && !done; ++r)
            for (Mask f : by_rank[r])
                if (subset_of(x, f)) {
                    table[x] = std::uint8_t(r);
                    done = true;
                    break;
                }
        if (!done) throw std::logic_error("glue: no flat contains a subset");
    }
    std::vector<Mask> bases;
    for_each_combination(total, top, [&](Mask m) {
        if (table[m] == top) bases.push_back(m);
        return true;
    });
    return Matroid::from_table(std::move(ground), std::move(table), std::move(bases));
}

Matroid gen_parallel_connection(const Matroid& n, const Matroid& m, const GlueSpec& glue) {
    Mask tn = n.mask_of({glue.triangle_n.begin(), glue.triangle_n.end()});
    Mask tm = m.mask_of({glue.triangle_m.begin(), glue.triangle_m.end()});
    if (!n.is_triangle(tn) || !m.is_triangle(tm))
        throw std::invalid_argument("gen_parallel_connection: glue sets must be triangles");
    return glue_across_flat(n, m, {glue.triangle_n.begin(), glue.triangle_n.end()},
                            {glue.triangle_m.begin(), glue.triangle_m.end()});
}

namespace {

std::string fresh_label(const Matroid& m, const std::string& base) {
    if (!m.ground().contains(base)) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + "_" + std::to_string(i);
        if (!m.ground().contains(cand)) return cand;
    }
}

}  // namespace

Matroid delta_y(const Matroid& m, const std::array<std::string, 3>& t) {
    Mask tmask = m.mask_of({t.begin(), t.end()});
    if (!m.is_triangle(tmask)) throw std::invalid_argument("delta_y: set is not a triangle");
    if (m.rank_of(m.full_mask() & ~tmask) != m.rank())
        throw std::invalid_argument("delta_y: triangle is not coindependent");
    std::vector<std::string> xs = m.labels_of(tmask);  // ground order
    std::array<std::string, 3> fresh;
    for (int i = 0; i < 3; ++i) fresh[i] = fresh_label(m, "_dy" + std::to_string(i + 1));

    // M(K4) on vertices 0..3: the glued triangle lives on {1,2,3}; the new
    // element keeping label x_i is the spoke edge disjoint from x_i's edge.
    LinearRep k4;
    k4.field = FieldId::GF3;
    k4.rows = 3;
    k4.labels = {xs[0], xs[1], xs[2], fresh[0], fresh[1], fresh[2]};
    k4.cols = {{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Matroid n = Matroid::from_linear(std::move(k4));

    Matroid glued = glue_across_flat(n, m, {xs[0], xs[1], xs[2]}, {xs[0], xs[1], xs[2]});
    Matroid cut = glued.deleted(glued.mask_of({xs[0], xs[1], xs[2]}));
    cut = cut.relabeled({{fresh[0], xs[0]}, {fresh[1], xs[1]}, {fresh[2], xs[2]}});
    return cut.reordered(m.ground().labels());
}

Matroid y_delta(const Matroid& m, const std::array<std::string, 3>& t) {
    Mask tmask = m.mask_of({t.begin(), t.end()});
    if (!m.is_triad(tmask)) throw std::invalid_argument("y_delta: set is not a triad");
    if (m.rank_of(tmask) != 3)
        throw std::invalid_argument("y_delta: triad is dependent, exchange undefined");
    return delta_y(m.dual(), t).dual().reordered(m.ground().labels());
}

Matroid grow_fan(const Matroid& m, const std::array<std::string, 3>& fan_start, int n) {
    if (n < 3) throw std::invalid_argument("grow_fan wants n >= 3");
    Mask tmask = m.mask_of({fan_start.begin(), fan_start.end()});
    if (!m.is_triangle(tmask)) throw std::invalid_argument("grow_fan: fan start is not a triangle");
    if (!is_three_connected(m)) throw std::invalid_argument("grow_fan: matroid is not 3-connected");

    Matroid w = wheel(n);
    std::vector<std::pair<std::string, std::string>> ren;
    ren.emplace_back("s1", fan_start[0]);
    ren.emplace_back("r" + std::to_string(n), fan_start[1]);
    ren.emplace_back("s" + std::to_string(n), fan_start[2]);
    int fi = 1;
    for (int i = 1; i <= n - 1; ++i) {
        ren.emplace_back("r" + std::to_string(i), "f" + std::to_string(fi++));
        if (i + 1 <= n - 1) ren.emplace_back("s" + std::to_string(i + 1), "f" + std::to_string(fi++));
    }
    for (const auto& [from, to] : ren)
        if (to.size() > 1 && to[0] == 'f' && m.ground().contains(to))
            throw std::invalid_argument("grow_fan: fresh label " + to + " clashes with the host");
    Matroid wr = w.relabeled(ren);
    Matroid glued = glue_across_flat(wr, m, {fan_start[0], fan_start[1], fan_start[2]},
                                     {fan_start[0], fan_start[1], fan_start[2]});
    return glued.deleted(glued.mask_of({fan_start[1]}));
}

std::vector<ModularCut> modular_cuts(const Matroid& m, std::uint64_t node_guard) {
    const std::vector<Mask> flats = m.all_flats();
    const int nf = int(flats.size());
    std::unordered_map<Mask, int> index;
    for (int i = 0; i < nf; ++i) index[flats[i]] = i;
    std::vector<int> frk(nf);
    for (int i = 0; i < nf; ++i) frk[i] = m.rank_of(flats[i]);

    // Decide flats in decreasing rank order so that supersets of any flat
    // are settled before it.
    std::vector<int> order(nf);
    for (int i = 0; i < nf; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return frk[a] > frk[b]; });

    std::vector<std::vector<int>> supersets(nf);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j)
            if (i != j && subset_of(flats[i], flats[j])) supersets[i].push_back(j);

    std::vector<std::vector<int>> meet(nf, std::vector<int>(nf, -1));  // -1: not modular
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            if (m.rank_of(flats[i]) + m.rank_of(flats[j]) ==
                m.rank_of(flats[i] | flats[j]) + m.rank_of(flats[i] & flats[j])) {
                int k = index.at(flats[i] & flats[j]);
                meet[i][j] = meet[j][i] = k;
            }
        }

    enum : std::int8_t { kUndecided = 0, kIn = 1, kOut = 2 };
    std::vector<std::int8_t> state(nf, kUndecided);
    std::vector<int> forced(nf, 0);
    std::vector<int> in_so_far;
    std::vector<ModularCut> out;
    std::uint64_t nodes = 0;

    std::function<void(int)> rec = [&](int pos) {
        if (++nodes > node_guard)
            throw GuardExceeded("modular cut search exceeded the node guard");
        if (pos == nf) {
            ModularCut cut;
            for (int i : in_so_far) cut.flats.push_back(flats[i]);
            std::sort(cut.flats.begin(), cut.flats.end(), [&](Mask a, Mask b) {
                return std::pair(m.rank_of(a), a) < std::pair(m.rank_of(b), b);
            });
            out.push_back(std::move(cut));
            return;
        }
        const int fi = order[pos];
        // in-branch
        bool can_in = true;
        for (int s : supersets[fi])
            if (state[s] != kIn) { can_in = false; break; }
        if (can_in) {
            std::vector<int> bumped;
            bool ok = true;
            for (int gj : in_so_far) {
                int k = meet[fi][gj];
                if (k < 0 || k == fi || k == gj) continue;
                if (state[k] == kOut) { ok = false; break; }
                if (state[k] == kUndecided) {
                    ++forced[k];
                    bumped.push_back(k);
                }
            }
            if (ok) {
                state[fi] = kIn;
                in_so_far.push_back(fi);
                rec(pos + 1);
                in_so_far.pop_back();
                state[fi] = kUndecided;
            }
            for (int k : bumped) --forced[k];
        }
        // out-branch
        if (forced[fi] == 0) {
            state[fi] = kOut;
            rec(pos + 1);
            state[fi] = kUndecided;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const ModularCut& a, const ModularCut& b) { return a.flats < b.flats; });
    return out;
}

Matroid extend_by_cut(const Matroid& m, const ModularCut& cut, const std::string& new_label) {
    std::unordered_set<Mask> members(cut.flats.begin(), cut.flats.end());
    std::vector<Mask> flats = m.all_flats();
    std::unordered_set<Mask> flatset(flats.begin(), flats.end());
    for (Mask f : cut.flats) {
        if (!flatset.count(f)) throw std::invalid_argument("extend_by_cut: member is not a flat");
        for (Mask g : flats)
            if (f != g && subset_of(f, g) && !members.count(g))
                throw std::invalid_argument("extend_by_cut: family is not up-closed");
    }
    for (Mask f : cut.flats)
        for (Mask g : cut.flats) {
            if (f >= g) continue;
            if (m.rank_of(f) + m.rank_of(g) == m.rank_of(f | g) + m.rank_of(f & g) &&
                !members.count(f & g))
                throw std::invalid_argument("extend_by_cut: modular pair meet missing");
        }
    if (m.ground().contains(new_label))
        throw std::invalid_argument("extend_by_cut: label already present");

    std::vector<std::string> labels = m.ground().labels();
    labels.push_back(new_label);
    const int n = m.size();
    std::vector<std::uint8_t> table(size_t(1) << (n + 1));
    for (Mask x = 0; x < (Mask(1) << n); ++x) {
        int r = m.rank_of(x);
        table[x] = std::uint8_t(r);
        bool spanned = members.count(m.closure(x)) != 0;
        table[x | bit(n)] = std::uint8_t(spanned ? r : r + 1);
    }
    return Matroid::from_table(GroundSet(labels), std::move(table));
}

std::vector<Matroid> single_element_extensions(const Matroid& m, const std::string& new_label) {
    std::vector<Matroid> out;
    for (const ModularCut& cut : modular_cuts(m)) out.push_back(extend_by_cut(m, cut, new_label));
    return out;
}

std::vector<Matroid> single_element_coextensions(const Matroid& m, const std::string& new_label) {
    std::vector<Matroid> out;
    Matroid md = m.dual();
    for (const ModularCut& cut : modular_cuts(md))
        out.push_back(extend_by_cut(md, cut, new_label).dual());
    return out;
}

Matroid append_row(const LinearRep& rep, const std::vector<std::uint8_t>& v,
                   const std::string& new_label) {
    if (v.size() != rep.labels.size()) throw std::invalid_argument("append_row: bad length");
    LinearRep out = rep;
    out.rows = rep.rows + 1;
    for (size_t i = 0; i < out.cols.size(); ++i) out.cols[i].push_back(v[i]);
    std::vector<std::uint8_t> e(out.rows, 0);
    e.back() = 1;
    out.cols.push_back(std::move(e));
    out.labels.push_back(new_label);
    return Matroid::from_linear(std::move(out));
}

Matroid append_column(const LinearRep& rep, const std::vector<std::uint8_t>& v,
                      const std::string& new_label) {
    if (int(v.size()) != rep.rows) throw std::invalid_argument("append_column: bad length");
    LinearRep out = rep;
    out.cols.push_back(v);
    out.labels.push_back(new_label);
    return Matroid::from_linear(std::move(out));
}

std::vector<Matroid> linear_extensions(const LinearRep& rep, AppendSide side,
                                       const std::string& new_label) {
    const SmallField& f = SmallField::get(rep.field);
    const int q = f.order();
    const int len = side == AppendSide::row ? int(rep.labels.size()) : rep.rows;
    std::vector<Matroid> out;
    std::vector<std::uint8_t> v(len, 0);
    while (true) {
        // normalized: zero, or first nonzero entry equal to one
        int first = -1;
        for (int i = 0; i < len; ++i)
            if (v[i]) { first = i; break; }
        if (first < 0 || v[first] == 1)
            out.push_back(side == AppendSide::row ? append_row(rep, v, new_label)
                                                  : append_column(rep, v, new_label));
        int i = len - 1;
        while (i >= 0 && v[i] == q - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

Matroid two_sum(const Matroid& a, const std::string& p, const Matroid& b, const std::string& q) {
    Matroid b2 = q == p ? b : b.relabeled({{q, p}});
    Matroid glued = glue_across_flat(b2, a, {p}, {p});
    return glued.deleted(glued.mask_of({p}));
}

}  // namespace matroidlab
