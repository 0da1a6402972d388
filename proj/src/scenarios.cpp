#include "scenarios_impl.hpp"

#include <algorithm>

#include "matroid/constructions.hpp"
#include "matroid/io.hpp"
#include "matroid/structure.hpp"
#include "matroid/verifier.hpp"

namespace matroidlab {

namespace {

ClaimOutcome pass(json w = json()) { return {true, std::move(w), {}}; }
ClaimOutcome fail(json w, std::string note) { return {false, std::move(w), std::move(note)}; }

std::uint8_t gf3(int v) { return std::uint8_t(((v % 3) + 3) % 3); }

// ---- shared checks ------------------------------------------------------

ClaimOutcome expect_no_minors(const Catalog& cat, const Matroid& host,
                              const std::vector<std::string>& pattern_names) {
    for (const auto& name : pattern_names) {
        auto w = has_minor(host, cat.get(name));
        if (w) {
            json j;
            j["pattern"] = name;
            j["witness"] = witness_json(host, *w, cat.get(name));
            return fail(std::move(j), "forbidden minor present");
        }
    }
    json j;
    j["patterns"] = pattern_names;
    return pass(std::move(j));
}

ClaimOutcome expect_minor(const Catalog& cat, const Matroid& host, const std::string& name) {
    auto w = has_minor(host, cat.get(name));
    if (!w) return fail(json{{"pattern", name}}, "required minor absent");
    json j;
    j["pattern"] = name;
    j["witness"] = witness_json(host, *w, cat.get(name));
    return pass(std::move(j));
}

ClaimOutcome expect_iso(const Matroid& a, const Matroid& b, const std::string& what) {
    auto phi = least_isomorphism(a, b);
    if (!phi) return fail(json{{"claim", what}}, "matroids are not isomorphic");
    json j;
    j["claim"] = what;
    j["iso"] = iso_json(a, b, *phi);
    return pass(std::move(j));
}

ClaimOutcome expect_same_oracle(const Matroid& a, const Matroid& b, const std::string& what) {
    if (!a.same_oracle(b)) return fail(json{{"claim", what}}, "rank oracles differ");
    return pass(json{{"claim", what}});
}

std::optional<IsoMap> map_from_label_pairs(const Matroid& a, const Matroid& b,
                                           const std::vector<std::pair<std::string, std::string>>& p) {
    if (int(p.size()) != a.size()) return std::nullopt;
    IsoMap phi;
    phi.image.assign(a.size(), -1);
    for (const auto& [from, to] : p) {
        int i = a.ground().index_of(from);
        int j = b.ground().index_of(to);
        if (i < 0 || j < 0) return std::nullopt;
        phi.image[i] = j;
    }
    for (int v : phi.image)
        if (v < 0) return std::nullopt;
    return phi;
}

ClaimOutcome expect_printed_map(const Matroid& a, const Matroid& b,
                                const std::vector<std::pair<std::string, std::string>>& pairs,
                                const std::string& what) {
    auto phi = map_from_label_pairs(a, b, pairs);
    if (!phi) return fail(json{{"claim", what}}, "stated map is not a bijection of the ground sets");
    if (!verify_map(a, b, *phi)) return fail(json{{"claim", what}}, "stated map does not preserve ranks");
    json j;
    j["claim"] = what;
    j["iso"] = iso_json(a, b, *phi);
    return pass(std::move(j));
}

// ---- matrices of the coextension case analysis --------------------------

// 8-element form: rows (1,2,3,e), columns (4,5,6,7); the first three rows
// are fixed, the e-row carries the parameters.
Matroid claim_block_matroid(int alpha, int beta, int gamma, int delta) {
    LinearRep rep;
    rep.field = FieldId::GF3;
    rep.rows = 4;
    rep.labels = {"1", "2", "3", "e", "4", "5", "6", "7"};
    rep.cols = {
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 0, 1, 0},
        {0, 0, 0, 1},
        {1, 1, 0, gf3(alpha)},
        {1, 0, 1, gf3(beta)},
        {0, 1, 1, gf3(gamma)},
        {2, 1, 1, gf3(delta)},
    };
    return Matroid::from_linear(std::move(rep));
}

// 9-element form: rows (f,1,2,3), columns (4..8); the last three rows are a
// fixed lift of the AG23e matrix, the f-row carries the case parameters.
Matroid case_matroid(const std::array<int, 5>& f_row) {
    LinearRep rep;
    rep.field = FieldId::GF3;
    rep.rows = 4;
    rep.labels = {"f", "1", "2", "3", "4", "5", "6", "7", "8"};
    const int base[3][5] = {{1, 0, 1, 1, 1}, {1, 1, 0, 2, 1}, {0, 1, 1, 2, 2}};
    rep.cols = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int c = 0; c < 5; ++c)
        rep.cols.push_back({gf3(f_row[c]), gf3(base[0][c]), gf3(base[1][c]), gf3(base[2][c])});
    return Matroid::from_linear(std::move(rep));
}

ClaimOutcome contracts_to_ag23e(const Catalog& cat, const std::vector<Matroid>& ms,
                                const std::string& what) {
    const Matroid& target = cat.get("AG23e");
    for (const Matroid& m : ms) {
        Matroid q = m.contracted(m.mask_of({"f"}));
        if (!q.same_oracle(target)) return fail(json{{"claim", what}}, "contraction is not AG23e");
    }
    return pass(json{{"claim", what}, {"instances", ms.size()}});
}

// ---- fan family helpers --------------------------------------------------

struct GrowInstance {
    const char* id;
    const char* matroid;
    std::array<const char*, 3> start;
    std::vector<const char*> rest;  // continuation of the fan past x3
};

const std::vector<GrowInstance>& grow_instances() {
    static const std::vector<GrowInstance> v = {
        {"m8", "M8", {"3", "6", "8"}, {}},
        {"m9", "M9", {"3", "5", "9"}, {}},
        {"m7", "M7", {"1", "2", "4"}, {}},
        {"f7", "F7", {"1", "2", "4"}, {}},
        {"w4", "W4", {"s1", "r1", "s2"}, {"r2", "s3"}},
    };
    return v;
}

std::array<std::string, 3> start_of(const GrowInstance& gi) {
    return {gi.start[0], gi.start[1], gi.start[2]};
}

std::vector<std::string> grown_fan_labels(const GrowInstance& gi, int n) {
    std::vector<std::string> seq;
    seq.push_back(gi.start[0]);
    for (int i = 1; i <= 2 * n - 3; ++i) seq.push_back("f" + std::to_string(i));
    seq.push_back(gi.start[2]);
    for (const char* r : gi.rest) seq.push_back(r);
    return seq;
}

ClaimOutcome grown_fan_claim(const Matroid& phi, const std::vector<std::string>& seq_labels) {
    std::vector<int> seq;
    for (const auto& l : seq_labels) {
        int i = phi.ground().index_of(l);
        if (i < 0) return fail(json{{"missing", l}}, "fan element missing in grown matroid");
        seq.push_back(i);
    }
    if (!is_fan(phi, seq)) return fail(json{{"sequence", seq_labels}}, "sequence is not a fan");
    return pass(json{{"fan", seq_labels}});
}

// The grown matroid keeps a copy of the seed: identity off x2, with x2 sent
// to one leftover fresh element; contract/delete sets stay inside the fresh
// elements.
ClaimOutcome grown_minor_claim(const Matroid& seed, const Matroid& phi,
                               const std::array<std::string, 3>& xs, int n) {
    std::vector<int> fresh;
    for (int i = 1; i <= 2 * n - 3; ++i) fresh.push_back(phi.ground().index_of("f" + std::to_string(i)));
    ClaimOutcome result = fail(json(), "no embedding of the seed fixing all elements but x2");
    for_each_combination_of(fresh, n - 2, [&](Mask c) {
        if (phi.rank_of(c) != n - 2) return true;
        std::vector<int> remaining;
        for (int i : fresh)
            if (!(c & bit(i))) remaining.push_back(i);
        for_each_combination_of(remaining, n - 2, [&](Mask d) {
            Mask leftover = 0;
            for (int i : remaining)
                if (!(d & bit(i))) leftover |= bit(i);
            if (popcount(leftover) != 1) return true;
            Matroid mm = phi.minor(c, d);
            IsoMap iso;
            iso.image.assign(seed.size(), -1);
            bool ok = true;
            for (int i = 0; i < seed.size() && ok; ++i) {
                const std::string& l = seed.ground().label(i);
                int j = l == xs[1] ? mm.ground().index_of(phi.ground().label(lowest_bit(leftover)))
                                   : mm.ground().index_of(l);
                if (j < 0) ok = false;
                iso.image[i] = j;
            }
            if (!ok || !verify_map(seed, mm, iso)) return true;
            json j;
            j["contract"] = mask_json(phi, c);
            j["delete"] = mask_json(phi, d);
            j["x2_image"] = phi.ground().label(lowest_bit(leftover));
            result = pass(std::move(j));
            return false;
        });
        return !result.ok;
    });
    return result;
}

std::vector<std::pair<std::string, std::string>> parse_map(
    std::initializer_list<std::pair<const char*, const char*>> xs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& [a, b] : xs) out.emplace_back(a, b);
    return out;
}

// ---- scenario builders ---------------------------------------------------

std::vector<ClaimDef> catalog_sanity_claims(const Catalog& cat) {
    std::vector<ClaimDef> out;
    for (const std::string& name : cat.names()) {
        out.push_back({"facts-" + name, [name](const Catalog& c) -> ClaimOutcome {
                           const Matroid& m = c.get(name);  // load asserts fire here
                           auto info = c.info(name);
                           json j;
                           j["name"] = name;
                           j["rank"] = m.rank();
                           j["size"] = m.size();
                           j["triangles"] = int(m.triangles().size());
                           if (info.self_dual >= 0) j["self_dual"] = info.self_dual == 1;
                           return pass(std::move(j));
                       }});
    }
    out.push_back({"ag23e-aut-transitive", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m = c.get("AG23e");
                       auto orb = orbits(m.size(), automorphisms(m));
                       if (orb.size() != 1) return fail(json{{"orbits", orb.size()}}, "not transitive");
                       return pass(json{{"orbit_size", 8}});
                   }});
    out.push_back({"ag23e-blocked-pairs", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m = c.get("AG23e");
                       auto tris = m.triangles();
                       json pairs = json::array();
                       for (int p = 0; p < m.size(); ++p) {
                           std::vector<int> mates;
                           for (int q = 0; q < m.size(); ++q) {
                               if (p == q) continue;
                               bool joined = false;
                               for (Mask t : tris)
                                   if ((t & bit(p)) && (t & bit(q))) joined = true;
                               if (!joined) mates.push_back(q);
                           }
                           if (mates.size() != 1)
                               return fail(json{{"element", m.ground().label(p)},
                                                {"mates", mates.size()}},
                                           "blocked-pair mate not unique");
                           if (mates[0] > p)
                               pairs.push_back(json::array({m.ground().label(p),
                                                            m.ground().label(mates[0])}));
                       }
                       return pass(json{{"pairs", pairs}});
                   }});
    out.push_back({"m9-contract7-lines", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m9 = c.get("M9");
                       Matroid q = m9.contracted(m9.mask_of({"7"}));
                       for (auto want : {std::vector<std::string>{"3", "5", "8", "9"},
                                         std::vector<std::string>{"1", "2", "4", "9"}}) {
                           Mask x = q.mask_of(want);
                           if (q.rank_of(x) != 2 || q.closure(x) != x)
                               return fail(json{{"line", want}}, "expected 4-point line missing");
                       }
                       return pass(json{{"lines", json::array({json::array({"3", "5", "8", "9"}),
                                                               json::array({"1", "2", "4", "9"})})}});
                   }});
    out.push_back({"m9-contract8-lines", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m9 = c.get("M9");
                       Matroid q = m9.contracted(m9.mask_of({"8"}));
                       for (auto want : {std::vector<std::string>{"2", "3", "4", "6"},
                                         std::vector<std::string>{"3", "5", "7", "9"}}) {
                           Mask x = q.mask_of(want);
                           if (q.rank_of(x) != 2 || q.closure(x) != x)
                               return fail(json{{"line", want}}, "expected 4-point line missing");
                       }
                       return pass(json());
                   }});
    out.push_back({"m9-delete13-triads", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m9 = c.get("M9");
                       Matroid q = m9.deleted(m9.mask_of({"1", "3"}));
                       if (!q.is_triad(q.mask_of({"2", "4", "6"})) ||
                           !q.is_triad(q.mask_of({"5", "7", "9"})))
                           return fail(json(), "expected disjoint triads missing");
                       return pass(json{{"triads", json::array({json::array({"2", "4", "6"}),
                                                                json::array({"5", "7", "9"})})}});
                   }});
    out.push_back({"m9-delete23-triads", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m9 = c.get("M9");
                       Matroid q = m9.deleted(m9.mask_of({"2", "3"}));
                       if (!q.is_triad(q.mask_of({"1", "7", "8"})) ||
                           !q.is_triad(q.mask_of({"4", "5", "9"})))
                           return fail(json(), "expected disjoint triads missing");
                       return pass(json());
                   }});
    out.push_back({"s5612-three-connected", [](const Catalog& c) -> ClaimOutcome {
                       if (!is_three_connected(c.get("S5612"))) return fail(json(), "not 3-connected");
                       return pass(json());
                   }});
    out.push_back({"s5612-p8-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_minor(c, c.get("S5612"), "P8");
                   }});
    out.push_back({"s5612-steiner-blocks", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m = c.get("S5612");
                       std::vector<Mask> blocks;
                       for_each_combination(m.size(), 6, [&](Mask x) {
                           if (m.rank_of(x) == 5) blocks.push_back(x);
                           return true;
                       });
                       if (blocks.size() != 132)
                           return fail(json{{"blocks", blocks.size()}}, "expected 132 blocks");
                       bool ok = for_each_combination(m.size(), 5, [&](Mask f) {
                           int cnt = 0;
                           for (Mask b : blocks)
                               if (subset_of(f, b)) ++cnt;
                           return cnt == 1;
                       });
                       if (!ok) return fail(json(), "a 5-set lies in != 1 block");
                       return pass(json{{"blocks", 132}});
                   }});
    out.push_back({"p7-one-triple-point", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& p7 = c.get("P7");
                       auto tris = p7.triangles();
                       std::vector<int> heavy;
                       for (int e = 0; e < p7.size(); ++e) {
                           int cnt = 0;
                           for (Mask t : tris)
                               if (t & bit(e)) ++cnt;
                           if (cnt >= 3) heavy.push_back(e);
                       }
                       if (heavy.size() != 1)
                           return fail(json{{"heavy_points", heavy.size()}},
                                       "expected exactly one element on three lines");
                       return pass(json{{"element", p7.ground().label(heavy[0])}});
                   }});
    out.push_back({"o7-four-point-line", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& o7 = c.get("O7");
                       for (Mask f : o7.flats_of_rank(2))
                           if (popcount(f) == 4) return pass(json{{"line", mask_json(o7, f)}});
                       return fail(json(), "no 4-point line");
                   }});
    out.push_back({"f7md-is-dual-of-f7m", [](const Catalog& c) -> ClaimOutcome {
                       return expect_same_oracle(c.get("F7m").dual(), c.get("F7md"),
                                                 "dual of F7m equals the pinned F7md matrix");
                   }});
    out.push_back({"p8-relaxation-structure", [](const Catalog& c) -> ClaimOutcome {
                       // The relaxations of P8 are NOT pairwise isomorphic: the
                       // circuit-hyperplanes split into the unique complementary
                       // pair plus an orbit of eight whose relaxations contain
                       // P6. P8= is the double relaxation of the pair, and only
                       // it avoids the other six GF(4) excluded minors.
                       const Matroid& p8 = c.get("P8");
                       std::vector<Mask> chs;
                       for (Mask x : p8.circuits())
                           if (p8.rank_of(x) == p8.rank() - 1 && p8.closure(x) == x)
                               chs.push_back(x);
                       if (chs.size() != 10)
                           return fail(json{{"count", chs.size()}},
                                       "expected 10 circuit-hyperplanes");
                       std::vector<Mask> pair;
                       for (Mask x : chs)
                           if (std::find(chs.begin(), chs.end(), p8.full_mask() & ~x) != chs.end())
                               pair.push_back(x);
                       if (pair.size() != 2)
                           return fail(json{{"pair", pair.size()}},
                                       "expected one complementary pair");
                       if (!isomorphism(p8.relaxed(pair[0]), p8.relaxed(pair[1])))
                           return fail(json(), "pair relaxations not isomorphic");
                       for (Mask x : chs) {
                           bool in_pair = x == pair[0] || x == pair[1];
                           bool has_p6 = bool(has_minor(p8.relaxed(x), c.get("P6")));
                           if (in_pair == has_p6)
                               return fail(json{{"set", mask_json(p8, x)}},
                                           "relaxation P6-minor pattern unexpected");
                       }
                       auto rep = in_ex_class(c.get("P8="),
                                              {c.get("U26"), c.get("U46"), c.get("P6"),
                                               c.get("F7m"), c.get("F7md"), c.get("P8")});
                       if (!rep.in_class)
                           return fail(json(), "P8= contains another GF(4) excluded minor");
                       return pass(json{{"circuit_hyperplanes", 10},
                                        {"pair", json::array({mask_json(p8, pair[0]),
                                                              mask_json(p8, pair[1])})}});
                   }});
    out.push_back({"deltay-ag23e-matches-pinned-matrix", [](const Catalog& c) -> ClaimOutcome {
                       Matroid d = delta_y(c.get("AG23e"), {"1", "2", "4"});
                       return expect_iso(d, c.get("D3AG23e"),
                                         "triangle-triad exchange of AG23e matches the pinned matrix");
                   }});
    return out;
}

std::vector<ClaimDef> ag23e_aut_claims(const Catalog&) {
    std::vector<ClaimDef> out;
    auto perm_claim = [](const char* id, std::vector<std::pair<std::string, std::string>> pairs) {
        return ClaimDef{id, [pairs](const Catalog& c) -> ClaimOutcome {
                            const Matroid& m = c.get("AG23e");
                            return expect_printed_map(m, m, pairs, "stated permutation is an automorphism");
                        }};
    };
    out.push_back(perm_claim("perm-24-37-56", {{"1", "1"}, {"2", "4"}, {"4", "2"}, {"3", "7"},
                                               {"7", "3"}, {"5", "6"}, {"6", "5"}, {"8", "8"}}));
    out.push_back(perm_claim("perm-235-467", {{"1", "1"}, {"2", "3"}, {"3", "5"}, {"5", "2"},
                                              {"4", "6"}, {"6", "7"}, {"7", "4"}, {"8", "8"}}));
    out.push_back({"transitive-on-elements", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m = c.get("AG23e");
                       auto orb = orbits(m.size(), automorphisms(m));
                       if (orb.size() != 1) return fail(json{{"orbits", orb.size()}}, "not transitive");
                       return pass(json());
                   }});
    out.push_back({"transitive-on-lines", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m = c.get("AG23e");
                       auto tris = m.triangles();
                       auto auts = automorphisms(m);
                       // orbit of the first line under the full group
                       std::vector<Mask> orbit = {tris[0]};
                       for (size_t i = 0; i < orbit.size(); ++i)
                           for (const auto& phi : auts) {
                               Mask img = 0;
                               for (Mask r = orbit[i]; r; r &= r - 1) img |= bit(phi.image[lowest_bit(r)]);
                               if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
                                   orbit.push_back(img);
                           }
                       if (orbit.size() != tris.size())
                           return fail(json{{"orbit", orbit.size()}, {"lines", tris.size()}},
                                       "line action not transitive");
                       return pass(json{{"lines", tris.size()}});
                   }});
    out.push_back({"stabilizer-transitive-on-rest", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m = c.get("AG23e");
                       auto tris = m.triangles();
                       auto auts = automorphisms(m);
                       json checked = json::array();
                       for (int p = 0; p < m.size(); ++p) {
                           int mate = -1;
                           for (int q = 0; q < m.size(); ++q) {
                               if (p == q) continue;
                               bool joined = false;
                               for (Mask t : tris)
                                   if ((t & bit(p)) && (t & bit(q))) joined = true;
                               if (!joined) mate = q;
                           }
                           if (mate < p) continue;
                           std::vector<IsoMap> stab;
                           for (const auto& phi : auts)
                               if (phi.image[p] == p && phi.image[mate] == mate) stab.push_back(phi);
                           std::vector<int> rest;
                           for (int e = 0; e < m.size(); ++e)
                               if (e != p && e != mate) rest.push_back(e);
                           if (!is_transitive_on(stab, rest))
                               return fail(json{{"pair", json::array({m.ground().label(p),
                                                                      m.ground().label(mate)})}},
                                           "stabilizer not transitive on the other six");
                           checked.push_back(json::array({m.ground().label(p), m.ground().label(mate)}));
                       }
                       return pass(json{{"pairs", checked}});
                   }});
    out.push_back({"pairs-preserved", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m = c.get("AG23e");
                       auto tris = m.triangles();
                       auto blocked = [&](int p, int q) {
                           for (Mask t : tris)
                               if ((t & bit(p)) && (t & bit(q))) return false;
                           return true;
                       };
                       for (const auto& phi : automorphisms(m))
                           for (int p = 0; p < m.size(); ++p)
                               for (int q = p + 1; q < m.size(); ++q)
                                   if (blocked(p, q) != blocked(phi.image[p], phi.image[q]))
                                       return fail(json(), "automorphism does not preserve blocked pairs");
                       return pass(json());
                   }});
    out.push_back({"special-bases-one-orbit", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m = c.get("AG23e");
                       auto tris = m.triangles();
                       auto spans_line = [&](int p, int q) {
                           for (Mask t : tris)
                               if ((t & bit(p)) && (t & bit(q))) return true;
                           return false;
                       };
                       std::vector<Mask> special;
                       for (Mask b : m.bases()) {
                           auto idx = mask_to_indices(b);
                           if (spans_line(idx[0], idx[1]) && spans_line(idx[0], idx[2]) &&
                               spans_line(idx[1], idx[2]))
                               special.push_back(b);
                       }
                       if (special.empty()) return fail(json(), "no special bases found");
                       auto auts = automorphisms(m);
                       std::vector<Mask> orbit = {special[0]};
                       for (size_t i = 0; i < orbit.size(); ++i)
                           for (const auto& phi : auts) {
                               Mask img = 0;
                               for (Mask r = orbit[i]; r; r &= r - 1) img |= bit(phi.image[lowest_bit(r)]);
                               if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
                                   orbit.push_back(img);
                           }
                       if (orbit.size() != special.size())
                           return fail(json{{"orbit", orbit.size()}, {"special", special.size()}},
                                       "special bases split into several orbits");
                       return pass(json{{"special_bases", special.size()}});
                   }});
    return out;
}

std::vector<ClaimDef> ag23e_cases_claims(const Catalog&) {
    std::vector<ClaimDef> out;

    out.push_back({"block-contract-is-p7", [](const Catalog& c) -> ClaimOutcome {
                       Matroid m = claim_block_matroid(1, 1, 1, 0);
                       Matroid q = m.contracted(m.mask_of({"e"}));
                       return expect_same_oracle(q, c.get("P7"), "contracting e gives the pinned P7");
                   }});
    out.push_back({"gamma-eq-delta-triangle-167", [](const Catalog&) -> ClaimOutcome {
                       for (int beta : {1, 2})
                           for (int gd : {1, 2}) {
                               Matroid m = claim_block_matroid(1, beta, gd, gd);
                               if (!m.is_triangle(m.mask_of({"1", "6", "7"})))
                                   return fail(json{{"beta", beta}, {"gamma", gd}},
                                               "{1,6,7} not a triangle");
                           }
                       return pass(json());
                   }});
    out.push_back({"beta1-gamma1-dual-f7m", [](const Catalog& c) -> ClaimOutcome {
                       for (int delta : {0, 2}) {
                           Matroid m = claim_block_matroid(1, 1, 1, delta);
                           auto res = expect_iso(m.deleted(m.mask_of({"7"})), c.get("F7md"),
                                                 "deleting 7 gives the dual of F7m");
                           if (!res.ok) return res;
                       }
                       return pass(json());
                   }});
    out.push_back({"beta1-gamma2-delta0-p8", [](const Catalog& c) -> ClaimOutcome {
                       return expect_iso(claim_block_matroid(1, 1, 2, 0), c.get("P8"),
                                         "the delta=0 branch is P8");
                   }});
    out.push_back({"beta1-gamma2-delta1-p7-conflict", [](const Catalog& c) -> ClaimOutcome {
                       Matroid m = claim_block_matroid(1, 1, 2, 1);
                       Matroid q = m.contracted(m.mask_of({"1"}));
                       for (auto t : {std::vector<std::string>{"2", "4", "e"},
                                      std::vector<std::string>{"3", "5", "e"},
                                      std::vector<std::string>{"6", "7", "e"},
                                      std::vector<std::string>{"4", "5", "6"},
                                      std::vector<std::string>{"2", "5", "7"}})
                           if (!q.is_triangle(q.mask_of(t)))
                               return fail(json{{"triangle", t}}, "stated triangle missing");
                       auto tris = q.triangles();
                       int heavy = 0;
                       for (int e = 0; e < q.size(); ++e) {
                           int cnt = 0;
                           for (Mask t : tris)
                               if (t & bit(e)) ++cnt;
                           if (cnt >= 3) ++heavy;
                       }
                       if (heavy < 2) return fail(json{{"heavy", heavy}}, "expected two busy elements");
                       if (isomorphism(q, c.get("P7")))
                           return fail(json(), "contraction unexpectedly isomorphic to P7");
                       return pass(json{{"busy_elements", heavy}});
                   }});
    out.push_back({"beta2-delta0-triangle-457", [](const Catalog&) -> ClaimOutcome {
                       for (int gamma : {1, 2}) {
                           Matroid m = claim_block_matroid(1, 2, gamma, 0);
                           if (!m.is_triangle(m.mask_of({"4", "5", "7"})))
                               return fail(json{{"gamma", gamma}}, "{4,5,7} not a triangle");
                       }
                       return pass(json());
                   }});
    out.push_back({"beta2-gamma2-delta1-p8-map", [](const Catalog& c) -> ClaimOutcome {
                       Matroid m = claim_block_matroid(1, 2, 2, 1);
                       return expect_printed_map(
                           m, c.get("P8"),
                           parse_map({{"1", "1"}, {"2", "2"}, {"3", "5"}, {"4", "7"},
                                      {"5", "8"}, {"6", "3"}, {"7", "6"}, {"e", "4"}}),
                           "stated isomorphism onto P8");
                   }});
    out.push_back({"beta2-gamma1-delta2-p8-map", [](const Catalog& c) -> ClaimOutcome {
                       Matroid m = claim_block_matroid(1, 2, 1, 2);
                       return expect_printed_map(
                           m, c.get("P8"),
                           parse_map({{"1", "1"}, {"2", "5"}, {"3", "3"}, {"4", "8"},
                                      {"5", "6"}, {"6", "2"}, {"7", "7"}, {"e", "4"}}),
                           "stated isomorphism onto P8");
                   }});

    // Case with Y = {4,6,7}: f-row (1, 0, alpha, beta, 0).
    out.push_back({"y467-contract-f", [](const Catalog& c) -> ClaimOutcome {
                       std::vector<Matroid> ms;
                       for (int a : {1, 2})
                           for (int b : {0, 1, 2}) ms.push_back(case_matroid({1, 0, a, b, 0}));
                       return contracts_to_ag23e(c, ms, "Y={4,6,7} matrices contract to AG23e");
                   }});
    out.push_back({"y467-alpha1-dual-f7m-map", [](const Catalog& c) -> ClaimOutcome {
                       for (int b : {0, 1, 2}) {
                           Matroid m = case_matroid({1, 0, 1, b, 0});
                           auto res = expect_printed_map(
                               m.deleted(m.mask_of({"5", "7"})), c.get("F7md"),
                               parse_map({{"1", "5"}, {"2", "7"}, {"3", "6"}, {"4", "4"},
                                          {"6", "2"}, {"8", "3"}, {"f", "1"}}),
                               "stated isomorphism onto the dual of F7m");
                           if (!res.ok) return res;
                       }
                       return pass(json());
                   }});
    out.push_back({"y467-alpha2-d3", [](const Catalog& c) -> ClaimOutcome {
                       for (int b : {0, 1, 2}) {
                           Matroid m = case_matroid({1, 0, 2, b, 0});
                           auto res = expect_iso(m.deleted(m.mask_of({"7"})), c.get("D3AG23e"),
                                                 "deleting 7 gives D3AG23e");
                           if (!res.ok) return res;
                       }
                       return pass(json());
                   }});

    // Case with Y = {4,6,8}: f-row (1, 0, alpha, 0, beta).
    out.push_back({"y468-contract-f", [](const Catalog& c) -> ClaimOutcome {
                       std::vector<Matroid> ms;
                       for (int a : {1, 2})
                           for (int b : {1, 2}) ms.push_back(case_matroid({1, 0, a, 0, b}));
                       return contracts_to_ag23e(c, ms, "Y={4,6,8} matrices contract to AG23e");
                   }});
    out.push_back({"y468-a1b1-d3-map", [](const Catalog& c) -> ClaimOutcome {
                       Matroid m = case_matroid({1, 0, 1, 0, 1});
                       return expect_printed_map(
                           m.deleted(m.mask_of({"5"})), c.get("D3AG23e"),
                           parse_map({{"1", "1"}, {"2", "2"}, {"3", "4"}, {"4", "3"},
                                      {"6", "8"}, {"7", "7"}, {"8", "6"}, {"f", "5"}}),
                           "stated isomorphism onto D3AG23e");
                   }});
    out.push_back({"y468-a1b2-p8-map", [](const Catalog& c) -> ClaimOutcome {
                       Matroid m = case_matroid({1, 0, 1, 0, 2});
                       return expect_printed_map(
                           m.deleted(m.mask_of({"5"})), c.get("P8"),
                           parse_map({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "6"},
                                      {"6", "1"}, {"7", "5"}, {"8", "8"}, {"f", "7"}}),
                           "stated isomorphism onto P8");
                   }});
    out.push_back({"y468-a2b1-f7m-map", [](const Catalog& c) -> ClaimOutcome {
                       Matroid m = case_matroid({1, 0, 2, 0, 1});
                       Matroid q = m.contracted(m.mask_of({"1"}));
                       return expect_printed_map(
                           q.deleted(q.mask_of({"5"})), c.get("F7m"),
                           parse_map({{"2", "2"}, {"3", "3"}, {"4", "1"}, {"6", "7"},
                                      {"7", "6"}, {"8", "5"}, {"f", "4"}}),
                           "stated isomorphism onto F7m");
                   }});
    out.push_back({"y468-a2b2-d3-map", [](const Catalog& c) -> ClaimOutcome {
                       Matroid m = case_matroid({1, 0, 2, 0, 2});
                       return expect_printed_map(
                           m.deleted(m.mask_of({"5"})), c.get("D3AG23e"),
                           parse_map({{"1", "2"}, {"2", "7"}, {"3", "5"}, {"4", "4"},
                                      {"6", "3"}, {"7", "6"}, {"8", "8"}, {"f", "1"}}),
                           "stated isomorphism onto D3AG23e");
                   }});

    // Case with Y = {4,5,6}: f-row (1, alpha, beta, 0, 0).
    out.push_back({"y456-contract-f", [](const Catalog& c) -> ClaimOutcome {
                       std::vector<Matroid> ms;
                       for (int a : {1, 2})
                           for (int b : {0, 1, 2}) ms.push_back(case_matroid({1, a, b, 0, 0}));
                       return contracts_to_ag23e(c, ms, "Y={4,5,6} matrices contract to AG23e");
                   }});
    out.push_back({"y456-alpha1-dual-f7m-map", [](const Catalog& c) -> ClaimOutcome {
                       for (int b : {0, 1, 2}) {
                           Matroid m = case_matroid({1, 1, b, 0, 0});
                           auto res = expect_printed_map(
                               m.deleted(m.mask_of({"6", "8"})), c.get("F7md"),
                               parse_map({{"1", "5"}, {"2", "6"}, {"3", "7"}, {"4", "1"},
                                          {"5", "4"}, {"7", "3"}, {"f", "2"}}),
                               "stated isomorphism onto the dual of F7m");
                           if (!res.ok) return res;
                       }
                       return pass(json());
                   }});
    out.push_back({"y456-alpha2-d3-map", [](const Catalog& c) -> ClaimOutcome {
                       for (int b : {0, 1, 2}) {
                           Matroid m = case_matroid({1, 2, b, 0, 0});
                           auto res = expect_printed_map(
                               m.deleted(m.mask_of({"6"})), c.get("D3AG23e"),
                               parse_map({{"1", "8"}, {"2", "3"}, {"3", "2"}, {"4", "7"},
                                          {"5", "1"}, {"7", "4"}, {"8", "6"}, {"f", "5"}}),
                               "stated isomorphism onto D3AG23e");
                           if (!res.ok) return res;
                       }
                       return pass(json());
                   }});

    out.push_back({"row-coextensions-rederivation", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& ag = c.get("AG23e");
                       const Matroid& d3 = c.get("D3AG23e");
                       auto sru = Catalog::ex_set_names("sru");
                       int scanned = 0, connected = 0, survivors = 0;
                       for (const Matroid& m : linear_extensions(*ag.linear(), AppendSide::row, "f")) {
                           ++scanned;
                           if (!is_three_connected(m)) continue;
                           ++connected;
                           bool representable_surrogate = true;
                           for (const auto& name : sru)
                               if (has_minor(m, c.get(name))) {
                                   representable_surrogate = false;
                                   break;
                               }
                           if (!representable_surrogate) continue;
                           ++survivors;
                           if (!has_minor(m, d3)) {
                               json j;
                               j["counterexample"] = serialize_matroid("lift", m);
                               return fail(std::move(j), "survivor without the required minor");
                           }
                       }
                       if (survivors == 0) return fail(json(), "enumeration produced no survivors");
                       json j;
                       j["rows_scanned"] = scanned;
                       j["three_connected"] = connected;
                       j["survivors"] = survivors;
                       return pass(std::move(j));
                   }});
    return out;
}

std::vector<ClaimDef> ag23_coext_claims(const Catalog&) {
    return {{"deletable-element-exists", [](const Catalog& c) -> ClaimOutcome {
                 const Matroid& ag = c.get("AG23");
                 int scanned = 0, connected = 0;
                 for (const Matroid& m : linear_extensions(*ag.linear(), AppendSide::row, "f")) {
                     ++scanned;
                     if (!is_three_connected(m)) continue;
                     ++connected;
                     bool found = false;
                     for (int g = 0; g < m.size() && !found; ++g) {
                         if (m.ground().label(g) == "f") continue;
                         if (is_three_connected(m.deleted(bit(g)))) found = true;
                     }
                     if (!found)
                         return fail(json{{"rows_scanned", scanned}},
                                     "3-connected coextension with no deletable element");
                 }
                 if (connected == 0) return fail(json(), "no 3-connected coextension found");
                 json j;
                 j["rows_scanned"] = scanned;
                 j["three_connected"] = connected;
                 return pass(std::move(j));
             }}};
}

std::vector<ClaimDef> splitter_regular_claims(const Catalog&) {
    std::vector<ClaimDef> out;
    out.push_back({"f7-inside-class", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, c.get("F7"), {"U24", "F7d"});
                   }});
    out.push_back({"extensions-leave-class", [](const Catalog& c) -> ClaimOutcome {
                       int three_connected = 0;
                       for (const Matroid& m : single_element_extensions(c.get("F7"), "e")) {
                           if (!is_three_connected(m)) continue;
                           ++three_connected;
                           if (!has_minor(m, c.get("U24")) && !has_minor(m, c.get("F7d")))
                               return fail(json(), "3-connected extension stays in the class");
                       }
                       if (three_connected == 0) return fail(json(), "no 3-connected extension found");
                       return pass(json{{"three_connected_extensions", three_connected}});
                   }});
    out.push_back({"coextensions-leave-class", [](const Catalog& c) -> ClaimOutcome {
                       int three_connected = 0;
                       for (const Matroid& m : single_element_coextensions(c.get("F7"), "e")) {
                           if (!is_three_connected(m)) continue;
                           ++three_connected;
                           if (!has_minor(m, c.get("U24")) && !has_minor(m, c.get("F7d")))
                               return fail(json(), "3-connected coextension stays in the class");
                       }
                       if (three_connected == 0) return fail(json(), "no 3-connected coextension found");
                       return pass(json{{"three_connected_coextensions", three_connected}});
                   }});
    return out;
}

std::vector<ClaimDef> splitter_gf3_claims(const Catalog&) {
    std::vector<ClaimDef> out;
    out.push_back({"f7-inside-class", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, c.get("F7"), {"U25", "U35", "F7d"});
                   }});
    out.push_back({"extensions-contract-to-u25", [](const Catalog& c) -> ClaimOutcome {
                       int three_connected = 0;
                       for (const Matroid& m : single_element_extensions(c.get("F7"), "e")) {
                           if (!is_three_connected(m)) continue;
                           ++three_connected;
                           Matroid q = m.contracted(m.mask_of({"e"}));
                           if (!has_minor(q, c.get("U25")))
                               return fail(json(), "contraction misses the U25 minor");
                       }
                       if (three_connected == 0) return fail(json(), "no 3-connected extension found");
                       return pass(json{{"three_connected_extensions", three_connected}});
                   }});
    out.push_back({"extensions-on-at-most-one-line", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& f7 = c.get("F7");
                       auto lines = f7.triangles();
                       for (const Matroid& m : single_element_extensions(f7, "e")) {
                           if (!is_three_connected(m)) continue;
                           int e = m.ground().index_of("e");
                           int on = 0;
                           for (Mask t : lines) {
                               Mask lifted = 0;
                               for (Mask r = t; r; r &= r - 1)
                                   lifted |= bit(m.ground().index_of(f7.ground().label(lowest_bit(r))));
                               if (m.rank_of(lifted | bit(e)) == 2) ++on;
                           }
                           if (on > 1) return fail(json{{"lines_through_e", on}},
                                                   "new point lies on more than one line");
                       }
                       return pass(json());
                   }});
    out.push_back({"coextensions-leave-class", [](const Catalog& c) -> ClaimOutcome {
                       int three_connected = 0;
                       for (const Matroid& m : single_element_coextensions(c.get("F7"), "e")) {
                           if (!is_three_connected(m)) continue;
                           ++three_connected;
                           if (!has_minor(m, c.get("U25")) && !has_minor(m, c.get("U35")) &&
                               !has_minor(m, c.get("F7d")))
                               return fail(json(), "3-connected coextension stays in the class");
                       }
                       if (three_connected == 0) return fail(json(), "no 3-connected coextension found");
                       return pass(json{{"three_connected_coextensions", three_connected}});
                   }});
    out.push_back({"ag32-relaxations-isomorphic", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& ag = c.get("AG32");
                       std::vector<Matroid> rel;
                       for (Mask x : ag.circuits())
                           if (ag.rank_of(x) == ag.rank() - 1 && ag.closure(x) == x)
                               rel.push_back(ag.relaxed(x));
                       if (rel.empty()) return fail(json(), "no circuit-hyperplane found");
                       for (size_t i = 1; i < rel.size(); ++i)
                           if (!isomorphism(rel[0], rel[i]))
                               return fail(json{{"index", i}}, "relaxations differ");
                       return pass(json{{"relaxations", rel.size()}});
                   }});
    out.push_back({"ag32-relaxation-has-dual-fano-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_minor(c, c.get("AG32r"), "F7d");
                   }});
    return out;
}

void family_claims_for(const std::string& prefix, const char* seed_name,
                       std::array<const char*, 3> t, int n, const char* needed,
                       std::vector<std::string> forbidden, std::vector<ClaimDef>& out) {
    std::array<std::string, 3> start = {t[0], t[1], t[2]};
    std::string seed = seed_name;
    std::string need = needed;
    out.push_back({prefix + "-n" + std::to_string(n) + "-three-connected",
                   [seed, start, n](const Catalog& c) -> ClaimOutcome {
                       Matroid phi = grow_fan(c.get(seed), start, n);
                       if (!is_three_connected(phi)) return fail(json(), "grown matroid not 3-connected");
                       return pass(json{{"elements", phi.size()}});
                   }});
    out.push_back({prefix + "-n" + std::to_string(n) + "-required-minor",
                   [seed, start, n, need](const Catalog& c) -> ClaimOutcome {
                       Matroid phi = grow_fan(c.get(seed), start, n);
                       return expect_minor(c, phi, need);
                   }});
    out.push_back({prefix + "-n" + std::to_string(n) + "-no-forbidden-minor",
                   [seed, start, n, forbidden](const Catalog& c) -> ClaimOutcome {
                       Matroid phi = grow_fan(c.get(seed), start, n);
                       return expect_no_minors(c, phi, forbidden);
                   }});
}

const std::vector<std::string> kForbiddenM8 = {"U25", "U26", "U35", "U46", "P6", "F7",
                                               "F7d", "F7md", "AG23e", "AG23ed", "D3AG23e",
                                               "P8", "P8="};
const std::vector<std::string> kForbiddenM9 = {"U25", "U35", "F7", "F7d", "F7m",
                                               "F7md", "AG23e", "AG23ed", "P8"};
const std::vector<std::string> kForbiddenM7 = {"U26", "U46", "F7m", "F7md", "P8", "P8="};

std::vector<ClaimDef> family_m8_claims(const Catalog&) {
    std::vector<ClaimDef> out;
    out.push_back({"m8-three-connected-with-fan", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m8 = c.get("M8");
                       if (!is_three_connected(m8)) return fail(json(), "M8 not 3-connected");
                       std::vector<int> seq = {m8.ground().index_of("3"), m8.ground().index_of("6"),
                                               m8.ground().index_of("8")};
                       if (!m8.is_triangle(indices_to_mask(seq)) || !is_fan(m8, seq))
                           return fail(json(), "(3,6,8) is not a triangle fan");
                       return pass(json());
                   }});
    out.push_back({"m8-delete8-is-f7m", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m8 = c.get("M8");
                       return expect_same_oracle(m8.deleted(m8.mask_of({"8"})), c.get("F7m"),
                                                 "M8 minus 8 equals the pinned F7m matrix");
                   }});
    out.push_back({"delta-m8-two-triangles", [](const Catalog& c) -> ClaimOutcome {
                       Matroid d = delta_y(c.get("M8"), {"3", "6", "8"});
                       auto tris = d.triangles();
                       std::vector<Mask> want = {d.mask_of({"2", "5", "7"}), d.mask_of({"1", "2", "4"})};
                       std::sort(want.begin(), want.end());
                       std::sort(tris.begin(), tris.end());
                       if (tris != want)
                           return fail(json{{"count", tris.size()}},
                                       "triangles differ from {2,5,7},{1,2,4}");
                       return pass(json());
                   }});
    out.push_back({"m8-delete2-disjoint-triangles", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m8 = c.get("M8");
                       Matroid q = m8.deleted(m8.mask_of({"2"}));
                       auto tris = q.triangles();
                       for (size_t i = 0; i < tris.size(); ++i)
                           for (size_t j = i + 1; j < tris.size(); ++j)
                               if (!(tris[i] & tris[j]))
                                   return pass(json{{"pair", json::array({mask_json(q, tris[i]),
                                                                          mask_json(q, tris[j])})}});
                       return fail(json(), "no disjoint triangles in M8 minus 2");
                   }});
    out.push_back({"f7m-has-no-disjoint-triangles", [](const Catalog& c) -> ClaimOutcome {
                       auto tris = c.get("F7m").triangles();
                       for (size_t i = 0; i < tris.size(); ++i)
                           for (size_t j = i + 1; j < tris.size(); ++j)
                               if (!(tris[i] & tris[j])) return fail(json(), "disjoint triangles in F7m");
                       return pass(json());
                   }});
    out.push_back({"delta-m8-minus2-ydelta-roundtrip", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m8 = c.get("M8");
                       Matroid d = delta_y(m8, {"3", "6", "8"});
                       Matroid d2 = d.deleted(d.mask_of({"2"}));
                       if (!d2.is_triad(d2.mask_of({"3", "6", "8"})))
                           return fail(json(), "{3,6,8} is not a triad after deleting 2");
                       Matroid back = y_delta(d2, {"3", "6", "8"});
                       return expect_same_oracle(back, m8.deleted(m8.mask_of({"2"})),
                                                 "triad exchange returns M8 minus 2");
                   }});
    out.push_back({"m8-no-forbidden-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, c.get("M8"), kForbiddenM8);
                   }});
    out.push_back({"delta-m8-no-forbidden-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, delta_y(c.get("M8"), {"3", "6", "8"}), kForbiddenM8);
                   }});
    for (int n : {3, 4, 5})
        family_claims_for("grow", "M8", {"3", "6", "8"}, n, "F7m", kForbiddenM8, out);
    return out;
}

std::vector<ClaimDef> family_m9_claims(const Catalog&) {
    std::vector<ClaimDef> out;
    out.push_back({"m9-triangles", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m9 = c.get("M9");
                       auto tris = m9.triangles();
                       std::vector<Mask> want = {m9.mask_of({"1", "2", "9"}), m9.mask_of({"3", "5", "9"}),
                                                 m9.mask_of({"3", "4", "6"})};
                       std::sort(want.begin(), want.end());
                       std::sort(tris.begin(), tris.end());
                       if (tris != want) return fail(json(), "triangle list differs");
                       return pass(json());
                   }});
    out.push_back({"m9-delete9-is-d3", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m9 = c.get("M9");
                       return expect_same_oracle(m9.deleted(m9.mask_of({"9"})), c.get("D3AG23e"),
                                                 "M9 minus 9 equals the pinned exchange matrix");
                   }});
    out.push_back({"exchange-roundtrip-m9", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m9 = c.get("M9");
                       Matroid d = delta_y(m9, {"3", "5", "9"});
                       Matroid back = y_delta(d, {"3", "5", "9"});
                       return expect_same_oracle(back, m9, "exchange round trip returns M9");
                   }});
    out.push_back({"m9-no-forbidden-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, c.get("M9"), kForbiddenM9);
                   }});
    out.push_back({"delta-m9-no-forbidden-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, delta_y(c.get("M9"), {"3", "5", "9"}), kForbiddenM9);
                   }});
    for (int n : {3, 4})
        family_claims_for("grow", "M9", {"3", "5", "9"}, n, "D3AG23e", kForbiddenM9, out);
    return out;
}

std::vector<ClaimDef> family_m7_claims(const Catalog&) {
    std::vector<ClaimDef> out;
    out.push_back({"m7-delete1-is-p6", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m7 = c.get("M7");
                       return expect_iso(m7.deleted(m7.mask_of({"1"})), c.get("P6"),
                                         "M7 minus 1 is P6");
                   }});
    out.push_back({"m7-unique-triple-point", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m7 = c.get("M7");
                       auto tris = m7.triangles();
                       std::vector<std::string> heavy;
                       for (int e = 0; e < m7.size(); ++e) {
                           int cnt = 0;
                           for (Mask t : tris)
                               if (t & bit(e)) ++cnt;
                           if (cnt >= 3) heavy.push_back(m7.ground().label(e));
                       }
                       if (heavy != std::vector<std::string>{"1"})
                           return fail(json{{"heavy", heavy}}, "element on three triangles not unique");
                       return pass(json());
                   }});
    out.push_back({"m7-p6-only-through-1", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m7 = c.get("M7");
                       const Matroid& p6 = c.get("P6");
                       for (int e = 0; e < m7.size(); ++e) {
                           bool iso = bool(isomorphism(m7.deleted(bit(e)), p6));
                           if (iso != (m7.ground().label(e) == "1"))
                               return fail(json{{"element", m7.ground().label(e)}},
                                           "single-element deletions misbehave");
                       }
                       return pass(json());
                   }});
    out.push_back({"m7-no-forbidden-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, c.get("M7"), kForbiddenM7);
                   }});
    out.push_back({"delta-m7-no-forbidden-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, delta_y(c.get("M7"), {"1", "2", "4"}), kForbiddenM7);
                   }});
    for (int n : {3, 4, 5})
        family_claims_for("grow", "M7", {"1", "2", "4"}, n, "P6", kForbiddenM7, out);
    return out;
}

std::vector<ClaimDef> growfan_props_claims(const Catalog&) {
    std::vector<ClaimDef> out;
    for (const GrowInstance& gi : grow_instances()) {
        for (int n : {3, 4, 5}) {
            std::string base = std::string(gi.id) + "-n" + std::to_string(n);
            out.push_back({base + "-fan", [gi, n](const Catalog& c) -> ClaimOutcome {
                               Matroid phi = grow_fan(c.get(gi.matroid), start_of(gi), n);
                               return grown_fan_claim(phi, grown_fan_labels(gi, n));
                           }});
            out.push_back({base + "-keeps-seed-minor", [gi, n](const Catalog& c) -> ClaimOutcome {
                               const Matroid& seed = c.get(gi.matroid);
                               Matroid phi = grow_fan(seed, start_of(gi), n);
                               return grown_minor_claim(seed, phi, start_of(gi), n);
                           }});
            out.push_back({base + "-three-connected", [gi, n](const Catalog& c) -> ClaimOutcome {
                               Matroid phi = grow_fan(c.get(gi.matroid), start_of(gi), n);
                               if (!is_three_connected(phi))
                                   return fail(json(), "grown matroid not 3-connected");
                               return pass(json{{"elements", phi.size()}});
                           }});
            out.push_back({base + "-size", [gi, n](const Catalog& c) -> ClaimOutcome {
                               const Matroid& seed = c.get(gi.matroid);
                               Matroid phi = grow_fan(seed, start_of(gi), n);
                               if (phi.size() != seed.size() + 2 * n - 4)
                                   return fail(json{{"size", phi.size()}}, "element count is off");
                               return pass(json{{"size", phi.size()}});
                           }});
        }
    }
    return out;
}

std::vector<ClaimDef> nofanfan_props_claims(const Catalog&) {
    std::vector<ClaimDef> out;
    const std::vector<std::string> pattern_names = {"U25", "U26", "U35", "U46", "P6", "F7",
                                                    "F7d", "F7m", "F7md", "AG23e", "AG23ed",
                                                    "D3AG23e", "P8", "P8="};
    for (const GrowInstance& gi : grow_instances()) {
        out.push_back({std::string("implication-") + gi.id,
                       [gi, pattern_names](const Catalog& c) -> ClaimOutcome {
                           const Matroid& seed = c.get(gi.matroid);
                           if (seed.size() < 5) return fail(json(), "seed too small");
                           Matroid delta = delta_y(seed, start_of(gi));
                           int checked = 0, nonvacuous = 0;
                           for (int n : {3, 4}) {
                               Matroid phi = grow_fan(seed, start_of(gi), n);
                               for (const auto& pname : pattern_names) {
                                   const Matroid& pat = c.get(pname);
                                   if (!is_three_connected(pat)) continue;
                                   if (!find_fans_of_length(pat, 4).empty()) continue;
                                   if (has_minor(seed, pat)) continue;
                                   ++checked;
                                   if (!has_minor(phi, pat)) continue;
                                   ++nonvacuous;
                                   if (!has_minor(delta, pat))
                                       return fail(json{{"pattern", pname}, {"n", n}},
                                                   "grown minor without exchange minor");
                               }
                           }
                           json j;
                           j["implications_checked"] = checked;
                           j["nonvacuous"] = nonvacuous;
                           return pass(std::move(j));
                       }});
    }
    out.push_back({"four-fan-overlap", [](const Catalog& c) -> ClaimOutcome {
                       std::vector<Matroid> hosts = {grow_fan(c.get("M7"), {"1", "2", "4"}, 3),
                                                     grow_fan(c.get("M8"), {"3", "6", "8"}, 3)};
                       std::vector<std::string> pats = {"P6", "U25", "F7m"};
                       int pairs = 0;
                       for (const Matroid& host : hosts) {
                           auto fans4 = find_fans_of_length(host, 4);
                           for (const auto& pname : pats) {
                               const Matroid& pat = c.get(pname);
                               if (!find_fans_of_length(pat, 4).empty()) continue;
                               for (auto [cm, dm] : minor_embeddings(host, pat)) {
                                   Mask s = host.full_mask() & ~(cm | dm);
                                   for (const Fan& f : fans4) {
                                       ++pairs;
                                       if (popcount(f.support() & s) > 3)
                                           return fail(json{{"pattern", pname},
                                                            {"fan", mask_json(host, f.support())}},
                                                       "4-element fan meets the embedded minor fully");
                                   }
                               }
                           }
                       }
                       if (pairs == 0) return fail(json(), "no fan/embedding pairs exercised");
                       return pass(json{{"pairs_checked", pairs}});
                   }});
    return out;
}

std::vector<ClaimDef> membership_claims(const Catalog&) {
    std::vector<ClaimDef> out;
    out.push_back({"pg32-fano-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_minor(c, c.get("PG32"), "F7");
                   }});
    out.push_back({"pg32-dual-fano-minor", [](const Catalog& c) -> ClaimOutcome {
                       return expect_minor(c, c.get("PG32"), "F7d");
                   }});
    out.push_back({"pg32-no-small-uniform-minors", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, c.get("PG32"), {"U25", "U35"});
                   }});
    out.push_back({"f7-in-uniform-only-class", [](const Catalog& c) -> ClaimOutcome {
                       return expect_no_minors(c, c.get("F7"), {"U25", "U35"});
                   }});
    out.push_back({"u26-witnesses-gf4-difference", [](const Catalog& c) -> ClaimOutcome {
                       std::vector<Matroid> ms = {c.get("U26"), uniform(2, 7)};
                       for (const Matroid& m : ms) {
                           auto rep = in_ex_class(m, {c.get("U46"), c.get("F7m"), c.get("F7md"),
                                                      c.get("P6"), c.get("P8"), c.get("P8=")});
                           if (!rep.in_class) return fail(json(), "uniform witness leaves the class");
                           if (!has_minor(m, c.get("U26"))) return fail(json(), "missing U26 minor");
                       }
                       return pass(json());
                   }});
    out.push_back({"u46-witnesses-gf4-difference", [](const Catalog& c) -> ClaimOutcome {
                       const Matroid& m = c.get("U46");
                       auto rep = in_ex_class(m, {c.get("U26"), c.get("F7m"), c.get("F7md"),
                                                  c.get("P6"), c.get("P8"), c.get("P8=")});
                       if (!rep.in_class) return fail(json(), "U46 leaves the class");
                       return pass(json());
                   }});
    out.push_back({"u25-witnesses-gf3-difference", [](const Catalog& c) -> ClaimOutcome {
                       auto rep = in_ex_class(c.get("U25"), {c.get("U35"), c.get("F7"), c.get("F7d")});
                       if (!rep.in_class) return fail(json(), "U25 leaves the class");
                       return pass(json());
                   }});
    out.push_back({"u25-witnesses-sru-difference", [](const Catalog& c) -> ClaimOutcome {
                       auto rep = in_ex_class(c.get("U25"), {c.get("U35"), c.get("F7"), c.get("F7d"),
                                                             c.get("F7m"), c.get("F7md"), c.get("P8")});
                       if (!rep.in_class) return fail(json(), "U25 leaves the class");
                       return pass(json());
                   }});
    out.push_back({"ag23-family-in-reduced-class", [](const Catalog& c) -> ClaimOutcome {
                       std::vector<std::pair<std::string, const Matroid*>> xs = {
                           {"AG23e", &c.get("AG23e")},
                           {"AG23ed", &c.get("AG23ed")},
                           {"AG23", &c.get("AG23")}};
                       Matroid ag23d = c.get("AG23").dual();
                       xs.emplace_back("AG23-dual", &ag23d);
                       std::vector<Matroid> pats;
                       for (const char* p : {"U25", "U35", "F7d", "F7m", "F7md", "D3AG23e", "P8"})
                           pats.push_back(c.get(p));
                       for (auto& [name, m] : xs) {
                           auto rep = in_ex_class(*m, pats);
                           if (!rep.in_class) {
                               return fail(json{{"matroid", name}}, "family member leaves the class");
                           }
                       }
                       return pass(json{{"members", 4}});
                   }});
    out.push_back({"s5612-in-reduced-sru", [](const Catalog& c) -> ClaimOutcome {
                       auto rep = in_ex_class(c.get("S5612"),
                                              {c.get("U25"), c.get("U35"), c.get("F7d"),
                                               c.get("F7m"), c.get("F7md")});
                       if (!rep.in_class) return fail(json(), "S5612 leaves the reduced class");
                       return pass(json());
                   }});
    out.push_back({"p8eq-in-reduced-gf4", [](const Catalog& c) -> ClaimOutcome {
                       auto rep = in_ex_class(c.get("P8="), {c.get("U26"), c.get("U46"),
                                                             c.get("F7m"), c.get("F7md"), c.get("P6")});
                       if (!rep.in_class) return fail(json(), "P8= leaves the reduced class");
                       return pass(json());
                   }});
    return out;
}

}  // namespace

ClaimExecution execute_claim(const Catalog& cat, const ClaimDef& claim) {
    try {
        ClaimOutcome out = claim.run(cat);
        return {out.ok ? 0 : 1, std::move(out.witness), std::move(out.note)};
    } catch (const GuardExceeded& g) {
        return {2, json(), g.what()};
    } catch (const std::exception& e) {
        return {1, json(), e.what()};
    }
}

const std::vector<ScenarioDef>& scenario_registry() {
    static const std::vector<ScenarioDef> registry = {
        {"catalog-sanity", "catalog load-time assertions", catalog_sanity_claims},
        {"splitter-regular", "Fano splitter check for the class excluding U24 and the dual Fano",
         splitter_regular_claims},
        {"splitter-gf3", "Fano splitter check for the class excluding U25, U35 and the dual Fano",
         splitter_gf3_claims},
        {"ag23e-aut", "automorphisms of the one-point deletion of the ternary affine plane",
         ag23e_aut_claims},
        {"ag23e-cases", "coextensions of AG23e: matrix case analysis plus exhaustive row scan",
         ag23e_cases_claims},
        {"ag23-coext", "3-connected coextensions of the ternary affine plane keep a deletable element",
         ag23_coext_claims},
        {"family-m8", "fan family seeded at M8: required and forbidden minors", family_m8_claims},
        {"family-m9", "fan family seeded at M9: required and forbidden minors", family_m9_claims},
        {"family-m7", "fan family seeded at M7: required and forbidden minors", family_m7_claims},
        {"growfan-props", "fan growing keeps the fan, the seed minor and 3-connectivity",
         growfan_props_claims},
        {"nofanfan-props", "fan growing adds no fan-free minors beyond the triangle exchange",
         nofanfan_props_claims},
        {"membership-spotchecks", "finite membership checks used by the classification results",
         membership_claims},
    };
    return registry;
}

}  // namespace matroidlab
