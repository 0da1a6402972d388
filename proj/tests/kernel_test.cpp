#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matroid/catalog.hpp"
#include "matroid/matroid.hpp"
#include "test_util.hpp"

using namespace matroidlab;
using namespace matroidlab::testutil;

namespace {
Catalog& cat() {
    static Catalog c;
    return c;
}
}

TEST_CASE("rank axioms: exhaustive for small catalog entries, sampled above") {
    for (const auto& name : cat().names()) {
        const Matroid& m = cat().get(name);
        if (m.size() <= 10)
            CHECK_MESSAGE(rank_axioms_hold(m), name);
        else
            CHECK_MESSAGE(rank_axioms_sampled(m, 4000, 7), name);
    }
}

TEST_CASE("from_linear basics") {
    const Matroid& d3 = cat().get("D3AG23e");
    CHECK(d3.rank() == 4);
    CHECK(d3.size() == 8);

    LinearRep i3;
    i3.field = FieldId::GF3;
    i3.rows = 3;
    i3.labels = {"1", "2", "3"};
    i3.cols = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(Matroid::from_linear(i3).same_oracle(uniform(3, 3)));

    LinearRep bad = i3;
    bad.cols[0] = {1, 0};
    CHECK_THROWS_AS(Matroid::from_linear(bad), std::invalid_argument);
    bad = i3;
    bad.cols[0] = {7, 0, 0};
    CHECK_THROWS_AS(Matroid::from_linear(bad), std::invalid_argument);
}

TEST_CASE("rank oracle values") {
    const Matroid& m9 = cat().get("M9");
    CHECK(m9.rank_of(m9.mask_of({"3", "5", "9"})) == 2);
    CHECK(m9.rank_of(0) == 0);
    CHECK(cat().get("M8").rank() == 3);
    CHECK_THROWS_AS(m9.mask_of({"nope"}), std::invalid_argument);
}

TEST_CASE("duality") {
    for (const char* name : {"M8", "M9", "F7", "P6", "W4"}) {
        const Matroid& m = cat().get(name);
        CHECK(m.dual().dual().same_oracle(m));
        // corank formula against the dual's own table
        Matroid d = m.dual();
        for (Mask x = 0; x <= m.full_mask(); ++x)
            CHECK(d.rank_of(x) == popcount(x) - m.rank() + m.rank_of(m.full_mask() & ~x));
    }
    CHECK(bool(isomorphism(cat().get("S5612"), cat().get("S5612").dual())));
    CHECK(cat().get("F7m").dual().same_oracle(cat().get("F7md")));
}

TEST_CASE("minors") {
    const Matroid& m8 = cat().get("M8");
    CHECK(m8.deleted(m8.mask_of({"8"})).same_oracle(cat().get("F7m")));
    CHECK(m8.contracted(0).same_oracle(m8));
    const Matroid& m7 = cat().get("M7");
    CHECK(bool(isomorphism(m7.deleted(m7.mask_of({"1"})), cat().get("P6"))));

    // minor = delete-then-contract = contract-then-delete, as oracles
    std::mt19937 rng(11);
    for (const char* name : {"M9", "AG23", "W4"}) {
        const Matroid& m = cat().get(name);
        for (int trial = 0; trial < 40; ++trial) {
            Mask c = std::uniform_int_distribution<Mask>(0, m.full_mask())(rng);
            Mask d = std::uniform_int_distribution<Mask>(0, m.full_mask())(rng) & ~c;
            Matroid a = m.minor(c, d);
            Matroid b0 = m.deleted(d);
            Matroid b = b0.contracted(b0.mask_of(m.labels_of(c)));
            CHECK(a.same_oracle(b));
        }
    }
    CHECK_THROWS_AS(m8.minor(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(m8.deleted(~Mask(0)), std::invalid_argument);
}

TEST_CASE("closure operators") {
    const Matroid& m9 = cat().get("M9");
    CHECK(m9.closure(m9.mask_of({"3", "5"})) == m9.mask_of({"3", "5", "9"}));
    CHECK(m9.closure(m9.full_mask()) == m9.full_mask());

    std::mt19937 rng(3);
    for (const char* name : {"M8", "AG23e", "W4", "P8"}) {
        const Matroid& m = cat().get(name);
        Matroid d = m.dual();
        for (int trial = 0; trial < 50; ++trial) {
            Mask x = std::uniform_int_distribution<Mask>(0, m.full_mask())(rng);
            CHECK(m.coclosure(x) == d.closure(x));
            Mask cl = m.closure(x);
            CHECK(subset_of(x, cl));                    // extensive
            CHECK(m.closure(cl) == cl);                 // idempotent
            Mask y = x | std::uniform_int_distribution<Mask>(0, m.full_mask())(rng);
            CHECK(subset_of(cl, m.closure(y)));         // monotone
            Mask fcl = m.full_closure(x);
            CHECK(subset_of(cl, fcl));
            CHECK(m.full_closure(fcl) == fcl);
            CHECK(subset_of(fcl, m.full_closure(y)));
        }
    }

    // in the rank-3 wheel, every triangle closes fully to the whole set
    const Matroid& w3 = cat().get("W3");
    for (Mask t : w3.triangles()) CHECK(w3.full_closure(t) == w3.full_mask());
}

TEST_CASE("circuits, triangles, triads") {
    const Matroid& m9 = cat().get("M9");
    auto tris = m9.triangles();
    std::vector<Mask> want = {m9.mask_of({"1", "2", "9"}), m9.mask_of({"3", "5", "9"}),
                              m9.mask_of({"3", "4", "6"})};
    std::sort(tris.begin(), tris.end());
    std::sort(want.begin(), want.end());
    CHECK(tris == want);

    // uniform matroids: U24 is self-dual (all 3-subsets are both), U25 has
    // no triads
    CHECK(cat().get("U24").triangles().size() == 4);
    CHECK(cat().get("U24").triads().size() == 4);
    CHECK(cat().get("U25").triangles().size() == 10);
    CHECK(cat().get("U25").triads().empty());

    // circuits returned smallest-first, minimal, and capped correctly
    const Matroid& f7 = cat().get("F7");
    auto small = f7.circuits(3);
    CHECK(small.size() == 7);
    for (Mask c : small) CHECK(f7.is_circuit(c));
}

TEST_CASE("simplicity and simplification") {
    CHECK(cat().get("AG23e").is_simple());
    for (const auto& name : cat().names()) {
        const Matroid& m = cat().get(name);
        CHECK(m.is_cosimple() == m.dual().is_simple());
    }

    // a coloop plus a loop
    Matroid loopy = Matroid::from_bases(GroundSet({"a", "b"}), {bit(0)});
    CHECK(loopy.loops() == bit(1));
    Matroid s = loopy.simplified();
    CHECK(s.size() == 1);
    CHECK(s.ground().label(0) == "a");

    // parallel class keeps the lowest label
    LinearRep rep;
    rep.field = FieldId::GF3;
    rep.rows = 2;
    rep.labels = {"p", "q", "r"};
    rep.cols = {{1, 0}, {2, 0}, {0, 1}};  // p parallel to q
    Matroid par = Matroid::from_linear(rep);
    CHECK_FALSE(par.is_simple());
    Matroid ps = par.simplified();
    CHECK(ps.size() == 2);
    CHECK(ps.ground().contains("p"));
    CHECK_FALSE(ps.ground().contains("q"));
}

TEST_CASE("flats and hyperplanes") {
    const Matroid& f7 = cat().get("F7");
    auto hyps = f7.hyperplanes();
    CHECK(hyps.size() == 7);
    // independent route: maximal non-spanning sets
    for (Mask h : hyps) {
        CHECK(f7.rank_of(h) == f7.rank() - 1);
        for (Mask rest = f7.full_mask() & ~h; rest; rest &= rest - 1)
            CHECK(f7.rank_of(h | bit(lowest_bit(rest))) == f7.rank());
    }
    CHECK(f7.flats_of_rank(f7.rank()) == std::vector<Mask>{f7.full_mask()});
}

TEST_CASE("relaxation requires a circuit-hyperplane") {
    const Matroid& p8 = cat().get("P8");
    CHECK_THROWS_AS(p8.relaxed(p8.mask_of({"1", "2", "3"})), std::invalid_argument);
    Mask ch = p8.mask_of({"1", "4", "5", "8"});
    Matroid r = p8.relaxed(ch);
    CHECK(r.bases().size() == p8.bases().size() + 1);
    CHECK(r.is_basis(ch));
}

TEST_CASE("basis-exchange holds for relaxation and glueing outputs") {
    CHECK(basis_exchange_holds(cat().get("P8=")));
    CHECK(basis_exchange_holds(cat().get("WH3")));
    CHECK(basis_exchange_holds(cat().get("WH4")));
}

TEST_CASE("linear-backed basis lists agree with matrix rank") {
    for (const char* name : {"F7m", "M9", "AG23e"}) {
        const Matroid& m = cat().get(name);
        const LinearRep* rep = m.linear();
        REQUIRE(rep != nullptr);
        auto bases = m.bases();
        std::vector<Mask> byrank;
        for_each_combination(m.size(), m.rank(), [&](Mask x) {
            if (rep->rank_of_columns(x) == m.rank()) byrank.push_back(x);
            return true;
        });
        std::sort(bases.begin(), bases.end());
        std::sort(byrank.begin(), byrank.end());
        CHECK(bases == byrank);
    }
}

TEST_CASE("dual rank formula on all catalog entries up to 12 elements") {
    for (const auto& name : cat().names()) {
        const Matroid& m = cat().get(name);
        if (m.size() > 12) continue;
        Matroid d = m.dual();
        for (Mask x = 0; x <= m.full_mask(); ++x)
            CHECK(d.rank_of(x) == popcount(x) - m.rank() + m.rank_of(m.full_mask() & ~x));
    }
}

TEST_CASE("ground set validation") {
    CHECK_THROWS_AS(GroundSet({"a", "a"}), std::invalid_argument);
    std::vector<std::string> many;
    for (int i = 0; i < 32; ++i) many.push_back(std::to_string(i));
    CHECK_THROWS_AS((GroundSet{many}), std::invalid_argument);
}

TEST_CASE("reorder and relabel") {
    const Matroid& m8 = cat().get("M8");
    std::vector<std::string> rev(m8.ground().labels().rbegin(), m8.ground().labels().rend());
    Matroid r = m8.reordered(rev);
    CHECK(r.same_oracle(m8));
    Matroid rl = m8.relabeled({{"1", "x"}});
    CHECK(rl.ground().contains("x"));
    CHECK_FALSE(rl.same_oracle(m8));
}
