#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matroid/gf.hpp"

using namespace matroidlab;

namespace {
const FieldId kAll[] = {FieldId::GF2, FieldId::GF3, FieldId::GF4, FieldId::GF5, FieldId::GF8};
}

TEST_CASE("field axioms hold exhaustively") {
    for (FieldId id : kAll) {
        const SmallField& f = SmallField::get(id);
        const int q = f.order();
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.add(a, b) < q);
                CHECK(f.mul(a, b) < q);
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("frobenius in characteristic two") {
    for (FieldId id : {FieldId::GF4, FieldId::GF8}) {
        const SmallField& f = SmallField::get(id);
        for (int a = 0; a < f.order(); ++a)
            for (int b = 0; b < f.order(); ++b) {
                auto sq = [&](int x) { return f.mul(x, x); };
                CHECK(sq(f.add(a, b)) == f.add(sq(a), sq(b)));
            }
    }
}

TEST_CASE("element orders divide q-1") {
    for (FieldId id : kAll) {
        const SmallField& f = SmallField::get(id);
        for (int a = 1; a < f.order(); ++a) {
            int ord = 1;
            std::uint8_t x = std::uint8_t(a);
            while (x != 1) {
                x = f.mul(x, std::uint8_t(a));
                ++ord;
            }
            CHECK((f.order() - 1) % ord == 0);
        }
    }
}

TEST_CASE("pinned arithmetic facts") {
    const SmallField& g3 = SmallField::get(FieldId::GF3);
    CHECK(g3.add(1, g3.neg(1)) == 0);
    CHECK(g3.neg(1) == 2);

    const SmallField& g8 = SmallField::get(FieldId::GF8);
    std::uint8_t a = g8.generator();
    CHECK(g8.add(a, a) == 0);
    CHECK(g8.mul(g8.mul(a, a), a) == g8.add(a, 1));

    const SmallField& g4 = SmallField::get(FieldId::GF4);
    std::uint8_t w = g4.generator();
    CHECK(g4.add(w, 1) == g4.mul(w, w));

    const SmallField& g5 = SmallField::get(FieldId::GF5);
    int inv2 = -1;
    for (int b = 1; b < 5; ++b)
        if (g5.mul(2, b) == 1) inv2 = b;
    CHECK(inv2 == 3);
    CHECK(g5.inv(2) == 3);
}

TEST_CASE("element operations check field membership") {
    FieldElement a{FieldId::GF3, 1}, b{FieldId::GF5, 1};
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(inv(FieldElement{FieldId::GF3, 0}), std::domain_error);
    CHECK(add(a, neg(a)).value == 0);
}

TEST_CASE("format and parse round-trip") {
    for (FieldId id : kAll) {
        const SmallField& f = SmallField::get(id);
        for (int a = 0; a < f.order(); ++a) CHECK(f.parse(f.format(a)) == a);
    }
    CHECK(SmallField::get(FieldId::GF3).parse("-1") == 2);
    CHECK(SmallField::get(FieldId::GF5).parse("-2") == 3);
    CHECK(SmallField::get(FieldId::GF8).format(3) == "a+1");
    CHECK(SmallField::get(FieldId::GF4).format(3) == "w2");
    CHECK_THROWS_AS(SmallField::get(FieldId::GF4).parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(field_from_name("GF7"), std::invalid_argument);
}
