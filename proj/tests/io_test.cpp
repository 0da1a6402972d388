#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matroid/catalog.hpp"
#include "matroid/io.hpp"

using namespace matroidlab;

TEST_CASE("serialize/parse round-trip preserves the oracle") {
    Catalog cat;
    for (const char* name : {"M7", "M8", "M9", "F7", "AG23", "P6", "P8=", "WH3"}) {
        const Matroid& m = cat.get(name);
        std::string text = serialize_matroid(name, m);
        NamedMatroid back = parse_matroid_string(text);
        CHECK(back.name == name);
        CHECK(back.matroid.same_oracle(m));
        // canonical form: serializing again is byte-identical
        CHECK(serialize_matroid(name, back.matroid) == text);
    }
}

TEST_CASE("extension-field tokens survive the round trip") {
    Catalog cat;
    const Matroid& m7 = cat.get("M7");
    std::string text = serialize_matroid("M7", m7);
    CHECK(text.find("a2") != std::string::npos);
    CHECK(parse_matroid_string(text).matroid.same_oracle(m7));
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS(parse_matroid_string("kind: linear\nfield: GF3\nlabels: a b\nrow: 1 0\n"));
    CHECK_THROWS(parse_matroid_string("name: x\nkind: linear\nfield: GF3\nlabels: a b\nrow: 1\n"));
    CHECK_THROWS(parse_matroid_string("name: x\nkind: linear\nfield: GF9\nlabels: a\nrow: 1\n"));
    CHECK_THROWS(parse_matroid_string("name: x\nkind: funny\nlabels: a\n"));
    CHECK_THROWS(parse_matroid_string("name: x\nkind: linear\nfield: GF3\nlabels: a a\nrow: 1 1\n"));
    CHECK_THROWS(parse_matroid_string("name: x\nkind: bases\nlabels: a b\nbasis: a c\n"));
    CHECK_THROWS(parse_matroid_string("name: x\nwhat: ever\n"));
    CHECK_THROWS(parse_matroid_string("name: x\nkind: linear\nfield: GF3\nlabels: a\nrow: 2 stray\n"));
    CHECK_THROWS(load_matroid_file("/nonexistent/file.matroid"));
}

TEST_CASE("comments and blank lines are fine") {
    NamedMatroid nm = parse_matroid_string(
        "# free matroid\n\nname: tiny\nkind: linear\nfield: GF2\nlabels: a b\nrow: 1 0 # tail\nrow: 0 1\n");
    CHECK(nm.matroid.rank() == 2);
}

TEST_CASE("negative tokens parse in prime fields") {
    NamedMatroid nm = parse_matroid_string(
        "name: t\nkind: linear\nfield: GF3\nlabels: a b\nrow: 1 -1\n");
    const LinearRep* rep = nm.matroid.linear();
    REQUIRE(rep);
    CHECK(rep->cols[1][0] == 2);
}
