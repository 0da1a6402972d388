#pragma once

#include <iosfwd>
#include <string>

#include "matroid/matroid.hpp"

namespace matroidlab {

// Matroid text format. Grammar (one directive per line, '#' starts a
// comment, blank lines ignored):
//
//   name: <token>
//   kind: linear | bases
//   field: GF2 | GF3 | GF4 | GF5 | GF8        (linear only)
//   labels: <label> ...
//   row: <entry> ...                          (linear; one line per matrix row)
//   basis: <label> ...                        (bases; one line per basis)
//
// Entries use the canonical element tokens of the field (0 1 2, 0 1 w w2,
// 0 1 a a+1 a2 ...); prime fields also accept negative decimals like -1.
// The serializer emits directives in the order above with single spaces,
// so serializing the same matroid twice is byte-identical.

struct NamedMatroid {
    std::string name;
    Matroid matroid;
};

NamedMatroid parse_matroid(std::istream& in);
NamedMatroid parse_matroid_string(const std::string& text);
NamedMatroid load_matroid_file(const std::string& path);

std::string serialize_matroid(const std::string& name, const Matroid& m);

}  // namespace matroidlab
