#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroidlab {

// Rank-n wheel with ground set (s1, r1, s2, r2, ..., sn, rn): {s_i, r_i,
// s_i+1} is a triangle and {r_i, s_i+1, r_i+1} a triad, indices mod n.
Matroid wheel(int n);
// The whirl: the wheel with its rim circuit-hyperplane relaxed. n >= 2.
Matroid whirl(int n);

// Glues N onto M across a common restriction that is a modular flat of N;
// from_n[i] in E(N) is identified with to_m[i] in E(M). The result carries
// M's labels followed by N's leftover labels, is computed from the flat
// family of the gluing with ranks by longest chains, and is materialized to
// a basis-list backing.
Matroid glue_across_flat(const Matroid& n, const Matroid& m,
                         const std::vector<std::string>& from_n,
                         const std::vector<std::string>& to_m);

struct GlueSpec {
    std::array<std::string, 3> triangle_n;
    std::array<std::string, 3> triangle_m;
};

// Generalized parallel connection across a triangle.
Matroid gen_parallel_connection(const Matroid& n, const Matroid& m, const GlueSpec& glue);

// Triangle-triad exchange: replaces a coindependent triangle by a triad via
// a wheel gluing; the three new elements inherit the triangle's labels and
// the ground set keeps its order. y_delta is the inverse on triads.
Matroid delta_y(const Matroid& m, const std::array<std::string, 3>& t);
Matroid y_delta(const Matroid& m, const std::array<std::string, 3>& t);

// Fan growing: glue a rank-n wheel onto the triangle (x1,x2,x3) with s1->x1,
// rn->x2, sn->x3 and delete x2. Fresh elements are f1..f(2n-3), appended
// after M's labels in wheel order (r1, s2, r2, ..., r_{n-1}).
Matroid grow_fan(const Matroid& m, const std::array<std::string, 3>& fan_start, int n);

// Up-closed flat family closed under intersecting modular pairs; indexes a
// single-element extension.
struct ModularCut {
    std::vector<Mask> flats;
};

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All modular cuts via constraint-propagating search over the flats in
// decreasing rank order. Throws GuardExceeded past the node guard.
std::vector<ModularCut> modular_cuts(const Matroid& m, std::uint64_t node_guard = 1ull << 22);

Matroid extend_by_cut(const Matroid& m, const ModularCut& cut, const std::string& new_label);

std::vector<Matroid> single_element_extensions(const Matroid& m, const std::string& new_label);
std::vector<Matroid> single_element_coextensions(const Matroid& m, const std::string& new_label);

enum class AppendSide { row, column };

Matroid append_row(const LinearRep& rep, const std::vector<std::uint8_t>& v,
                   const std::string& new_label);
Matroid append_column(const LinearRep& rep, const std::vector<std::uint8_t>& v,
                      const std::string& new_label);

// All matroids obtained by appending one row (coextensions) or one column
// (extensions) over the field, enumerated up to nonzero scaling with the
// zero vector included.
std::vector<Matroid> linear_extensions(const LinearRep& rep, AppendSide side,
                                       const std::string& new_label);

// Two-sum across a shared basepoint, built by gluing across the rank-1 flat
// and deleting the basepoint.
Matroid two_sum(const Matroid& a, const std::string& p, const Matroid& b, const std::string& q);

}  // namespace matroidlab
