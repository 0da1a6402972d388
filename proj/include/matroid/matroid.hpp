#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matroid/core.hpp"
#include "matroid/gf.hpp"

namespace matroidlab {

// Column-major matrix over one of the small fields; the matroid of the rep
// is the linear dependence matroid of the columns.
struct LinearRep {
    FieldId field = FieldId::GF3;
    int rows = 0;
    std::vector<std::vector<std::uint8_t>> cols;
    std::vector<std::string> labels;

    int rank_of_columns(Mask m) const;
    int full_rank() const;
};

// An immutable matroid value: a ground set of labelled elements plus a rank
// oracle. The full rank table is precomputed at construction (ground sets in
// this project stay well under the 22-element exhaustive cap), which makes
// every oracle query O(1) and the value freely shareable across threads.
class Matroid {
public:
    static constexpr int kTableLimit = 22;

    Matroid() = default;

    static Matroid from_linear(LinearRep rep);
    static Matroid from_bases(GroundSet ground, std::vector<Mask> bases);
    // Trusted constructor for operations that compute the table themselves
    // (duals, minors, glueing, extensions). `bases` may be empty.
    static Matroid from_table(GroundSet ground, std::vector<std::uint8_t> table,
                              std::vector<Mask> bases = {});

    bool valid() const { return bool(p_); }
    const GroundSet& ground() const { return p_->ground; }
    int size() const { return p_->ground.size(); }
    Mask full_mask() const { return p_->ground.full_mask(); }
    int rank() const { return p_->table.empty() ? 0 : p_->table.back(); }
    int corank() const { return size() - rank(); }

    int rank_of(Mask x) const { return p_->table[x]; }
    int corank_of(Mask x) const { return popcount(x) - rank() + rank_of(full_mask() & ~x); }

    // Backing access; null when the matroid was produced by an operation
    // that does not preserve a matrix or basis list.
    const LinearRep* linear() const { return p_->rep ? &*p_->rep : nullptr; }
    const std::vector<Mask>* basis_list() const { return p_->bases ? &*p_->bases : nullptr; }

    Matroid dual() const;
    Matroid deleted(Mask d) const;
    Matroid contracted(Mask c) const;
    Matroid minor(Mask c, Mask d) const;

    Mask closure(Mask x) const;
    Mask coclosure(Mask x) const;
    Mask full_closure(Mask x) const;

    bool is_circuit(Mask x) const;
    bool is_triangle(Mask x) const;
    bool is_triad(Mask x) const;
    bool is_basis(Mask x) const { return popcount(x) == rank() && rank_of(x) == rank(); }
    bool is_flat(Mask x) const { return closure(x) == x; }

    // All circuits of size <= max_size (every circuit when max_size < 0).
    std::vector<Mask> circuits(int max_size = -1) const;
    std::vector<Mask> triangles() const;
    std::vector<Mask> triads() const;
    std::vector<Mask> bases() const;
    std::vector<Mask> flats_of_rank(int k) const;
    std::vector<Mask> hyperplanes() const { return flats_of_rank(rank() - 1); }
    // All flats sorted by (rank, mask).
    std::vector<Mask> all_flats() const;

    Mask loops() const;
    Mask coloops() const;
    bool is_simple() const;
    bool is_cosimple() const;
    // Groups of mutually parallel non-loop elements, one mask per rank-1
    // flat, sorted by lowest member.
    std::vector<Mask> parallel_classes() const;
    // Removes loops and keeps the lowest-indexed member of every parallel
    // class.
    Matroid simplified() const;

    // Turns a set that is both a circuit and a hyperplane into a basis.
    Matroid relaxed(Mask circuit_hyperplane) const;

    // Same labels in a different order / different labels in same order.
    Matroid reordered(const std::vector<std::string>& new_order) const;
    Matroid relabeled(const std::vector<std::pair<std::string, std::string>>& renames) const;

    // Oracle equality: identical label set and identical rank function under
    // the label correspondence.
    bool same_oracle(const Matroid& other) const;

    Mask mask_of(const std::vector<std::string>& labels) const { return ground().mask_of(labels); }
    std::vector<std::string> labels_of(Mask m) const { return ground().labels_of(m); }

private:
    struct Impl {
        GroundSet ground;
        std::vector<std::uint8_t> table;
        std::optional<LinearRep> rep;
        std::optional<std::vector<Mask>> bases;
    };
    std::shared_ptr<const Impl> p_;

    explicit Matroid(std::shared_ptr<const Impl> p) : p_(std::move(p)) {}
};

// Free matroid on r elements / uniform matroid U_{r,n} with labels 1..n.
Matroid uniform(int r, int n);
Matroid uniform_labeled(int r, const std::vector<std::string>& labels);

}  // namespace matroidlab
