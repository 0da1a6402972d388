#include "matroid/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace matroidlab {

namespace {

void check_table_size(int n) {
    if (n > Matroid::kTableLimit)
        throw std::invalid_argument("ground set exceeds the exhaustive-oracle cap of " +
                                    std::to_string(Matroid::kTableLimit) + " elements");
}

}  // namespace

int LinearRep::rank_of_columns(Mask m) const {
    const SmallField& f = SmallField::get(field);
    // Incremental elimination: reduce each selected column against the pivot
    // columns found so far.
    std::vector<std::vector<std::uint8_t>> piv;
    std::vector<int> piv_row;
    std::vector<std::uint8_t> work(rows);
    int r = 0;
    for (Mask rest = m; rest; rest &= rest - 1) {
        int c = lowest_bit(rest);
        work = cols[c];
        for (size_t k = 0; k < piv.size(); ++k) {
            std::uint8_t v = work[piv_row[k]];
            if (v == 0) continue;
            for (int i = 0; i < rows; ++i)
                work[i] = f.sub(work[i], f.mul(v, piv[k][i]));
        }
        int lead = -1;
        for (int i = 0; i < rows; ++i)
            if (work[i] != 0) { lead = i; break; }
        if (lead < 0) continue;
        std::uint8_t s = f.inv(work[lead]);
        for (int i = 0; i < rows; ++i) work[i] = f.mul(work[i], s);
        piv.push_back(work);
        piv_row.push_back(lead);
        ++r;
    }
    return r;
}

int LinearRep::full_rank() const {
    Mask all = labels.size() == 32 ? ~Mask(0) : (Mask(1) << labels.size()) - 1;
    return rank_of_columns(all);
}

Matroid Matroid::from_linear(LinearRep rep) {
    if (rep.cols.size() != rep.labels.size())
        throw std::invalid_argument("column/label count mismatch");
    const SmallField& f = SmallField::get(rep.field);
    for (const auto& col : rep.cols) {
        if (int(col.size()) != rep.rows) throw std::invalid_argument("ragged matrix");
        for (auto v : col)
            if (v >= f.order()) throw std::invalid_argument("entry out of field range");
    }
    GroundSet ground(rep.labels);
    const int n = ground.size();
    check_table_size(n);
    std::vector<std::uint8_t> table(size_t(1) << n);
    for (Mask x = 0; x < table.size(); ++x) table[x] = std::uint8_t(rep.rank_of_columns(x));
    auto impl = std::make_shared<Impl>();
    impl->ground = std::move(ground);
    impl->table = std::move(table);
    impl->rep = std::move(rep);
    return Matroid(std::move(impl));
}

Matroid Matroid::from_bases(GroundSet ground, std::vector<Mask> bases) {
    if (bases.empty()) throw std::invalid_argument("empty basis list");
    const int n = ground.size();
    check_table_size(n);
    const int r = popcount(bases[0]);
    for (Mask b : bases) {
        if (popcount(b) != r) throw std::invalid_argument("bases not equicardinal");
        if (!subset_of(b, ground.full_mask())) throw std::invalid_argument("basis outside ground set");
    }
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    std::vector<std::uint8_t> table(size_t(1) << n, 0);
    for (Mask x = 0; x < table.size(); ++x) {
        int best = 0;
        for (Mask b : bases) best = std::max(best, popcount(x & b));
        table[x] = std::uint8_t(best);
    }
    auto impl = std::make_shared<Impl>();
    impl->ground = std::move(ground);
    impl->table = std::move(table);
    impl->bases = std::move(bases);
    return Matroid(std::move(impl));
}

Matroid Matroid::from_table(GroundSet ground, std::vector<std::uint8_t> table,
                            std::vector<Mask> bases) {
    const int n = ground.size();
    check_table_size(n);
    if (table.size() != size_t(1) << n) throw std::invalid_argument("bad rank table size");
    auto impl = std::make_shared<Impl>();
    impl->ground = std::move(ground);
    impl->table = std::move(table);
    if (!bases.empty()) {
        std::sort(bases.begin(), bases.end());
        impl->bases = std::move(bases);
    }
    return Matroid(std::move(impl));
}

Matroid Matroid::dual() const {
    const int n = size();
    const Mask full = full_mask();
    const int r = rank();
    std::vector<std::uint8_t> table(size_t(1) << n);
    for (Mask x = 0; x <= full; ++x)
        table[x] = std::uint8_t(popcount(x) - r + p_->table[full & ~x]);
    return from_table(p_->ground, std::move(table));
}

Matroid Matroid::deleted(Mask d) const {
    if (!subset_of(d, full_mask())) throw std::invalid_argument("delete set outside ground set");
    std::vector<int> keep = mask_to_indices(full_mask() & ~d);
    std::vector<std::string> labels;
    for (int i : keep) labels.push_back(ground().label(i));
    const int m = int(keep.size());
    std::vector<std::uint8_t> table(size_t(1) << m);
    for (Mask y = 0; y < table.size(); ++y) {
        Mask x = 0;
        for (int j = 0; j < m; ++j)
            if (y & bit(j)) x |= bit(keep[j]);
        table[y] = p_->table[x];
    }
    Matroid out = from_table(GroundSet(labels), std::move(table));
    // Deleting columns keeps a linear backing usable.
    if (p_->rep) {
        LinearRep rep;
        rep.field = p_->rep->field;
        rep.rows = p_->rep->rows;
        for (int i : keep) {
            rep.cols.push_back(p_->rep->cols[i]);
            rep.labels.push_back(p_->rep->labels[i]);
        }
        auto impl = std::make_shared<Impl>(*out.p_);
        impl->rep = std::move(rep);
        out = Matroid(std::move(impl));
    }
    return out;
}

Matroid Matroid::contracted(Mask c) const {
    if (!subset_of(c, full_mask())) throw std::invalid_argument("contract set outside ground set");
    std::vector<int> keep = mask_to_indices(full_mask() & ~c);
    std::vector<std::string> labels;
    for (int i : keep) labels.push_back(ground().label(i));
    const int m = int(keep.size());
    const int rc = rank_of(c);
    std::vector<std::uint8_t> table(size_t(1) << m);
    for (Mask y = 0; y < table.size(); ++y) {
        Mask x = c;
        for (int j = 0; j < m; ++j)
            if (y & bit(j)) x |= bit(keep[j]);
        table[y] = std::uint8_t(p_->table[x] - rc);
    }
    return from_table(GroundSet(labels), std::move(table));
}

Matroid Matroid::minor(Mask c, Mask d) const {
    if (c & d) throw std::invalid_argument("contract and delete sets overlap");
    if (!subset_of(c | d, full_mask())) throw std::invalid_argument("foreign elements in minor");
    Matroid m = contracted(c);
    return m.deleted(m.mask_of(labels_of(d)));
}

Mask Matroid::closure(Mask x) const {
    Mask out = x;
    const int r = rank_of(x);
    for (Mask rest = full_mask() & ~x; rest; rest &= rest - 1) {
        int e = lowest_bit(rest);
        if (rank_of(x | bit(e)) == r) out |= bit(e);
    }
    return out;
}

Mask Matroid::coclosure(Mask x) const {
    Mask out = x;
    const int cr = corank_of(x);
    for (Mask rest = full_mask() & ~x; rest; rest &= rest - 1) {
        int e = lowest_bit(rest);
        if (corank_of(x | bit(e)) == cr) out |= bit(e);
    }
    return out;
}

Mask Matroid::full_closure(Mask x) const {
    Mask cur = x;
    while (true) {
        Mask next = coclosure(closure(cur));
        if (next == cur) return cur;
        cur = next;
    }
}

bool Matroid::is_circuit(Mask x) const {
    const int k = popcount(x);
    if (k == 0 || rank_of(x) != k - 1) return false;
    for (Mask rest = x; rest; rest &= rest - 1) {
        Mask y = x & ~bit(lowest_bit(rest));
        if (rank_of(y) != k - 1) return false;
    }
    return true;
}

bool Matroid::is_triangle(Mask x) const { return popcount(x) == 3 && is_circuit(x); }

bool Matroid::is_triad(Mask x) const {
    if (popcount(x) != 3) return false;
    // Cocircuit test through the corank formula, no dual construction.
    if (corank_of(x) != 2) return false;
    for (Mask rest = x; rest; rest &= rest - 1) {
        Mask y = x & ~bit(lowest_bit(rest));
        if (corank_of(y) != 2) return false;
    }
    return true;
}

std::vector<Mask> Matroid::circuits(int max_size) const {
    const int n = size();
    const int cap = max_size < 0 ? n : std::min(max_size, n);
    std::vector<Mask> out;
    for (int k = 1; k <= cap; ++k) {
        for_each_combination(n, k, [&](Mask m) {
            if (is_circuit(m)) out.push_back(m);
            return true;
        });
    }
    return out;
}

std::vector<Mask> Matroid::triangles() const {
    std::vector<Mask> out;
    for_each_combination(size(), 3, [&](Mask m) {
        if (is_triangle(m)) out.push_back(m);
        return true;
    });
    return out;
}

std::vector<Mask> Matroid::triads() const {
    std::vector<Mask> out;
    for_each_combination(size(), 3, [&](Mask m) {
        if (is_triad(m)) out.push_back(m);
        return true;
    });
    return out;
}

std::vector<Mask> Matroid::bases() const {
    if (p_->bases) return *p_->bases;
    std::vector<Mask> out;
    for_each_combination(size(), rank(), [&](Mask m) {
        if (rank_of(m) == rank()) out.push_back(m);
        return true;
    });
    return out;
}

std::vector<Mask> Matroid::flats_of_rank(int k) const {
    std::vector<Mask> out;
    const Mask full = full_mask();
    for (Mask x = 0; x <= full; ++x)
        if (p_->table[x] == k && closure(x) == x) out.push_back(x);
    return out;
}

std::vector<Mask> Matroid::all_flats() const {
    std::vector<std::pair<int, Mask>> keyed;
    const Mask full = full_mask();
    for (Mask x = 0; x <= full; ++x)
        if (closure(x) == x) keyed.emplace_back(p_->table[x], x);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Mask> out;
    out.reserve(keyed.size());
    for (auto& [r, m] : keyed) out.push_back(m);
    return out;
}

Mask Matroid::loops() const {
    Mask out = 0;
    for (int e = 0; e < size(); ++e)
        if (rank_of(bit(e)) == 0) out |= bit(e);
    return out;
}

Mask Matroid::coloops() const {
    Mask out = 0;
    for (int e = 0; e < size(); ++e)
        if (rank_of(full_mask() & ~bit(e)) < rank()) out |= bit(e);
    return out;
}

bool Matroid::is_simple() const {
    if (loops()) return false;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rank_of(bit(i) | bit(j)) < 2) return false;
    return true;
}

bool Matroid::is_cosimple() const {
    if (coloops()) return false;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (corank_of(bit(i) | bit(j)) < 2) return false;
    return true;
}

std::vector<Mask> Matroid::parallel_classes() const {
    const Mask non_loops = full_mask() & ~loops();
    std::vector<Mask> out;
    Mask seen = 0;
    for (Mask rest = non_loops; rest; rest &= rest - 1) {
        int e = lowest_bit(rest);
        if (seen & bit(e)) continue;
        Mask cls = closure(bit(e)) & non_loops;
        seen |= cls;
        out.push_back(cls);
    }
    return out;
}

Matroid Matroid::simplified() const {
    Mask drop = loops();
    for (Mask cls : parallel_classes()) drop |= cls & ~bit(lowest_bit(cls));
    return deleted(drop);
}

Matroid Matroid::relaxed(Mask x) const {
    if (!is_circuit(x) || rank_of(x) != rank() - 1 || closure(x) != x)
        throw std::invalid_argument("set is not a circuit-hyperplane");
    std::vector<Mask> b = bases();
    b.push_back(x);
    return from_bases(p_->ground, std::move(b));
}

Matroid Matroid::reordered(const std::vector<std::string>& new_order) const {
    GroundSet g(new_order);
    if (g.size() != size()) throw std::invalid_argument("reorder size mismatch");
    std::vector<int> old_of_new(size());
    for (int j = 0; j < size(); ++j) {
        int i = ground().index_of(new_order[j]);
        if (i < 0) throw std::invalid_argument("reorder label not in ground set");
        old_of_new[j] = i;
    }
    std::vector<std::uint8_t> table(p_->table.size());
    for (Mask y = 0; y < table.size(); ++y) {
        Mask x = 0;
        for (int j = 0; j < size(); ++j)
            if (y & bit(j)) x |= bit(old_of_new[j]);
        table[y] = p_->table[x];
    }
    return from_table(std::move(g), std::move(table));
}

Matroid Matroid::relabeled(const std::vector<std::pair<std::string, std::string>>& renames) const {
    std::vector<std::string> labels = ground().labels();
    for (const auto& [from, to] : renames) {
        int i = ground().index_of(from);
        if (i < 0) throw std::invalid_argument("relabel source not in ground set: " + from);
        labels[i] = to;
    }
    auto impl = std::make_shared<Impl>(*p_);
    impl->ground = GroundSet(labels);
    if (impl->rep) impl->rep->labels = labels;
    return Matroid(std::move(impl));
}

bool Matroid::same_oracle(const Matroid& other) const {
    if (size() != other.size()) return false;
    std::vector<int> map(size());
    for (int i = 0; i < size(); ++i) {
        int j = other.ground().index_of(ground().label(i));
        if (j < 0) return false;
        map[i] = j;
    }
    const Mask full = full_mask();
    for (Mask x = 0; x <= full; ++x) {
        Mask y = 0;
        for (Mask rest = x; rest; rest &= rest - 1) y |= bit(map[lowest_bit(rest)]);
        if (p_->table[x] != other.rank_of(y)) return false;
    }
    return true;
}

Matroid uniform_labeled(int r, const std::vector<std::string>& labels) {
    GroundSet g(labels);
    const int n = g.size();
    if (r < 0 || r > n) throw std::invalid_argument("uniform rank out of range");
    std::vector<std::uint8_t> table(size_t(1) << n);
    for (Mask x = 0; x < table.size(); ++x) table[x] = std::uint8_t(std::min(popcount(x), r));
    std::vector<Mask> bases;
    for_each_combination(n, r, [&](Mask m) {
        bases.push_back(m);
        return true;
    });
    return Matroid::from_table(std::move(g), std::move(table), std::move(bases));
}

Matroid uniform(int r, int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return uniform_labeled(r, labels);
}

}  // namespace matroidlab
