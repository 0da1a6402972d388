#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace matroidlab {

// Subsets of a ground set are bitmasks over element indices; ground sets are
// capped at 31 elements so every subset fits a machine word.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask bit(int i) { return Mask(1) << i; }

std::vector<int> mask_to_indices(Mask m);
Mask indices_to_mask(const std::vector<int>& idx);

// Visits the k-subsets of `pool` (which must be ascending) in lexicographic
// order of their sorted index lists. `f` takes a Mask and returns false to
// stop the enumeration; returns false if stopped early.
template <class F>
bool for_each_combination_of(const std::vector<int>& pool, int k, F&& f) {
    const int n = int(pool.size());
    if (k < 0 || k > n) return true;
    std::vector<int> at(k);
    for (int i = 0; i < k; ++i) at[i] = i;
    while (true) {
        Mask m = 0;
        for (int i = 0; i < k; ++i) m |= bit(pool[at[i]]);
        if (!f(m)) return false;
        if (k == 0) return true;
        int i = k - 1;
        while (i >= 0 && at[i] == n - k + i) --i;
        if (i < 0) return true;
        ++at[i];
        for (int j = i + 1; j < k; ++j) at[j] = at[j - 1] + 1;
    }
}

template <class F>
bool for_each_combination(int n, int k, F&& f) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    return for_each_combination_of(pool, k, static_cast<F&&>(f));
}

// Visits all subsets of `universe`, including empty and full.
template <class F>
void for_each_subset_of(Mask universe, F&& f) {
    Mask s = 0;
    while (true) {
        f(s);
        if (s == universe) return;
        s = (s - universe) & universe;
    }
}

class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return int(labels_.size()); }
    Mask full_mask() const { return size() == 32 ? ~Mask(0) : (Mask(1) << size()) - 1; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // -1 when absent.
    int index_of(const std::string& label) const;
    bool contains(const std::string& label) const { return index_of(label) >= 0; }

    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;

    bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace matroidlab
