#include "matroid/core.hpp"

#include <stdexcept>

namespace matroidlab {

std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> out;
    while (m) {
        int i = lowest_bit(m);
        out.push_back(i);
        m &= m - 1;
    }
    return out;
}

Mask indices_to_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= bit(i);
    return m;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > 31) throw std::invalid_argument("ground set larger than 31 elements");
    for (int i = 0; i < int(labels_.size()); ++i) {
        if (labels_[i].empty()) throw std::invalid_argument("empty element label");
        if (!index_.emplace(labels_[i], i).second)
            throw std::invalid_argument("duplicate element label: " + labels_[i]);
    }
}

int GroundSet::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) {
        int i = index_of(l);
        if (i < 0) throw std::invalid_argument("unknown element label: " + l);
        m |= bit(i);
    }
    return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
    std::vector<std::string> out;
    for (int i : mask_to_indices(m)) out.push_back(labels_[i]);
    return out;
}

}  // namespace matroidlab
