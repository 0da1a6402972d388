#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroidlab {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named small matroids: explicit matrices shipped as data files plus
// programmatic builders (uniform family, wheels, whirls, duals,
// relaxations, projective/affine geometries). Every entry carries expected
// quick facts (rank, size, triangle count, self-duality) that are asserted
// when the entry is first loaded.
class Catalog {
public:
    // Data directory resolution: MATROID_CATALOG_DIR env var when set,
    // otherwise the compiled-in default.
    explicit Catalog(std::string data_dir = default_data_dir());
    static std::string default_data_dir();

    const std::string& data_dir() const { return dir_; }

    const Matroid& get(const std::string& name) const;
    bool has(const std::string& name) const;
    // Canonical entry names in listing order.
    std::vector<std::string> names() const;

    struct Info {
        std::string name;
        std::string provenance;
        int rank;
        int size;
        int triangles;
        int self_dual;  // 1 yes, 0 no, -1 unchecked
    };
    Info info(const std::string& name) const;

    // Excluded-minor lists for the six classes handled by the verifier:
    // GF2, regular, GF3, GF4, sru, nearregular.
    static std::vector<std::string> ex_set_names(const std::string& cls);
    std::vector<const Matroid*> ex_set(const std::string& cls) const;

private:
    std::string dir_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, Matroid> cache_;

    Matroid build(const std::string& name) const;
};

}  // namespace matroidlab
