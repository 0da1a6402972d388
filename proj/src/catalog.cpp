#include "matroid/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "matroid/constructions.hpp"
#include "matroid/io.hpp"
#include "matroid/structure.hpp"

#ifndef MATROIDLAB_DATA_DIR
#define MATROIDLAB_DATA_DIR "data"
#endif

namespace matroidlab {

namespace {

struct Entry {
    const char* name;
    const char* source;  // "file:<stem>" or "builder"
    const char* provenance;
    int rank;
    int size;
    int triangles;
    int self_dual;  // 1/0/-1
};

// Quick facts are asserted on first load.
const Entry kEntries[] = {
    {"U24", "builder", "uniform matroid", 2, 4, 4, 1},
    {"U25", "builder", "uniform matroid", 2, 5, 10, 0},
    {"U35", "builder", "uniform matroid", 3, 5, 0, 0},
    {"U26", "builder", "uniform matroid", 2, 6, 20, 0},
    {"U46", "builder", "uniform matroid", 4, 6, 0, 0},
    {"F7", "file:f7", "binary projective plane", 3, 7, 7, 0},
    {"F7d", "builder", "dual of F7", 4, 7, 0, 0},
    {"F7m", "file:f7m", "projective plane with one relaxed line, ternary matrix", 3, 7, 6, 0},
    {"F7md", "file:f7md", "dual of F7m, pinned matrix", 4, 7, 0, 0},
    {"P6", "file:p6", "six points with exactly one 3-point line", 3, 6, 1, 1},
    {"P7", "file:p7", "ternary 7-point rank-3 matroid, pinned matrix", 3, 7, 5, 0},
    {"O7", "file:o7", "M(K4) plus a point on a triangle line", 3, 7, 7, 0},
    {"P8", "file:p8", "ternary self-dual 8-point rank-4 matroid", 4, 8, 0, 1},
    {"P8=", "builder", "double relaxation of P8's complementary circuit-hyperplane pair", 4, 8, 0, 1},
    {"AG23", "file:ag23", "affine plane of order 3", 3, 9, 12, 0},
    {"AG23e", "file:ag23e", "affine plane of order 3 minus a point", 3, 8, 8, 0},
    {"AG23ed", "builder", "dual of AG23e", 5, 8, 0, 0},
    {"D3AG23e", "file:d3ag23e", "triangle-triad exchange of AG23e", 4, 8, 1, 1},
    {"M7", "file:m7", "GF(8) matrix seed for the fan families", 3, 7, 4, 0},
    {"M8", "file:m8", "ternary matrix seed for the fan families", 3, 8, 10, 0},
    {"M9", "file:m9", "ternary matrix seed for the fan families", 4, 9, 3, 0},
    {"AG32", "builder", "binary affine cube", 4, 8, 0, 1},
    {"AG32r", "builder", "circuit-hyperplane relaxation of AG32", 4, 8, 0, 1},
    {"PG32", "builder", "binary projective space of rank 4", 4, 15, 35, 0},
    {"W3", "builder", "rank-3 wheel, the cycle matroid of K4", 3, 6, 4, 1},
    {"W4", "builder", "rank-4 wheel", 4, 8, 4, 1},
    {"W5", "builder", "rank-5 wheel", 5, 10, 5, 1},
    {"WH2", "builder", "rank-2 whirl", 2, 4, 4, 1},
    {"WH3", "builder", "rank-3 whirl", 3, 6, 3, 1},
    {"WH4", "builder", "rank-4 whirl", 4, 8, 4, 1},
    {"WH5", "builder", "rank-5 whirl", 5, 10, 5, 1},
    {"S5612", "file:s5612", "ternary Golay code matroid", 6, 12, 0, 1},
};

const Entry* find_entry(const std::string& name) {
    for (const Entry& e : kEntries)
        if (name == e.name) return &e;
    return nullptr;
}

std::string resolve_alias(const std::string& name) {
    if (name == "MK4") return "W3";
    if (name == "P8eq") return "P8=";
    return name;
}

Matroid least_relaxation(const Matroid& m) {
    for (Mask x : m.circuits())
        if (m.rank_of(x) == m.rank() - 1 && m.closure(x) == x) return m.relaxed(x);
    throw CatalogError("no circuit-hyperplane to relax");
}

// P8 has ten circuit-hyperplanes; exactly one complementary pair among them.
// The catalog's P8= is the double relaxation of that pair (the single
// relaxations from the other orbit are not minor-minimal for GF(4): they
// contain P6).
Matroid doubly_relaxed_p8(const Matroid& p8) {
    std::vector<Mask> chs;
    for (Mask x : p8.circuits())
        if (p8.rank_of(x) == p8.rank() - 1 && p8.closure(x) == x) chs.push_back(x);
    const Mask full = p8.full_mask();
    for (Mask x : chs) {
        Mask y = full & ~x;
        if (std::find(chs.begin(), chs.end(), y) != chs.end())
            return p8.relaxed(x).relaxed(y);
    }
    throw CatalogError("P8: no complementary pair of circuit-hyperplanes");
}

Matroid binary_affine_cube() {
    LinearRep rep;
    rep.field = FieldId::GF2;
    rep.rows = 4;
    for (int v = 0; v < 8; ++v) {
        rep.labels.push_back(std::to_string(v + 1));
        rep.cols.push_back({1, std::uint8_t(v & 1), std::uint8_t((v >> 1) & 1),
                            std::uint8_t((v >> 2) & 1)});
    }
    return Matroid::from_linear(std::move(rep));
}

Matroid binary_projective_rank4() {
    LinearRep rep;
    rep.field = FieldId::GF2;
    rep.rows = 4;
    for (int v = 1; v < 16; ++v) {
        rep.labels.push_back(std::to_string(v));
        rep.cols.push_back({std::uint8_t(v & 1), std::uint8_t((v >> 1) & 1),
                            std::uint8_t((v >> 2) & 1), std::uint8_t((v >> 3) & 1)});
    }
    return Matroid::from_linear(std::move(rep));
}

}  // namespace

Catalog::Catalog(std::string data_dir) : dir_(std::move(data_dir)) {}

std::string Catalog::default_data_dir() {
    if (const char* env = std::getenv("MATROID_CATALOG_DIR")) return env;
    return MATROIDLAB_DATA_DIR;
}

Matroid Catalog::build(const std::string& name) const {
    if (name.size() == 3 && name[0] == 'U' && isdigit(name[1]) && isdigit(name[2]))
        return uniform(name[1] - '0', name[2] - '0');
    if (name.size() == 2 && name[0] == 'W' && isdigit(name[1])) return wheel(name[1] - '0');
    if (name.size() == 3 && name[0] == 'W' && name[1] == 'H' && isdigit(name[2]))
        return whirl(name[2] - '0');
    if (name == "F7d") return get("F7").dual();
    if (name == "AG23ed") return get("AG23e").dual();
    if (name == "P8=") return doubly_relaxed_p8(get("P8"));
    if (name == "AG32") return binary_affine_cube();
    if (name == "AG32r") return least_relaxation(get("AG32"));
    if (name == "PG32") return binary_projective_rank4();
    const Entry* e = find_entry(name);
    if (e && std::string(e->source).rfind("file:", 0) == 0) {
        std::string stem = std::string(e->source).substr(5);
        NamedMatroid nm = load_matroid_file(dir_ + "/" + stem + ".matroid");
        if (nm.name != name) throw CatalogError("file name mismatch for " + name);
        return nm.matroid;
    }
    throw CatalogError("unknown catalog entry: " + name);
}

const Matroid& Catalog::get(const std::string& raw) const {
    const std::string name = resolve_alias(raw);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(name);
        if (it != cache_.end()) return it->second;
    }
    Matroid m = build(name);
    if (const Entry* e = find_entry(name)) {
        if (m.rank() != e->rank || m.size() != e->size)
            throw CatalogError(name + ": rank/size mismatch on load");
        if (int(m.triangles().size()) != e->triangles)
            throw CatalogError(name + ": triangle count mismatch on load");
        if (e->self_dual >= 0) {
            bool sd = bool(isomorphism(m, m.dual()));
            if (sd != (e->self_dual == 1)) throw CatalogError(name + ": self-duality mismatch on load");
        }
    } else if (!(name.size() == 3 && name[0] == 'U')) {
        throw CatalogError("unknown catalog entry: " + name);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(name, std::move(m));
    return it->second;
}

bool Catalog::has(const std::string& raw) const {
    const std::string name = resolve_alias(raw);
    if (find_entry(name)) return true;
    return name.size() == 3 && name[0] == 'U' && isdigit(name[1]) && isdigit(name[2]);
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const Entry& e : kEntries) out.push_back(e.name);
    return out;
}

Catalog::Info Catalog::info(const std::string& raw) const {
    const std::string name = resolve_alias(raw);
    const Entry* e = find_entry(name);
    if (e) return {e->name, e->provenance, e->rank, e->size, e->triangles, e->self_dual};
    if (name.size() == 3 && name[0] == 'U' && isdigit(name[1]) && isdigit(name[2])) {
        const Matroid& m = get(name);
        return {name, "uniform matroid", m.rank(), m.size(), int(m.triangles().size()), -1};
    }
    throw CatalogError("unknown catalog entry: " + name);
}

std::vector<std::string> Catalog::ex_set_names(const std::string& cls) {
    if (cls == "GF2") return {"U24"};
    if (cls == "regular") return {"U24", "F7", "F7d"};
    if (cls == "GF3") return {"U25", "U35", "F7", "F7d"};
    if (cls == "GF4") return {"U26", "U46", "F7m", "F7md", "P6", "P8", "P8="};
    if (cls == "sru") return {"U25", "U35", "F7", "F7d", "F7m", "F7md", "P8"};
    if (cls == "nearregular")
        return {"U25", "U35", "F7", "F7d", "F7m", "F7md", "AG23e", "AG23ed", "D3AG23e", "P8"};
    throw CatalogError("unknown excluded-minor class: " + cls);
}

std::vector<const Matroid*> Catalog::ex_set(const std::string& cls) const {
    std::vector<const Matroid*> out;
    for (const auto& n : ex_set_names(cls)) out.push_back(&get(n));
    return out;
}

}  // namespace matroidlab
