#include "matroid/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace matroidlab {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct Directive {
    std::string key;
    std::string rest;
};

std::vector<Directive> read_directives(std::istream& in) {
    std::vector<Directive> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (!split_ws(line).empty()) throw std::runtime_error("malformed line: " + line);
            continue;
        }
        Directive d;
        d.key = line.substr(0, colon);
        d.rest = line.substr(colon + 1);
        auto keytoks = split_ws(d.key);
        if (keytoks.size() != 1) throw std::runtime_error("malformed directive: " + line);
        d.key = keytoks[0];
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

NamedMatroid parse_matroid(std::istream& in) {
    std::string name, kind, field;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> rows, basis_lines;
    for (const auto& d : read_directives(in)) {
        if (d.key == "name") {
            auto toks = split_ws(d.rest);
            if (toks.size() != 1) throw std::runtime_error("name wants exactly one token");
            name = toks[0];
        } else if (d.key == "kind") {
            auto toks = split_ws(d.rest);
            if (toks.size() != 1) throw std::runtime_error("kind wants exactly one token");
            kind = toks[0];
        } else if (d.key == "field") {
            auto toks = split_ws(d.rest);
            if (toks.size() != 1) throw std::runtime_error("field wants exactly one token");
            field = toks[0];
        } else if (d.key == "labels") {
            labels = split_ws(d.rest);
        } else if (d.key == "row") {
            rows.push_back(split_ws(d.rest));
        } else if (d.key == "basis") {
            basis_lines.push_back(split_ws(d.rest));
        } else {
            throw std::runtime_error("unknown directive: " + d.key);
        }
    }
    if (name.empty()) throw std::runtime_error("missing name");
    if (labels.empty()) throw std::runtime_error("missing labels");
    if (kind == "linear") {
        if (field.empty()) throw std::runtime_error("linear matroid needs a field");
        const SmallField& f = SmallField::get(field_from_name(field));
        if (rows.empty()) throw std::runtime_error("linear matroid needs rows");
        LinearRep rep;
        rep.field = f.id();
        rep.rows = int(rows.size());
        rep.labels = labels;
        rep.cols.assign(labels.size(), std::vector<std::uint8_t>(rows.size()));
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != labels.size())
                throw std::runtime_error("row " + std::to_string(i + 1) + " has wrong length");
            for (size_t j = 0; j < labels.size(); ++j) rep.cols[j][i] = f.parse(rows[i][j]);
        }
        return {name, Matroid::from_linear(std::move(rep))};
    }
    if (kind == "bases") {
        GroundSet g(labels);
        if (basis_lines.empty()) throw std::runtime_error("bases matroid needs basis lines");
        std::vector<Mask> bases;
        for (const auto& bl : basis_lines) bases.push_back(g.mask_of(bl));
        return {name, Matroid::from_bases(std::move(g), std::move(bases))};
    }
    throw std::runtime_error("unknown kind: " + kind);
}

NamedMatroid parse_matroid_string(const std::string& text) {
    std::istringstream in(text);
    return parse_matroid(in);
}

NamedMatroid load_matroid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return parse_matroid(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string serialize_matroid(const std::string& name, const Matroid& m) {
    std::ostringstream out;
    out << "name: " << name << "\n";
    if (const LinearRep* rep = m.linear()) {
        out << "kind: linear\n";
        out << "field: " << field_name(rep->field) << "\n";
        out << "labels:";
        for (const auto& l : rep->labels) out << ' ' << l;
        out << "\n";
        const SmallField& f = SmallField::get(rep->field);
        for (int i = 0; i < rep->rows; ++i) {
            out << "row:";
            for (const auto& col : rep->cols) out << ' ' << f.format(col[i]);
            out << "\n";
        }
        return out.str();
    }
    out << "kind: bases\n";
    out << "labels:";
    for (const auto& l : m.ground().labels()) out << ' ' << l;
    out << "\n";
    for (Mask b : m.bases()) {
        out << "basis:";
        for (const auto& l : m.labels_of(b)) out << ' ' << l;
        out << "\n";
    }
    return out.str();
}

}  // namespace matroidlab
