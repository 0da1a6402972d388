#include <iostream>

#include <CLI11.hpp>

#include "matroid/catalog.hpp"
#include "matroid/constructions.hpp"
#include "matroid/io.hpp"
#include "matroid/structure.hpp"
#include "matroid/verifier.hpp"

using namespace matroidlab;

namespace {

// Catalog name, or a path to a matroid file when it contains '/' or ends in
// ".matroid".
Matroid resolve(const Catalog& cat, const std::string& spec) {
    bool is_path = spec.find('/') != std::string::npos ||
                   (spec.size() > 8 && spec.substr(spec.size() - 8) == ".matroid");
    if (is_path) return load_matroid_file(spec).matroid;
    return cat.get(spec);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on small matroids"};
    app.require_subcommand(1);

    Catalog cat;

    auto* cat_cmd = app.add_subcommand("catalog", "list or show catalog entries");
    cat_cmd->require_subcommand(1);
    auto* cat_list = cat_cmd->add_subcommand("list", "list entries with quick facts");
    std::string show_name;
    bool show_json = false;
    auto* cat_show = cat_cmd->add_subcommand("show", "print one entry in the matroid text format");
    cat_show->add_option("name", show_name, "catalog entry")->required();
    cat_show->add_flag("--json", show_json, "JSON output");

    auto* check = app.add_subcommand("check", "run a single structural check");
    check->require_subcommand(1);
    std::string host_spec, pattern_spec, iso_a, iso_b, conn_spec;
    auto* check_minor = check->add_subcommand("minor", "search for a minor");
    check_minor->add_option("--host", host_spec)->required();
    check_minor->add_option("--pattern", pattern_spec)->required();
    auto* check_iso = check->add_subcommand("iso", "isomorphism test");
    check_iso->add_option("a", iso_a)->required();
    check_iso->add_option("b", iso_b)->required();
    auto* check_conn = check->add_subcommand("3conn", "Tutte 3-connectivity");
    check_conn->add_option("matroid", conn_spec)->required();

    std::string grow_spec, grow_triangle;
    int grow_n = 3;
    auto* grow = app.add_subcommand("growfan", "grow the fan through a triangle");
    grow->add_option("--matroid", grow_spec)->required();
    grow->add_option("--triangle", grow_triangle, "three labels, comma separated")->required();
    grow->add_option("--n", grow_n, "wheel rank")->required();

    std::string verify_scenario, report_path;
    int jobs = 1;
    bool strict = false, timing = false;
    auto* verify = app.add_subcommand("verify", "replay the finite case checks");
    verify->add_option("--scenario", verify_scenario, "run a single scenario");
    verify->add_option("--report", report_path, "write a JSON report");
    verify->add_option("--jobs", jobs, "scenario-level parallelism");
    verify->add_flag("--strict", strict, "skipped claims fail the exit code");
    verify->add_flag("--timing", timing, "record measured milliseconds in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cat_list) {
            for (const auto& name : cat.names()) {
                auto info = cat.info(name);
                std::cout << name << "\trank " << info.rank << "\t" << info.size << " elements\t"
                          << info.triangles << " triangles";
                if (info.self_dual == 1) std::cout << "\tself-dual";
                std::cout << "\t" << info.provenance << "\n";
            }
            return 0;
        }
        if (*cat_show) {
            const Matroid& m = cat.get(show_name);
            if (show_json) {
                json j;
                j["name"] = show_name;
                j["labels"] = m.ground().labels();
                j["rank"] = m.rank();
                j["size"] = m.size();
                j["text"] = serialize_matroid(show_name, m);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << serialize_matroid(show_name, m);
            }
            return 0;
        }
        if (*check_minor) {
            Matroid host = resolve(cat, host_spec);
            Matroid pattern = resolve(cat, pattern_spec);
            auto w = has_minor(host, pattern);
            if (!w) {
                std::cout << "no minor\n";
                return 1;
            }
            std::cout << witness_json(host, *w, pattern).dump(2) << "\n";
            return 0;
        }
        if (*check_iso) {
            Matroid a = resolve(cat, iso_a), b = resolve(cat, iso_b);
            auto phi = least_isomorphism(a, b);
            if (!phi) {
                std::cout << "not isomorphic\n";
                return 1;
            }
            std::cout << iso_json(a, b, *phi).dump(2) << "\n";
            return 0;
        }
        if (*check_conn) {
            Matroid m = resolve(cat, conn_spec);
            bool ok = is_three_connected(m);
            std::cout << (ok ? "3-connected" : "not 3-connected") << "\n";
            return ok ? 0 : 1;
        }
        if (*grow) {
            Matroid m = resolve(cat, grow_spec);
            auto t = split_csv(grow_triangle);
            if (t.size() != 3) throw std::invalid_argument("--triangle wants three labels");
            Matroid out = grow_fan(m, {t[0], t[1], t[2]}, grow_n);
            std::cout << serialize_matroid("grown", out);
            return 0;
        }
        if (*verify) {
            RunOptions opt;
            opt.jobs = jobs;
            opt.report_path = report_path;
            opt.strict = strict;
            opt.filter = verify_scenario;
            opt.timing = timing;
            RunSummary sum = run_all(cat, opt, std::cout);
            return sum.exit_code(strict);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
