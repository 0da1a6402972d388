// Acceptance suite: runs the ten gate criteria, printing one line per
// criterion, and exits nonzero if any of them fails its check or its time
// budget.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "matroid/catalog.hpp"
#include "matroid/constructions.hpp"
#include "matroid/structure.hpp"
#include "matroid/verifier.hpp"
#include "test_util.hpp"

using namespace matroidlab;
using namespace matroidlab::testutil;

namespace {

struct Gate {
    int failures = 0;

    bool criterion(int number, const std::string& what, double budget_s,
                   const std::function<bool(std::string&)>& body) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (budget_s > 0 && secs > budget_s) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        std::printf("[%s] criterion %d: %s (%.1f s / budget %.0f s)%s%s\n", ok ? "PASS" : "FAIL",
                    number, what.c_str(), secs, budget_s, detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
        return ok;
    }
};

bool scenario_clean(const Catalog& cat, const std::string& id, std::string& detail) {
    ScenarioReport rep = run_scenario(cat, id);
    for (const auto& c : rep.claims) {
        if (c.status != ClaimStatus::pass) {
            detail += id + "/" + c.id + " " + claim_status_name(c.status) +
                      (c.note.empty() ? "" : " (" + c.note + ")") + "; ";
        }
    }
    return detail.empty();
}

}  // namespace

int main() {
    Catalog cat;
    Gate gate;

    gate.criterion(1, "catalog load-time assertions", 60, [&](std::string& d) {
        return scenario_clean(cat, "catalog-sanity", d);
    });

    gate.criterion(2, "field axioms and rank axioms, exhaustive", 60, [&](std::string& d) {
        for (FieldId id : {FieldId::GF2, FieldId::GF3, FieldId::GF4, FieldId::GF5, FieldId::GF8}) {
            const SmallField& f = SmallField::get(id);
            const int q = f.order();
            for (int a = 0; a < q; ++a) {
                if (f.add(a, f.neg(a)) != 0 || (a && f.mul(a, f.inv(a)) != 1)) {
                    d = "inverse failure in " + std::string(field_name(id));
                    return false;
                }
                for (int b = 0; b < q; ++b)
                    for (int c = 0; c < q; ++c) {
                        bool ok = f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) &&
                                  f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
                                  f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) &&
                                  f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                        if (!ok) {
                            d = "axiom failure in " + std::string(field_name(id));
                            return false;
                        }
                    }
            }
        }
        for (const auto& name : cat.names()) {
            const Matroid& m = cat.get(name);
            if (m.size() > 10) continue;
            if (!rank_axioms_hold(m)) {
                d = "rank axiom failure in " + name;
                return false;
            }
        }
        return true;
    });

    gate.criterion(3, "pruned minor search vs unpruned reference on 200+ pairs", 0,
                   [&](std::string& d) {
                       const char* hosts[] = {"U24", "U25", "U35", "U26", "U46", "F7", "F7d",
                                              "F7m", "F7md", "P6", "P7", "O7", "P8", "P8=",
                                              "AG23e", "AG23ed", "D3AG23e", "AG23", "AG32",
                                              "AG32r", "M7", "M8", "M9", "W3", "W4", "WH2",
                                              "WH3", "WH4"};
                       const char* patterns[] = {"U24", "U25", "U35", "P6", "W3", "F7", "F7m",
                                                 "WH3", "U26"};
                       int pairs = 0;
                       for (const char* h : hosts) {
                           const Matroid& host = cat.get(h);
                           if (host.size() > 10) continue;
                           for (const char* p : patterns) {
                               const Matroid& pattern = cat.get(p);
                               if (pattern.size() > host.size()) continue;
                               ++pairs;
                               if (bool(has_minor(host, pattern)) != naive_has_minor(host, pattern)) {
                                   d = std::string(h) + " vs " + p + " disagrees";
                                   return false;
                               }
                           }
                       }
                       if (pairs < 200) {
                           d = "only " + std::to_string(pairs) + " pairs";
                           return false;
                       }
                       d = std::to_string(pairs) + " pairs agreed";
                       bool ok = true;
                       return ok;
                   });

    gate.criterion(4, "splitter scenarios (extension/coextension enumeration)", 600,
                   [&](std::string& d) {
                       bool a = scenario_clean(cat, "splitter-regular", d);
                       bool b = scenario_clean(cat, "splitter-gf3", d);
                       return a && b;
                   });

    gate.criterion(5, "automorphism scenario for the affine-plane deletion", 10,
                   [&](std::string& d) { return scenario_clean(cat, "ag23e-aut", d); });

    gate.criterion(6, "coextension case analysis and exhaustive row scan", 300,
                   [&](std::string& d) { return scenario_clean(cat, "ag23e-cases", d); });

    gate.criterion(7, "coextensions of the affine plane keep a deletable element", 300,
                   [&](std::string& d) { return scenario_clean(cat, "ag23-coext", d); });

    gate.criterion(8, "fan families seeded at M8, M9, M7", 900, [&](std::string& d) {
        bool a = scenario_clean(cat, "family-m8", d);
        bool b = scenario_clean(cat, "family-m9", d);
        bool c = scenario_clean(cat, "family-m7", d);
        return a && b && c;
    });

    gate.criterion(9, "fan-growing property suites", 600, [&](std::string& d) {
        bool a = scenario_clean(cat, "growfan-props", d);
        bool b = scenario_clean(cat, "nofanfan-props", d);
        return a && b;
    });

    gate.criterion(10, "byte-identical reports across job counts", 0, [&](std::string& d) {
        namespace fs = std::filesystem;
        fs::path a = fs::temp_directory_path() / "matroidlab_acc_a.json";
        fs::path b = fs::temp_directory_path() / "matroidlab_acc_b.json";
        std::ostringstream sink;
        RunOptions opt;
        opt.report_path = a.string();
        opt.jobs = 1;
        RunSummary s1 = run_all(cat, opt, sink);
        opt.report_path = b.string();
        opt.jobs = 4;
        RunSummary s2 = run_all(cat, opt, sink);
        std::ifstream ia(a), ib(b);
        std::string sa((std::istreambuf_iterator<char>(ia)), {});
        std::string sb((std::istreambuf_iterator<char>(ib)), {});
        fs::remove(a);
        fs::remove(b);
        if (sa.empty() || sa != sb) {
            d = "reports differ";
            return false;
        }
        if (s1.fail != s2.fail || s1.pass != s2.pass || s1.skipped != s2.skipped) {
            d = "summaries differ";
            return false;
        }
        d = std::to_string(s1.pass) + " claims in both runs";
        return true;
    });

    if (gate.failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", gate.failures);
    return 1;
}
