#include "matroid/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <future>
#include <ostream>

#include "matroid/constructions.hpp"
#include "scenarios_impl.hpp"

namespace matroidlab {

const char* claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::skipped: return "skipped";
    }
    return "?";
}

json mask_json(const Matroid& m, Mask x) {
    json out = json::array();
    for (const auto& l : m.labels_of(x)) out.push_back(l);
    return out;
}

json iso_json(const Matroid& a, const Matroid& b, const IsoMap& phi) {
    json out = json::array();
    for (int i = 0; i < a.size(); ++i)
        out.push_back(json::array({a.ground().label(i), b.ground().label(phi.image[i])}));
    return out;
}

json witness_json(const Matroid& host, const MinorWitness& w, const Matroid& pattern) {
    Matroid minor = host.contracted(w.contract_set)
                        .deleted(host.contracted(w.contract_set).mask_of(host.labels_of(w.delete_set)));
    json out;
    out["contract"] = mask_json(host, w.contract_set);
    out["delete"] = mask_json(host, w.delete_set);
    out["iso"] = iso_json(pattern, minor, w.iso);
    return out;
}

json separation_json(const Matroid& m, const Separation& s) {
    json out;
    out["side"] = mask_json(m, s.side);
    out["lambda"] = s.lambda_value;
    out["k"] = s.k;
    return out;
}

std::vector<std::string> scenario_ids() {
    std::vector<std::string> out;
    for (const ScenarioDef& s : scenario_registry()) out.push_back(s.id);
    return out;
}

ScenarioReport run_scenario(const Catalog& cat, const std::string& id) {
    for (const ScenarioDef& s : scenario_registry()) {
        if (s.id != id) continue;
        ScenarioReport rep;
        rep.id = s.id;
        rep.ref = s.ref;
        for (const ClaimDef& c : s.claims(cat)) {
            ClaimReport r;
            r.id = c.id;
            auto t0 = std::chrono::steady_clock::now();
            ClaimExecution out = execute_claim(cat, c);
            r.status = out.status == 0   ? ClaimStatus::pass
                       : out.status == 1 ? ClaimStatus::fail
                                         : ClaimStatus::skipped;
            r.witness = std::move(out.witness);
            r.note = std::move(out.note);
            auto t1 = std::chrono::steady_clock::now();
            r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            rep.claims.push_back(std::move(r));
        }
        std::sort(rep.claims.begin(), rep.claims.end(),
                  [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
        return rep;
    }
    throw std::invalid_argument("unknown scenario: " + id);
}

json report_to_json(const std::vector<ScenarioReport>& reports, bool timing) {
    json out = json::array();
    for (const ScenarioReport& s : reports) {
        json js;
        js["scenario"] = s.id;
        js["paper_ref"] = s.ref;
        js["claims"] = json::array();
        for (const ClaimReport& c : s.claims) {
            json jc;
            jc["id"] = c.id;
            jc["status"] = claim_status_name(c.status);
            jc["witness"] = c.witness.is_null() ? json() : c.witness;
            if (!c.note.empty()) jc["note"] = c.note;
            jc["millis"] = timing ? c.millis : 0;
            js["claims"].push_back(std::move(jc));
        }
        out.push_back(std::move(js));
    }
    return out;
}

RunSummary run_all(const Catalog& cat, const RunOptions& opt, std::ostream& log) {
    std::vector<std::string> ids;
    for (const ScenarioDef& s : scenario_registry())
        if (opt.filter.empty() || opt.filter == s.id) ids.push_back(s.id);
    if (!opt.filter.empty() && ids.empty()) throw std::invalid_argument("unknown scenario: " + opt.filter);

    std::vector<ScenarioReport> reports(ids.size());
    const int jobs = std::max(1, opt.jobs);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= ids.size()) return;
            reports[i] = run_scenario(cat, ids[i]);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::future<void>> pool;
        for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }

    RunSummary sum;
    for (const ScenarioReport& s : reports) {
        for (const ClaimReport& c : s.claims) {
            switch (c.status) {
                case ClaimStatus::pass: ++sum.pass; break;
                case ClaimStatus::fail: ++sum.fail; break;
                case ClaimStatus::skipped: ++sum.skipped; break;
            }
            log << "[" << s.id << "] " << c.id << " ... " << claim_status_name(c.status);
            if (c.status != ClaimStatus::pass && !c.note.empty()) log << " (" << c.note << ")";
            log << " (" << c.millis << " ms)\n";
        }
    }
    log << "summary: " << sum.pass << " pass, " << sum.fail << " fail, " << sum.skipped
        << " skipped\n";

    if (!opt.report_path.empty()) {
        std::ofstream out(opt.report_path);
        if (!out) throw std::runtime_error("cannot write report: " + opt.report_path);
        out << report_to_json(reports, opt.timing).dump(2) << "\n";
    }
    return sum;
}

}  // namespace matroidlab
