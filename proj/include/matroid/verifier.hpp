#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "matroid/catalog.hpp"
#include "matroid/structure.hpp"

namespace matroidlab {

using json = nlohmann::ordered_json;

enum class ClaimStatus { pass, fail, skipped };

const char* claim_status_name(ClaimStatus s);

struct ClaimReport {
    std::string id;
    ClaimStatus status = ClaimStatus::fail;
    json witness;       // canonical witness on pass, counterexample on fail
    std::string note;   // skip reason / failure context
    std::int64_t millis = 0;
};

struct ScenarioReport {
    std::string id;
    std::string ref;
    std::vector<ClaimReport> claims;
};

std::vector<std::string> scenario_ids();
// Throws std::invalid_argument for an unknown id. Claims are reported in
// sorted id order; every enumeration guard trip downgrades the claim to
// skipped, never to pass.
ScenarioReport run_scenario(const Catalog& cat, const std::string& id);

struct RunOptions {
    int jobs = 1;
    std::string report_path;  // empty: no file
    bool strict = false;      // skipped claims also fail the exit code
    std::string filter;       // run only this scenario when nonempty
    bool timing = false;      // write measured millis into the report file
};

struct RunSummary {
    int pass = 0, fail = 0, skipped = 0;
    int exit_code(bool strict) const { return fail > 0 || (strict && skipped > 0) ? 1 : 0; }
};

// Runs scenarios (scenario-level parallelism), prints one line per claim to
// `log`, and writes the JSON report when requested. Reports are
// deterministic: claim ids sorted, canonical witnesses, and millis zeroed
// unless `timing` is set, so two runs at different job counts are
// byte-identical.
RunSummary run_all(const Catalog& cat, const RunOptions& opt, std::ostream& log);

json report_to_json(const std::vector<ScenarioReport>& reports, bool timing);

// Witness serialization helpers shared by scenarios and the CLI.
json witness_json(const Matroid& host, const MinorWitness& w, const Matroid& pattern);
json iso_json(const Matroid& a, const Matroid& b, const IsoMap& phi);
json separation_json(const Matroid& m, const Separation& s);
json mask_json(const Matroid& m, Mask x);

}  // namespace matroidlab
