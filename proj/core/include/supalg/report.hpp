#pragma once

#include <map>
#include <string>
#include <vector>

namespace supalg {

/// One verification suite outcome in the machine-readable report.
struct SuiteResult {
    std::string suite;
    std::map<std::string, std::string> params;
    std::string status;  // "pass" | "fail" | "warn"
    std::vector<std::string> witnesses;
    std::string anchor;  // stable check id, e.g. "lem:pn-gen"
    double seconds = 0.0;
};

/// JSON report {schema: 1, suites: [...]}, keys sorted, byte-stable. Timing
/// is opt-in because it would break run-to-run byte identity.
std::string report_json(std::vector<SuiteResult> results, bool include_timing);

std::string report_text(const std::vector<SuiteResult>& results);

/// fail results must carry at least one witness; normalizes in place.
void enforce_witness_invariant(SuiteResult& r);

}  // namespace supalg
