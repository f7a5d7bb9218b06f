#include "supalg/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace supalg {

void enforce_witness_invariant(SuiteResult& r) {
    if (r.status == "fail" && r.witnesses.empty())
        r.witnesses.push_back("unspecified failure");
}

std::string report_json(std::vector<SuiteResult> results, bool include_timing) {
    std::sort(results.begin(), results.end(), [](const SuiteResult& a, const SuiteResult& b) {
        if (a.suite != b.suite) return a.suite < b.suite;
        return a.params < b.params;
    });
    nlohmann::json root;
    root["schema"] = 1;
    root["suites"] = nlohmann::json::array();
    for (auto& r : results) {
        enforce_witness_invariant(r);
        nlohmann::json s;
        s["suite"] = r.suite;
        s["params"] = r.params;
        s["status"] = r.status;
        s["witnesses"] = r.witnesses;
        s["anchor"] = r.anchor;
        if (include_timing) s["timing_ms"] = std::llround(r.seconds * 1000.0);
        root["suites"].push_back(std::move(s));
    }
    return root.dump(2) + "\n";
}

std::string report_text(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << '[' << (r.status == "pass" ? "PASS" : r.status == "warn" ? "WARN" : "FAIL") << "] "
           << r.suite;
        if (!r.params.empty()) {
            os << " (";
            bool first = true;
            for (const auto& [k, v] : r.params) {
                if (!first) os << ", ";
                first = false;
                os << k << '=' << v;
            }
            os << ')';
        }
        os << "  anchor=" << r.anchor;
        os << '\n';
        for (const auto& w : r.witnesses) os << "    " << w << '\n';
    }
    return os.str();
}

}  // namespace supalg
