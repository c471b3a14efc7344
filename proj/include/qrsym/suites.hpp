#ifndef QRSYM_SUITES_HPP
#define QRSYM_SUITES_HPP

#include "qrsym/rat.hpp"

#include <string>
#include <vector>

namespace qrsym {

/// Configuration of a verification run.  Parsed from a flat key=value file
/// and/or command-line overrides; overrides win.
struct RunConfig {
    std::vector<std::string> h_values = {"1/2", "1", "3/2", "7/3", "5"};
    int K = 6;
    int N = 6;
    std::vector<std::string> suites = {"sl2",        "thm1a",  "thm1b", "octahedron",
                                       "overlay",    "tensor", "burnside"};
    std::string format = "json";  // json | csv
    std::string out;              // empty = stdout

    void apply_line(const std::string& key, const std::string& value);
    /// Throws std::domain_error on invalid content (usage error).
    void validate() const;
};

/// Known suite names in fixed execution order.
const std::vector<std::string>& all_suites();
/// Suites whose contract is "must pass" (the rest only report findings).
bool suite_must_pass(const std::string& name);

struct SuiteResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "finding"
    std::string payload_json;
};

struct RunReport {
    RunConfig config;
    std::string conventions_json;
    std::vector<SuiteResult> results;

    bool all_must_pass_ok() const;
    /// Deterministic: equal configs give byte-identical output.
    std::string render() const;  // json or csv per config.format
};

RunReport run_suites(const RunConfig& cfg);

}  // namespace qrsym

#endif
