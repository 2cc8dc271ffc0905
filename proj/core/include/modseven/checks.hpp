#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modseven/error.hpp"

namespace modseven {

inline constexpr const char* kToolName = "modseven";
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckDef {
    std::string name;
    int min_prec;  // 0 when precision-independent
    std::function<nlohmann::json(int prec)> fn;  // returns witnesses, throws CheckFailure
};

const std::vector<CheckDef>& check_registry();

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json witnesses;
    int precision = 0;
    long elapsed_ms = 0;
};

struct Report {
    std::vector<CheckResult> checks;  // sorted by name
    bool aggregate_pass = false;
    nlohmann::json to_json() const;
    std::string text() const;  // one line per check plus a summary
};

/// Run the selected checks (empty selection = all) at the given base
/// precision; each check is raised to its own minimum. Throws Error on
/// unknown names. jobs > 1 runs checks on a small worker pool; assembly is
/// name-sorted either way.
Report run_checks(const std::vector<std::string>& selection, int prec, int jobs);

}  // namespace modseven
