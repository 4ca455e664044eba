#pragma once

#include <string>
#include <vector>

namespace nielsen {

enum class CheckStatus { pass, fail, skipped };

inline std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    /// A failed warn-level check does not fail the report.
    bool warn_only = false;
};

struct ValidationReport {
    std::vector<Check> checks;

    [[nodiscard]] bool overall() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail && !c.warn_only) return false;
        return true;
    }

    [[nodiscard]] const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    void add(std::string name, CheckStatus status, std::string detail = {}, bool warn_only = false) {
        checks.push_back({std::move(name), status, std::move(detail), warn_only});
    }
};

} // namespace nielsen
