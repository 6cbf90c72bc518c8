#pragma once

/**
 * @file report.hpp
 * @brief Outcome of a property verifier.
 */

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace gca {

struct VerificationReport {
    std::string name;
    /// False when the data examined is horizon-bounded (truncated graph,
    /// depth-limited tree); a clean run then only means "no counterexample".
    bool complete = true;
    std::size_t checked = 0;
    std::vector<std::string> violations;
    std::map<std::string, std::size_t> counts;

    bool passed() const noexcept { return violations.empty(); }

    std::string status() const {
        if (!violations.empty()) return "fail";
        return complete ? "pass" : "no counterexample within horizon";
    }

    void merge(const VerificationReport& other) {
        complete = complete && other.complete;
        checked += other.checked;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
        for (const auto& [k, v] : other.counts) counts[k] += v;
    }
};

}  // namespace gca
