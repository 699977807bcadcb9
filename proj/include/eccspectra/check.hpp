#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace eccspectra {

/// Outcome of one named property check; `witness` explains a failure.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;
};

inline CheckResult pass(std::string name) { return {std::move(name), true, {}}; }
inline CheckResult fail(std::string name, std::string witness) {
    return {std::move(name), false, std::move(witness)};
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

inline std::string format_labels(const std::vector<int>& vertices) {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vertices[i] + 1);
    }
    return s + "}";
}

}  // namespace eccspectra
