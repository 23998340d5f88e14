#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ncgram {

// Outcome of one exhaustive property sweep.
struct CheckResult {
    std::string name;
    std::size_t checked = 0;
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample; }
    void fail(std::string what) {
        if (!counterexample)
            counterexample = std::move(what);
    }
};

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed())
            return false;
    return true;
}

}  // namespace ncgram
