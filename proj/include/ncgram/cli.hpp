#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace ncgram::cli {

enum ExitCode : int { ok = 0, verification_failure = 1, usage_error = 2, resource_error = 3 };

inline constexpr std::size_t kDeterminantBudget = 2000;
// enumeration filters the full Bell enumeration, so the budget is on Bell(n)
inline constexpr unsigned long kEnumerationBudget = 5'000'000;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Append-only JSON-lines store of determinant results.
class ResultCache {
public:
    ResultCache(std::filesystem::path path, std::ostream& warnings);

    // det field of the last entry with this key
    std::optional<std::string> find(const std::string& key) const;
    void append(const std::string& key, const std::string& det);

private:
    std::filesystem::path path_;
    std::ostream& warnings_;
};

}  // namespace ncgram::cli
