#include <chrono>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ncgram/cli.hpp"

namespace ncgram::cli {

ResultCache::ResultCache(std::filesystem::path path, std::ostream& warnings)
    : path_(std::move(path)), warnings_(warnings) {}

std::optional<std::string> ResultCache::find(const std::string& key) const {
    std::ifstream in(path_);
    if (!in)
        return std::nullopt;
    std::optional<std::string> hit;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty())
            continue;
        auto entry = nlohmann::json::parse(line, nullptr, false);
        if (entry.is_discarded() || !entry.is_object() || !entry.contains("key") || !entry.contains("det") ||
            !entry["key"].is_string() || !entry["det"].is_string()) {
            warnings_ << "warning: ignoring malformed cache line " << number << " in " << path_.string()
                      << "\n";
            continue;
        }
        if (entry["key"] == key)
            hit = entry["det"].get<std::string>();
    }
    return hit;
}

void ResultCache::append(const std::string& key, const std::string& det) {
    // a torn last line must not swallow the new entry
    bool needs_newline = false;
    {
        std::ifstream in(path_, std::ios::binary);
        if (in && in.seekg(0, std::ios::end) && in.tellg() > 0) {
            in.seekg(-1, std::ios::end);
            needs_newline = in.get() != '\n';
        }
    }
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot write cache file " + path_.string());
    auto ts = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::system_clock::now().time_since_epoch())
                  .count();
    nlohmann::ordered_json entry;
    entry["key"] = key;
    entry["det"] = det;
    entry["ts"] = ts;
    if (needs_newline)
        out << "\n";
    out << entry.dump() << "\n";
}

}  // namespace ncgram::cli
