#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oim {

// INI-style config: [section] headers, key = value lines, '#' comments.
// Keys are addressed as "section.key". Unknown keys are rejected after
// loading so typos fail fast.
class ConfigFile {
public:
    static ConfigFile parse(std::istream& in, const std::string& origin = "<stream>");
    static ConfigFile parse_file(const std::string& path);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<std::string> get_list(const std::string& key) const; // comma-separated

    // Keys present in the file but never read.
    std::vector<std::string> unread_keys() const;
    const std::string& origin() const { return origin_; }

private:
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> read_;
    std::string origin_;
};

} // namespace oim
