#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace bbox::harness {

// Minimal TOML subset: [section] headers, key = value lines with strings,
// integers, floats, booleans, and flat arrays of those; # comments.
struct TomlValue {
    std::variant<std::string, std::int64_t, double, bool, std::vector<TomlValue>> v;

    const std::string& as_string() const;
    std::int64_t as_int() const;
    double as_double() const;
    bool as_bool() const;
    const std::vector<TomlValue>& as_array() const;
};

using TomlTable = std::map<std::string, TomlValue>;
using TomlDoc = std::vector<std::pair<std::string, TomlTable>>; // sections in order

TomlDoc parse_toml(const std::string& text);
TomlDoc parse_toml_file(const std::string& path);

} // namespace bbox::harness
