#include "bbox/harness/toml_lite.hpp"

#include <fstream>
#include <sstream>

#include "bbox/core/common.hpp"

namespace bbox::harness {

const std::string& TomlValue::as_string() const {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    throw ConfigError("expected a string value");
}
std::int64_t TomlValue::as_int() const {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    throw ConfigError("expected an integer value");
}
double TomlValue::as_double() const {
    if (const auto* d = std::get_if<double>(&v)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    throw ConfigError("expected a numeric value");
}
bool TomlValue::as_bool() const {
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    throw ConfigError("expected a boolean value");
}
const std::vector<TomlValue>& TomlValue::as_array() const {
    if (const auto* a = std::get_if<std::vector<TomlValue>>(&v)) return *a;
    throw ConfigError("expected an array value");
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

TomlValue parse_scalar(const std::string& tok) {
    if (tok.empty()) throw ConfigError("empty value");
    if (tok.front() == '"') {
        if (tok.size() < 2 || tok.back() != '"') throw ConfigError("unterminated string: " + tok);
        return {tok.substr(1, tok.size() - 2)};
    }
    if (tok == "true") return {true};
    if (tok == "false") return {false};
    if (tok.find_first_of(".eE") != std::string::npos &&
        tok.find_first_not_of("+-0123456789.eE") == std::string::npos)
        return {std::stod(tok)};
    if (tok.find_first_not_of("+-0123456789") == std::string::npos)
        return {static_cast<std::int64_t>(std::stoll(tok))};
    throw ConfigError("cannot parse value: " + tok);
}

TomlValue parse_value(const std::string& raw) {
    std::string s = strip(raw);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw ConfigError("unterminated array: " + s);
        std::vector<TomlValue> items;
        std::string body = s.substr(1, s.size() - 2);
        std::string cur;
        int depth = 0;
        bool in_str = false;
        for (char c : body) {
            if (c == '"') in_str = !in_str;
            if (!in_str && c == '[') ++depth;
            if (!in_str && c == ']') --depth;
            if (!in_str && depth == 0 && c == ',') {
                if (!strip(cur).empty()) items.push_back(parse_value(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!strip(cur).empty()) items.push_back(parse_value(cur));
        return {items};
    }
    return parse_scalar(s);
}

} // namespace

TomlDoc parse_toml(const std::string& text) {
    TomlDoc doc;
    TomlTable* current = nullptr;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        // strip comments outside strings
        bool in_str = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_str = !in_str;
            if (line[i] == '#' && !in_str) {
                line = line.substr(0, i);
                break;
            }
        }
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("bad section header: " + line);
            doc.push_back({strip(line.substr(1, line.size() - 2)), {}});
            current = &doc.back().second;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value: " + line);
        if (!current) {
            doc.push_back({"", {}});
            current = &doc.back().second;
        }
        (*current)[strip(line.substr(0, eq))] = parse_value(line.substr(eq + 1));
    }
    return doc;
}

TomlDoc parse_toml_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return parse_toml(os.str());
}

} // namespace bbox::harness
