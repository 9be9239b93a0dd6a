#ifndef PTCDSIM_TOMLMINI_HPP
#define PTCDSIM_TOMLMINI_HPP

#include <map>
#include <string>
#include <vector>

namespace ptcdsim {

/// Parsed value of the TOML subset the config format uses: strings, numbers,
/// booleans and single-line flat arrays. Numbers keep their raw token so
/// 64-bit integers (seeds) survive without a float round trip.
struct TomlValue {
    enum class Kind { kString, kNumber, kBool, kArray };
    Kind kind = Kind::kString;
    std::string text;
    double number = 0.0;
    std::string raw;
    bool flag = false;
    std::vector<TomlValue> items;
    int line = 0;
};

struct TomlTable {
    std::map<std::string, TomlValue> entries;
    int line = 0;
};

/// [section] tables plus [[section]] table arrays; a name can be one or the
/// other, never both.
struct TomlDocument {
    std::map<std::string, TomlTable> sections;
    std::map<std::string, std::vector<TomlTable>> table_arrays;
};

/// Supports: `[name]`, `[[name]]`, `key = value`, `#` comments, double-quoted
/// strings with \" \\ \n \t escapes, numbers, true/false, flat arrays with an
/// optional trailing comma. Keys and section names are bare [A-Za-z0-9_-].
/// Throws ptcd::ConfigError with a line reference on any violation.
TomlDocument parse_toml(const std::string& text);

}  // namespace ptcdsim

#endif
