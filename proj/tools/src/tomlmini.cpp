#include "tomlmini.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "ptcd/errors.hpp"

namespace ptcdsim {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ptcd::ConfigError("config line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_bare_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    }
    return true;
}

/// Cuts a # comment, honoring quoted strings.
std::string strip_comment(const std::string& line, int line_no) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
        } else if (c == '"') {
            in_string = true;
        } else if (c == '#') {
            return line.substr(0, i);
        }
    }
    if (in_string) fail(line_no, "unterminated string");
    return line;
}

/// Parses a quoted string starting at s[pos] == '"'; leaves pos one past the
/// closing quote.
std::string parse_quoted(const std::string& s, std::size_t& pos, int line_no) {
    std::string out;
    ++pos;
    while (pos < s.size()) {
        const char c = s[pos];
        if (c == '"') {
            ++pos;
            return out;
        }
        if (c == '\\') {
            ++pos;
            if (pos >= s.size()) fail(line_no, "dangling escape in string");
            switch (s[pos]) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                default: fail(line_no, std::string("unsupported escape \\") + s[pos]);
            }
            ++pos;
            continue;
        }
        out += c;
        ++pos;
    }
    fail(line_no, "unterminated string");
}

TomlValue parse_scalar(const std::string& token, int line_no) {
    TomlValue value;
    value.line = line_no;
    if (token == "true" || token == "false") {
        value.kind = TomlValue::Kind::kBool;
        value.flag = (token == "true");
        return value;
    }
    char* end = nullptr;
    const double number = std::strtod(token.c_str(), &end);
    if (end != token.c_str() && *end == '\0') {
        value.kind = TomlValue::Kind::kNumber;
        value.number = number;
        value.raw = token;
        return value;
    }
    fail(line_no, "cannot parse value `" + token + "`");
}

TomlValue parse_value(const std::string& rhs, int line_no);

TomlValue parse_array(const std::string& rhs, int line_no) {
    TomlValue value;
    value.kind = TomlValue::Kind::kArray;
    value.line = line_no;
    // rhs is "[ ... ]"; split the interior on commas outside strings.
    std::size_t pos = 1;
    std::string current;
    bool in_string = false;
    bool saw_item = false;
    auto flush = [&](bool required) {
        const std::string token = trim(current);
        current.clear();
        if (token.empty()) {
            if (required) fail(line_no, "empty array element");
            return;
        }
        value.items.push_back(parse_value(token, line_no));
        saw_item = true;
    };
    for (; pos + 1 < rhs.size(); ++pos) {
        const char c = rhs[pos];
        if (in_string) {
            current += c;
            if (c == '\\' && pos + 2 < rhs.size()) {
                current += rhs[pos + 1];
                ++pos;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
            current += c;
        } else if (c == '[') {
            fail(line_no, "nested arrays are not supported");
        } else if (c == ',') {
            flush(true);
        } else {
            current += c;
        }
    }
    flush(false);  // last element; also tolerates a trailing comma
    (void)saw_item;
    return value;
}

TomlValue parse_value(const std::string& rhs, int line_no) {
    if (rhs.empty()) fail(line_no, "missing value");
    if (rhs.front() == '"') {
        std::size_t pos = 0;
        TomlValue value;
        value.kind = TomlValue::Kind::kString;
        value.line = line_no;
        value.text = parse_quoted(rhs, pos, line_no);
        if (trim(rhs.substr(pos)) != "") fail(line_no, "trailing characters after string");
        return value;
    }
    if (rhs.front() == '[') {
        if (rhs.back() != ']') fail(line_no, "array must close on the same line");
        return parse_array(rhs, line_no);
    }
    return parse_scalar(rhs, line_no);
}

}  // namespace

TomlDocument parse_toml(const std::string& text) {
    TomlDocument doc;
    TomlTable* current = nullptr;

    std::istringstream stream(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(stream, raw_line)) {
        ++line_no;
        if (!raw_line.empty() && raw_line.back() == '\r') raw_line.pop_back();
        const std::string line = trim(strip_comment(raw_line, line_no));
        if (line.empty()) continue;

        if (line.front() == '[') {
            const bool is_array = line.size() >= 2 && line[1] == '[';
            const std::string closer = is_array ? "]]" : "]";
            if (line.size() < 2 * closer.size() + 1 ||
                line.substr(line.size() - closer.size()) != closer) {
                fail(line_no, "malformed section header");
            }
            const std::string name =
                trim(line.substr(closer.size(), line.size() - 2 * closer.size()));
            if (!is_bare_name(name)) fail(line_no, "bad section name `" + name + "`");
            if (is_array) {
                if (doc.sections.count(name)) {
                    fail(line_no, "section `" + name + "` is already a plain table");
                }
                auto& list = doc.table_arrays[name];
                list.push_back(TomlTable{{}, line_no});
                current = &list.back();
            } else {
                if (doc.table_arrays.count(name)) {
                    fail(line_no, "section `" + name + "` is already a table array");
                }
                if (doc.sections.count(name)) fail(line_no, "duplicate section `" + name + "`");
                auto& table = doc.sections[name];
                table.line = line_no;
                current = &table;
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected `key = value`");
        const std::string key = trim(line.substr(0, eq));
        if (!is_bare_name(key)) fail(line_no, "bad key `" + key + "`");
        if (!current) fail(line_no, "key `" + key + "` appears before any section header");
        if (current->entries.count(key)) fail(line_no, "duplicate key `" + key + "`");
        current->entries[key] = parse_value(trim(line.substr(eq + 1)), line_no);
    }
    return doc;
}

}  // namespace ptcdsim
