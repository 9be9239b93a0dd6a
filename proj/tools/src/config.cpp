#include "config.hpp"

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ptcd/errors.hpp"
#include "ptcd/report.hpp"
#include "tomlmini.hpp"

namespace ptcdsim {

namespace {

using ptcd::ConfigError;

[[noreturn]] void fail(int line, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

void reject_unknown_keys(const TomlTable& table, const std::string& section,
                         const std::set<std::string>& allowed) {
    for (const auto& [key, value] : table.entries) {
        if (!allowed.count(key)) {
            fail(value.line, "unknown key `" + key + "` in [" + section + "]");
        }
    }
}

const TomlValue* find_key(const TomlTable& table, const std::string& key) {
    const auto it = table.entries.find(key);
    return it == table.entries.end() ? nullptr : &it->second;
}

std::string get_string(const TomlTable& table, const std::string& section,
                       const std::string& key) {
    const TomlValue* v = find_key(table, key);
    if (!v) fail(table.line, "[" + section + "] is missing key `" + key + "`");
    if (v->kind != TomlValue::Kind::kString) fail(v->line, "`" + key + "` must be a string");
    return v->text;
}

double get_number(const TomlTable& table, const std::string& key, double fallback) {
    const TomlValue* v = find_key(table, key);
    if (!v) return fallback;
    if (v->kind != TomlValue::Kind::kNumber) fail(v->line, "`" + key + "` must be a number");
    return v->number;
}

std::uint64_t get_u64(const TomlTable& table, const std::string& key, std::uint64_t fallback) {
    const TomlValue* v = find_key(table, key);
    if (!v) return fallback;
    if (v->kind != TomlValue::Kind::kNumber ||
        v->raw.find_first_not_of("0123456789") != std::string::npos) {
        fail(v ? v->line : table.line, "`" + key + "` must be a non-negative integer");
    }
    try {
        return std::stoull(v->raw);
    } catch (const std::exception&) {
        fail(v->line, "`" + key + "` is out of range");
    }
}

std::vector<double> get_number_array(const TomlValue& v, const std::string& key) {
    if (v.kind != TomlValue::Kind::kArray) fail(v.line, "`" + key + "` must be an array");
    std::vector<double> out;
    out.reserve(v.items.size());
    for (const auto& item : v.items) {
        if (item.kind != TomlValue::Kind::kNumber) {
            fail(item.line, "`" + key + "` must hold numbers only");
        }
        out.push_back(item.number);
    }
    return out;
}

ptcd::FadingModel parse_model(const TomlDocument& doc) {
    const auto it = doc.sections.find("model");
    if (it == doc.sections.end()) return ptcd::FadingModel::rayleigh(1.0);
    const TomlTable& table = it->second;
    reject_unknown_keys(table, "model", {"fading", "shape_m", "mean_power"});
    const std::string fading = get_string(table, "model", "fading");
    const double mean_power = get_number(table, "mean_power", 1.0);
    if (fading == "rayleigh") {
        if (find_key(table, "shape_m")) {
            fail(table.line, "`shape_m` only applies to nakagami fading");
        }
        return ptcd::FadingModel::rayleigh(mean_power);
    }
    if (fading == "nakagami") {
        const TomlValue* shape = find_key(table, "shape_m");
        if (!shape) fail(table.line, "nakagami fading requires `shape_m`");
        return ptcd::FadingModel::nakagami(get_number(table, "shape_m", 0.0), mean_power);
    }
    fail(table.line, "`fading` must be \"rayleigh\" or \"nakagami\", got \"" + fading + "\"");
}

ptcd::QosTarget parse_qos(const TomlDocument& doc, double default_rate_bpcu) {
    const auto it = doc.sections.find("qos");
    if (it == doc.sections.end()) return ptcd::QosTarget::from_rate(default_rate_bpcu);
    const TomlTable& table = it->second;
    reject_unknown_keys(table, "qos", {"rate_bpcu"});
    if (!find_key(table, "rate_bpcu")) fail(table.line, "[qos] is missing key `rate_bpcu`");
    return ptcd::QosTarget::from_rate(get_number(table, "rate_bpcu", 0.0));
}

std::vector<double> parse_grid(const TomlTable& table) {
    const TomlValue* grid = find_key(table, "snr_grid_db");
    const TomlValue* start = find_key(table, "snr_db_start");
    const TomlValue* stop = find_key(table, "snr_db_stop");
    const TomlValue* step = find_key(table, "snr_db_step");
    const bool has_range = start || stop || step;
    if (grid && has_range) {
        fail(grid->line, "give either `snr_grid_db` or the start/stop/step triple, not both");
    }
    if (grid) return get_number_array(*grid, "snr_grid_db");
    if (!(start && stop && step)) {
        fail(table.line, "[sweep] needs `snr_grid_db` or all of snr_db_start/stop/step");
    }
    const double a = start->number;
    const double b = stop->number;
    const double d = step->number;
    if (start->kind != TomlValue::Kind::kNumber || stop->kind != TomlValue::Kind::kNumber ||
        step->kind != TomlValue::Kind::kNumber) {
        fail(table.line, "snr_db_start/stop/step must be numbers");
    }
    if (!(d > 0.0)) fail(step->line, "`snr_db_step` must be positive");
    if (b < a) fail(stop->line, "`snr_db_stop` must not be below `snr_db_start`");
    const double span = (b - a) / d;
    if (span > 10000.0) fail(step->line, "grid would exceed 10000 points");
    const int count = static_cast<int>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(a + k * d);
    return out;
}

ptcd::SchemeSpec parse_scheme(const TomlTable& table) {
    const std::string kind = get_string(table, "schemes", "kind");
    if (kind == "ptcd") {
        reject_unknown_keys(table, "schemes", {"kind", "weights", "branches"});
        const TomlValue* weights = find_key(table, "weights");
        const TomlValue* branches = find_key(table, "branches");
        if (static_cast<bool>(weights) == static_cast<bool>(branches)) {
            fail(table.line, "ptcd scheme needs exactly one of `weights` or `branches`");
        }
        if (weights) {
            return ptcd::SchemeSpec::superposed(
                ptcd::PowerWeights::from(get_number_array(*weights, "weights")));
        }
        const std::uint64_t count = get_u64(table, "branches", 0);
        return ptcd::SchemeSpec::superposed(
            ptcd::PowerWeights::reference(static_cast<std::size_t>(count)));
    }
    if (kind == "direct") {
        reject_unknown_keys(table, "schemes", {"kind"});
        return ptcd::SchemeSpec::direct();
    }
    if (kind == "stbc") {
        reject_unknown_keys(table, "schemes", {"kind", "tx"});
        if (!find_key(table, "tx")) fail(table.line, "stbc scheme requires `tx`");
        return ptcd::SchemeSpec::stbc(static_cast<std::size_t>(get_u64(table, "tx", 0)));
    }
    if (kind == "cooperative") {
        reject_unknown_keys(table, "schemes", {"kind", "relays"});
        if (!find_key(table, "relays")) fail(table.line, "cooperative scheme requires `relays`");
        return ptcd::SchemeSpec::cooperative(static_cast<std::size_t>(get_u64(table, "relays", 0)));
    }
    fail(table.line, "unknown scheme kind \"" + kind + "\"");
}

}  // namespace

ptcd::SweepConfig load_sweep_config(const std::filesystem::path& path, double default_rate_bpcu) {
    const std::string text = ptcd::read_text_file(path);
    const TomlDocument doc = parse_toml(text);

    for (const auto& [name, table] : doc.sections) {
        if (name != "model" && name != "qos" && name != "sweep") {
            fail(table.line, "unknown section [" + name + "]");
        }
    }
    for (const auto& [name, tables] : doc.table_arrays) {
        if (name != "schemes") {
            fail(tables.front().line, "unknown section [[" + name + "]]");
        }
    }

    const auto sweep_it = doc.sections.find("sweep");
    if (sweep_it == doc.sections.end()) throw ConfigError("config is missing [sweep]");
    const TomlTable& sweep = sweep_it->second;
    reject_unknown_keys(sweep, "sweep",
                        {"snr_grid_db", "snr_db_start", "snr_db_stop", "snr_db_step",
                         "trials_per_point", "seed"});

    ptcd::SweepConfig config;
    config.model = parse_model(doc);
    config.qos = parse_qos(doc, default_rate_bpcu);
    config.snr_grid_db = parse_grid(sweep);
    config.trials_per_point = get_u64(sweep, "trials_per_point", 10'000'000);
    config.master_seed = get_u64(sweep, "seed", 1);

    const auto schemes_it = doc.table_arrays.find("schemes");
    if (schemes_it == doc.table_arrays.end() || schemes_it->second.empty()) {
        throw ConfigError("config needs at least one [[schemes]] entry");
    }
    for (const TomlTable& table : schemes_it->second) {
        config.schemes.push_back(parse_scheme(table));
    }

    ptcd::validate_config(config);
    return config;
}

}  // namespace ptcdsim
