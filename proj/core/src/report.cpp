#include "ptcd/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ptcd/errors.hpp"

namespace ptcd {

namespace {

std::string real_cell(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10e", value);
    return buf;
}

nlohmann::json model_to_json(const FadingModel& model) {
    nlohmann::json j;
    j["fading"] = model.kind == FadingKind::kRayleigh ? "rayleigh" : "nakagami";
    if (model.kind == FadingKind::kNakagami) j["shape_m"] = model.shape_m;
    j["mean_power"] = model.mean_power;
    return j;
}

FadingModel model_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("fading").get<std::string>();
    const double mean_power = j.at("mean_power").get<double>();
    if (kind == "rayleigh") return FadingModel::rayleigh(mean_power);
    if (kind == "nakagami") return FadingModel::nakagami(j.at("shape_m").get<double>(), mean_power);
    throw IoError("results document holds unknown fading kind: " + kind);
}

nlohmann::json scheme_to_json(const SchemeSpec& scheme) {
    nlohmann::json j;
    j["label"] = scheme.label;
    if (scheme.is_superposition()) {
        j["kind"] = "ptcd";
        j["weights"] = scheme.superposition->values();
        return j;
    }
    switch (scheme.benchmark->kind) {
        case BenchmarkKind::kDirect:
            j["kind"] = "direct";
            break;
        case BenchmarkKind::kStbc:
            j["kind"] = "stbc";
            j["tx_antennas"] = scheme.benchmark->branch_count;
            j["code_rate"] = scheme.benchmark->code_rate;
            break;
        case BenchmarkKind::kCooperative:
            j["kind"] = "cooperative";
            j["relay_count"] = scheme.benchmark->relay_count();
            break;
    }
    return j;
}

SchemeSpec scheme_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    SchemeSpec spec;
    if (kind == "ptcd") {
        spec = SchemeSpec::superposed(PowerWeights::from(j.at("weights").get<std::vector<double>>()));
    } else if (kind == "direct") {
        spec = SchemeSpec::direct();
    } else if (kind == "stbc") {
        spec = SchemeSpec::stbc(j.at("tx_antennas").get<std::size_t>());
    } else if (kind == "cooperative") {
        spec = SchemeSpec::cooperative(j.at("relay_count").get<std::size_t>());
    } else {
        throw IoError("results document holds unknown scheme kind: " + kind);
    }
    spec.label = j.at("label").get<std::string>();
    return spec;
}

}  // namespace

std::string format_csv(const SweepResult& result) {
    std::string out = "scheme,snr_db,outage,trials,ci_half_width,bound\n";
    for (const auto& curve : result.curves) {
        for (const auto& p : curve.points) {
            out += curve.scheme_label;
            out += ',';
            out += real_cell(p.snr_db);
            out += ',';
            out += real_cell(p.outage);
            out += ',';
            out += std::to_string(p.trials);
            out += ',';
            out += real_cell(p.ci_half_width);
            out += ',';
            if (p.bound) out += real_cell(*p.bound);
            out += '\n';
        }
    }
    return out;
}

std::string format_results_json(const SweepResult& result) {
    nlohmann::json j;
    j["version"] = result.version;

    nlohmann::json config;
    config["snr_grid_db"] = result.config.snr_grid_db;
    config["trials_per_point"] = result.config.trials_per_point;
    config["master_seed"] = result.config.master_seed;
    config["model"] = model_to_json(result.config.model);
    config["qos"] = {{"rate_bpcu", result.config.qos.rate_bpcu},
                     {"threshold_linear", result.config.qos.threshold_linear}};
    config["schemes"] = nlohmann::json::array();
    for (const auto& scheme : result.config.schemes) {
        config["schemes"].push_back(scheme_to_json(scheme));
    }
    j["config"] = std::move(config);

    j["curves"] = nlohmann::json::array();
    for (const auto& curve : result.curves) {
        nlohmann::json jc;
        jc["scheme"] = curve.scheme_label;
        jc["points"] = nlohmann::json::array();
        for (const auto& p : curve.points) {
            nlohmann::json jp;
            jp["snr_db"] = p.snr_db;
            jp["outage"] = p.outage;
            jp["trials"] = p.trials;
            jp["ci_half_width"] = p.ci_half_width;
            if (p.bound) jp["bound"] = *p.bound;
            jc["points"].push_back(std::move(jp));
        }
        j["curves"].push_back(std::move(jc));
    }

    j["diagnostics"] = result.diagnostics;
    return j.dump(2) + "\n";
}

SweepResult parse_results_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        SweepResult result;
        result.version = j.at("version").get<std::string>();

        const auto& config = j.at("config");
        result.config.snr_grid_db = config.at("snr_grid_db").get<std::vector<double>>();
        result.config.trials_per_point = config.at("trials_per_point").get<std::uint64_t>();
        result.config.master_seed = config.at("master_seed").get<std::uint64_t>();
        result.config.model = model_from_json(config.at("model"));
        result.config.qos =
            QosTarget{config.at("qos").at("rate_bpcu").get<double>(),
                      config.at("qos").at("threshold_linear").get<double>()};
        for (const auto& js : config.at("schemes")) {
            result.config.schemes.push_back(scheme_from_json(js));
        }

        for (const auto& jc : j.at("curves")) {
            OutageCurve curve;
            curve.scheme_label = jc.at("scheme").get<std::string>();
            for (const auto& jp : jc.at("points")) {
                OutagePoint p;
                p.snr_db = jp.at("snr_db").get<double>();
                p.outage = jp.at("outage").get<double>();
                p.trials = jp.at("trials").get<std::uint64_t>();
                p.ci_half_width = jp.at("ci_half_width").get<double>();
                if (jp.contains("bound")) p.bound = jp.at("bound").get<double>();
                curve.points.push_back(p);
            }
            result.curves.push_back(std::move(curve));
        }

        result.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
        return result;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed results document: ") + e.what());
    }
}

std::string format_diversity_csv(const std::vector<DiversityReport>& reports) {
    std::string out = "scheme,snr_db_midpoint,slope,target_order\n";
    for (const auto& report : reports) {
        for (const auto& sp : report.estimate.slopes) {
            out += report.scheme_label;
            out += ',';
            out += real_cell(sp.snr_db_midpoint);
            out += ',';
            out += real_cell(sp.slope);
            out += ',';
            out += real_cell(report.estimate.asymptote_claim);
            out += '\n';
        }
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                          ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading " + path.string());
    }
    return buffer.str();
}

}  // namespace ptcd
