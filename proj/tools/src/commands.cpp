#include "commands.hpp"

#include <algorithm>
#include <chrono>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "ptcd/errors.hpp"
#include "ptcd/report.hpp"
#include "ptcd/version.hpp"
#include "svg.hpp"

namespace ptcdsim {

namespace {

using Clock = std::chrono::steady_clock;

void apply_overrides(ptcd::SweepConfig& config, const CommandOptions& options) {
    if (options.trials) {
        if (*options.trials == 0) throw ptcd::ConfigError("--trials must be at least 1");
        config.trials_per_point = *options.trials;
    }
    if (options.seed) config.master_seed = *options.seed;
}

/// Degenerate operating points abort under --strict and are collected as
/// warnings otherwise.
std::vector<std::string> strict_gate(const ptcd::SweepConfig& config,
                                     const CommandOptions& options) {
    std::vector<std::string> warnings;
    for (const auto& scheme : config.schemes) {
        if (!scheme.is_superposition()) continue;
        if (auto warn = ptcd::validate_operating_point(*scheme.superposition, config.qos)) {
            const std::string message = scheme.label + ": " + warn->message;
            if (options.strict) throw StrictAbort(message);
            warnings.push_back(message);
        }
    }
    return warnings;
}

RunManifest start_manifest(const char* command, const CommandOptions& options) {
    RunManifest manifest;
    manifest.command = command;
    manifest.config_path = options.config_path.string();
    manifest.output_dir = options.out_dir.string();
    return manifest;
}

void emit(RunManifest& manifest, const CommandOptions& options, const std::string& name,
          const std::string& kind, const std::string& content) {
    ptcd::write_text_file(options.out_dir / name, content);
    manifest.emitted_files.push_back({name, kind});
}

void finish_manifest(RunManifest& manifest, const CommandOptions& options,
                     const Clock::time_point& start) {
    manifest.wall_clock_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    nlohmann::json j;
    j["command"] = manifest.command;
    j["config_path"] = manifest.config_path;
    j["output_dir"] = manifest.output_dir;
    j["version"] = ptcd::kVersion;
    j["wall_clock_seconds"] = manifest.wall_clock_seconds;
    j["emitted_files"] = nlohmann::json::array();
    for (const auto& f : manifest.emitted_files) {
        j["emitted_files"].push_back({{"name", f.name}, {"kind", f.kind}});
    }
    j["diagnostics"] = manifest.diagnostics;
    ptcd::write_text_file(options.out_dir / "manifest.json", j.dump(2) + "\n");
}

/// High-SNR slope each scheme is expected to approach: the branch count
/// (or antennas, or relay count plus one), scaled by the gamma shape under
/// nakagami fading.
double target_order(const ptcd::SchemeSpec& scheme, const ptcd::FadingModel& model) {
    const double shape = model.kind == ptcd::FadingKind::kNakagami ? model.shape_m : 1.0;
    if (scheme.is_superposition()) {
        return shape * static_cast<double>(scheme.superposition->branch_count());
    }
    switch (scheme.benchmark->kind) {
        case ptcd::BenchmarkKind::kDirect: return shape;
        case ptcd::BenchmarkKind::kStbc:
            return shape * static_cast<double>(scheme.benchmark->branch_count);
        case ptcd::BenchmarkKind::kCooperative:
            return shape * static_cast<double>(scheme.benchmark->branch_count);
    }
    return shape;
}

}  // namespace

RunManifest cmd_sweep(const CommandOptions& options) {
    const auto start = Clock::now();
    ptcd::SweepConfig config = load_sweep_config(options.config_path, 1.0);
    apply_overrides(config, options);
    auto manifest = start_manifest("sweep", options);
    manifest.diagnostics = strict_gate(config, options);

    const ptcd::SweepResult result = run_sweep(config, options.workers);
    for (const auto& d : result.diagnostics) {
        if (std::find(manifest.diagnostics.begin(), manifest.diagnostics.end(), d) ==
            manifest.diagnostics.end()) {
            manifest.diagnostics.push_back(d);
        }
    }

    emit(manifest, options, "results.csv", "csv", ptcd::format_csv(result));
    emit(manifest, options, "results.json", "json", ptcd::format_results_json(result));
    if (options.plot) {
        emit(manifest, options, "outage.svg", "svg",
             render_outage_svg(result.curves, "Outage vs SNR"));
    }
    finish_manifest(manifest, options, start);
    return manifest;
}

RunManifest cmd_diversity(const CommandOptions& options) {
    const auto start = Clock::now();
    ptcd::SweepConfig config = load_sweep_config(options.config_path, 0.5);
    apply_overrides(config, options);
    if (config.snr_grid_db.size() < 2) {
        throw ptcd::ConfigError("slope estimation needs at least two grid points");
    }
    auto manifest = start_manifest("diversity", options);
    manifest.diagnostics = strict_gate(config, options);

    const ptcd::SweepResult result = run_sweep(config, options.workers);
    for (const auto& d : result.diagnostics) manifest.diagnostics.push_back(d);

    std::vector<ptcd::DiversityReport> reports;
    reports.reserve(result.curves.size());
    for (std::size_t c = 0; c < result.curves.size(); ++c) {
        ptcd::DiversityReport report;
        report.scheme_label = result.curves[c].scheme_label;
        report.estimate = ptcd::diversity_slope(result.curves[c],
                                                target_order(config.schemes[c], config.model));
        reports.push_back(std::move(report));
    }

    nlohmann::json j;
    j["version"] = ptcd::kVersion;
    j["rate_bpcu"] = config.qos.rate_bpcu;
    j["schemes"] = nlohmann::json::array();
    for (const auto& report : reports) {
        nlohmann::json js;
        js["scheme"] = report.scheme_label;
        js["target_order"] = report.estimate.asymptote_claim;
        js["slopes"] = nlohmann::json::array();
        for (const auto& sp : report.estimate.slopes) {
            js["slopes"].push_back(
                {{"snr_db_midpoint", sp.snr_db_midpoint}, {"slope", sp.slope}});
        }
        js["diagnostics"] = report.estimate.diagnostics;
        j["schemes"].push_back(std::move(js));
    }

    emit(manifest, options, "results.csv", "csv", ptcd::format_csv(result));
    emit(manifest, options, "results.json", "json", ptcd::format_results_json(result));
    emit(manifest, options, "diversity.csv", "csv", ptcd::format_diversity_csv(reports));
    emit(manifest, options, "diversity.json", "json", j.dump(2) + "\n");
    if (options.plot) {
        emit(manifest, options, "diversity.svg", "svg",
             render_slope_svg(reports, "Diversity slope vs SNR"));
    }
    finish_manifest(manifest, options, start);
    return manifest;
}

RunManifest cmd_compare(const CommandOptions& options) {
    const auto start = Clock::now();
    ptcd::SweepConfig config = load_sweep_config(options.config_path, 1.0);
    apply_overrides(config, options);
    if (config.schemes.size() != 1 || !config.schemes.front().is_superposition()) {
        throw ptcd::ConfigError(
            "compare derives its own benchmarks: the config must hold exactly one "
            "[[schemes]] entry of kind \"ptcd\"");
    }
    const std::size_t branches = config.schemes.front().superposition->branch_count();
    if (branches < 2) {
        throw ptcd::ConfigError("compare needs at least two branches");
    }
    config.schemes.push_back(ptcd::SchemeSpec::direct());
    config.schemes.push_back(ptcd::SchemeSpec::stbc(branches));
    config.schemes.push_back(ptcd::SchemeSpec::cooperative(branches - 1));

    auto manifest = start_manifest("compare", options);
    manifest.diagnostics = strict_gate(config, options);

    const ptcd::SweepResult result = run_sweep(config, options.workers);
    for (const auto& d : result.diagnostics) manifest.diagnostics.push_back(d);

    nlohmann::json ordering;
    ordering["version"] = ptcd::kVersion;
    ordering["points"] = nlohmann::json::array();
    for (std::size_t p = 0; p < config.snr_grid_db.size(); ++p) {
        std::vector<std::size_t> order(result.curves.size());
        for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return result.curves[a].points[p].outage < result.curves[b].points[p].outage;
        });
        nlohmann::json jp;
        jp["snr_db"] = config.snr_grid_db[p];
        jp["ranking"] = nlohmann::json::array();
        for (std::size_t c : order) {
            const auto& point = result.curves[c].points[p];
            jp["ranking"].push_back({{"scheme", result.curves[c].scheme_label},
                                     {"outage", point.outage},
                                     {"ci_half_width", point.ci_half_width}});
        }
        jp["best"] = result.curves[order.front()].scheme_label;
        ordering["points"].push_back(std::move(jp));
    }

    emit(manifest, options, "results.csv", "csv", ptcd::format_csv(result));
    emit(manifest, options, "results.json", "json", ptcd::format_results_json(result));
    emit(manifest, options, "ordering.json", "json", ordering.dump(2) + "\n");
    if (options.plot) {
        emit(manifest, options, "outage.svg", "svg",
             render_outage_svg(result.curves, "Scheme comparison"));
    }
    finish_manifest(manifest, options, start);
    return manifest;
}

RunManifest cmd_bound(const CommandOptions& options) {
    const auto start = Clock::now();
    ptcd::SweepConfig config = load_sweep_config(options.config_path, 1.0);
    apply_overrides(config, options);
    if (config.model.kind != ptcd::FadingKind::kRayleigh) {
        throw ptcd::ConfigError("the closed-form bound only exists for rayleigh fading");
    }
    for (const auto& scheme : config.schemes) {
        if (!scheme.is_superposition()) {
            throw ptcd::ConfigError("bound only applies to \"ptcd\" schemes, got `" +
                                    scheme.label + "`");
        }
    }
    auto manifest = start_manifest("bound", options);
    manifest.diagnostics = strict_gate(config, options);

    ptcd::SweepResult shell;
    shell.version = ptcd::kVersion;
    shell.config = config;
    for (const auto& scheme : config.schemes) {
        shell.curves.push_back(ptcd::reference_bound_curve(*scheme.superposition, config.qos,
                                                           config.snr_grid_db));
    }

    emit(manifest, options, "bound.csv", "csv", ptcd::format_csv(shell));
    if (options.plot) {
        emit(manifest, options, "bound.svg", "svg",
             render_outage_svg(shell.curves, "Closed-form outage bound"));
    }
    finish_manifest(manifest, options, start);
    return manifest;
}

}  // namespace ptcdsim
