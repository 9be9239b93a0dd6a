#ifndef PTCDSIM_COMMANDS_HPP
#define PTCDSIM_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptcdsim {

struct CommandOptions {
    std::filesystem::path config_path;
    std::filesystem::path out_dir = "out";
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    bool plot = false;
    bool strict = false;
};

struct EmittedFile {
    std::string name;  ///< relative to output_dir
    std::string kind;  ///< csv | json | svg
};

/// What a command produced. Every listed file exists once the command
/// returns; manifest.json itself (written last) is not listed. Diagnostics
/// carry engine warnings for the caller to surface.
struct RunManifest {
    std::string command;
    std::string config_path;
    std::string output_dir;
    std::vector<EmittedFile> emitted_files;
    double wall_clock_seconds = 0.0;
    std::vector<std::string> diagnostics;
};

/// Raised when --strict meets a degenerate operating point; exit code 4.
struct StrictAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monte Carlo sweep: results.csv + results.json, outage.svg with plot on.
RunManifest cmd_sweep(const CommandOptions& options);

/// Sweep plus slope analysis (default rate 0.5 BPCU): adds diversity.csv,
/// diversity.json and optionally diversity.svg.
RunManifest cmd_diversity(const CommandOptions& options);

/// One superposition scheme against its matched benchmarks (direct, STBC
/// with as many antennas as branches, decode-and-forward with one relay per
/// extra branch): results plus a per-point ordering.json.
RunManifest cmd_compare(const CommandOptions& options);

/// Closed-form bound evaluation only, no Monte Carlo: bound.csv and
/// optionally bound.svg. Requires Rayleigh fading and superposition schemes.
RunManifest cmd_bound(const CommandOptions& options);

}  // namespace ptcdsim

#endif
