#ifndef PTCDSIM_CONFIG_HPP
#define PTCDSIM_CONFIG_HPP

#include <filesystem>

#include "ptcd/engine.hpp"

namespace ptcdsim {

/// Reads and validates a run config. Sections: [model] (optional, defaults to
/// unit-power Rayleigh), [qos] (optional, default_rate_bpcu applies when it
/// is absent), [sweep] (required), and one [[schemes]] entry per scheme
/// (at least one required). Unknown sections or keys are schema errors.
/// Throws ptcd::IoError if the file cannot be read and ptcd::ConfigError on
/// any syntax or schema violation.
ptcd::SweepConfig load_sweep_config(const std::filesystem::path& path, double default_rate_bpcu);

}  // namespace ptcdsim

#endif
