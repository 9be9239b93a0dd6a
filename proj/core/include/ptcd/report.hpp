#ifndef PTCD_REPORT_HPP
#define PTCD_REPORT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ptcd/engine.hpp"
#include "ptcd/outage.hpp"

namespace ptcd {

/// Renders a sweep as CSV with the stable contract:
/// header `scheme,snr_db,outage,trials,ci_half_width,bound`, real values in
/// %.10e, trials as a plain integer, bound empty where absent. Rows follow
/// scheme order then grid order. Output bytes depend only on the result
/// values, never on timing, so fixed-seed runs are bit-stable.
std::string format_csv(const SweepResult& result);

/// Full-fidelity JSON document (config echo, curves, diagnostics, version).
/// Numeric values round-trip exactly: re-reading reproduces every CSV cell
/// byte for byte. Wall-clock time is deliberately not serialized.
std::string format_results_json(const SweepResult& result);

/// Inverse of format_results_json (used for round-trip checks and tooling).
/// Throws IoError on malformed documents.
SweepResult parse_results_json(const std::string& text);

/// One scheme's finite-SNR slope sequence for the diversity report.
struct DiversityReport {
    std::string scheme_label;
    DiversityEstimate estimate;
};

/// CSV with header `scheme,snr_db_midpoint,slope,target_order` (%.10e reals).
std::string format_diversity_csv(const std::vector<DiversityReport>& reports);

/// Writes content to path, creating parent directories; throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Reads a whole file; throws IoError if unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace ptcd

#endif
