#ifndef PTCDSIM_SVG_HPP
#define PTCDSIM_SVG_HPP

#include <string>
#include <vector>

#include "ptcd/outage.hpp"
#include "ptcd/report.hpp"

namespace ptcdsim {

/// Log-y outage vs SNR chart: one solid series per curve, the closed-form
/// bound overlaid as a dashed series in the same color, zero estimates left
/// out (they have no place on a log axis). Curves whose label starts with
/// "bound-" render dashed outright. Pure function of the data.
std::string render_outage_svg(const std::vector<ptcd::OutageCurve>& curves,
                              const std::string& title);

/// Linear slope-vs-SNR chart with a dashed horizontal reference line at each
/// scheme's target diversity order.
std::string render_slope_svg(const std::vector<ptcd::DiversityReport>& reports,
                             const std::string& title);

}  // namespace ptcdsim

#endif
