#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace ptcdsim {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 540.0;
constexpr double kPlotLeft = 72.0;
constexpr double kPlotRight = 620.0;
constexpr double kPlotTop = 46.0;
constexpr double kPlotBottom = 488.0;
constexpr double kLegendX = 648.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct LinearScale {
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    double range_lo = 0.0;
    double range_hi = 1.0;

    double operator()(double v) const {
        if (domain_hi == domain_lo) return 0.5 * (range_lo + range_hi);
        return range_lo + (v - domain_lo) / (domain_hi - domain_lo) * (range_hi - range_lo);
    }
};

void open_svg(std::string& out, const std::string& title) {
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    out += "<rect width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(kPlotLeft) + "\" y=\"24\" font-size=\"16\">" + xml_escape(title) +
           "</text>\n";
}

void draw_frame(std::string& out) {
    out += "<rect x=\"" + num(kPlotLeft) + "\" y=\"" + num(kPlotTop) + "\" width=\"" +
           num(kPlotRight - kPlotLeft) + "\" height=\"" + num(kPlotBottom - kPlotTop) +
           "\" fill=\"none\" stroke=\"#333\"/>\n";
}

void draw_x_axis(std::string& out, const LinearScale& x, const std::vector<double>& ticks,
                 const std::string& label) {
    for (double t : ticks) {
        const double px = x(t);
        out += "<line x1=\"" + num(px) + "\" y1=\"" + num(kPlotTop) + "\" x2=\"" + num(px) +
               "\" y2=\"" + num(kPlotBottom) + "\" stroke=\"#ddd\"/>\n";
        out += "<text x=\"" + num(px) + "\" y=\"" + num(kPlotBottom + 18.0) +
               "\" text-anchor=\"middle\">" + num(t) + "</text>\n";
    }
    out += "<text x=\"" + num(0.5 * (kPlotLeft + kPlotRight)) + "\" y=\"" +
           num(kPlotBottom + 40.0) + "\" text-anchor=\"middle\">" + xml_escape(label) +
           "</text>\n";
}

void draw_y_label(std::string& out, const std::string& label) {
    const double cy = 0.5 * (kPlotTop + kPlotBottom);
    out += "<text x=\"20\" y=\"" + num(cy) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           num(cy) + ")\">" + xml_escape(label) + "</text>\n";
}

std::vector<double> x_ticks_for(double lo, double hi, const std::vector<double>& grid) {
    std::vector<double> distinct;
    for (double g : grid) {
        if (distinct.empty() || g != distinct.back()) distinct.push_back(g);
    }
    if (!distinct.empty() && distinct.size() <= 13) return distinct;
    if (hi == lo) return {lo};
    const double raw = (hi - lo) / 8.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * mult >= raw) {
            step = mag * mult;
            break;
        }
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9; t += step) ticks.push_back(t);
    return ticks;
}

void polyline(std::string& out, const std::vector<std::pair<double, double>>& pts,
              const std::string& color, bool dashed, bool markers) {
    if (pts.size() >= 2) {
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.8\"";
        if (dashed) out += " stroke-dasharray=\"7 4\"";
        out += " points=\"";
        for (const auto& [px, py] : pts) out += num(px) + "," + num(py) + " ";
        out += "\"/>\n";
    }
    if (markers) {
        for (const auto& [px, py] : pts) {
            out += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"3\" fill=\"" +
                   color + "\"/>\n";
        }
    }
}

void legend_entry(std::string& out, std::size_t slot, const std::string& color, bool dashed,
                  const std::string& label) {
    const double y = kPlotTop + 8.0 + 22.0 * static_cast<double>(slot);
    out += "<line x1=\"" + num(kLegendX) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(kLegendX + 26.0) + "\" y2=\"" + num(y) + "\" stroke=\"" + color +
           "\" stroke-width=\"1.8\"" + (dashed ? " stroke-dasharray=\"7 4\"" : "") + "/>\n";
    out += "<text x=\"" + num(kLegendX + 32.0) + "\" y=\"" + num(y + 4.0) + "\">" +
           xml_escape(label) + "</text>\n";
}

}  // namespace

std::string render_outage_svg(const std::vector<ptcd::OutageCurve>& curves,
                              const std::string& title) {
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -std::numeric_limits<double>::infinity();
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    std::vector<double> grid;
    for (const auto& curve : curves) {
        for (const auto& p : curve.points) {
            x_lo = std::min(x_lo, p.snr_db);
            x_hi = std::max(x_hi, p.snr_db);
            grid.push_back(p.snr_db);
            for (double v : {p.outage, p.bound.value_or(0.0)}) {
                if (v > 0.0) {
                    y_min = std::min(y_min, v);
                    y_max = std::max(y_max, v);
                }
            }
        }
    }
    if (!std::isfinite(x_lo)) {
        x_lo = 0.0;
        x_hi = 1.0;
    }
    if (!std::isfinite(y_min)) {
        y_min = 1e-8;
        y_max = 1.0;
    }
    std::sort(grid.begin(), grid.end());
    double decade_lo = std::floor(std::log10(y_min));
    double decade_hi = std::ceil(std::log10(y_max));
    if (decade_hi == decade_lo) decade_lo -= 1.0;

    const LinearScale x{x_lo, x_hi, kPlotLeft, kPlotRight};
    const LinearScale y{decade_lo, decade_hi, kPlotBottom, kPlotTop};

    std::string out;
    open_svg(out, title);
    for (double d = decade_lo; d <= decade_hi + 1e-9; d += 1.0) {
        const double py = y(d);
        out += "<line x1=\"" + num(kPlotLeft) + "\" y1=\"" + num(py) + "\" x2=\"" +
               num(kPlotRight) + "\" y2=\"" + num(py) + "\" stroke=\"#ddd\"/>\n";
        char lab[24];
        std::snprintf(lab, sizeof(lab), "1e%+03d", static_cast<int>(d));
        out += "<text x=\"" + num(kPlotLeft - 8.0) + "\" y=\"" + num(py + 4.0) +
               "\" text-anchor=\"end\">" + lab + "</text>\n";
    }
    draw_x_axis(out, x, x_ticks_for(x_lo, x_hi, grid), "SNR (dB)");
    draw_y_label(out, "outage probability");
    draw_frame(out);

    std::size_t legend_slot = 0;
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const auto& curve = curves[c];
        const std::string color = kPalette[c % kPaletteSize];
        const bool dashed_curve = curve.scheme_label.rfind("bound-", 0) == 0;

        std::vector<std::pair<double, double>> segment;
        for (const auto& p : curve.points) {
            if (p.outage > 0.0) {
                segment.emplace_back(x(p.snr_db), y(std::log10(p.outage)));
            } else {
                polyline(out, segment, color, dashed_curve, true);
                segment.clear();
            }
        }
        polyline(out, segment, color, dashed_curve, true);
        legend_entry(out, legend_slot++, color, dashed_curve, curve.scheme_label);

        bool bound_differs = false;
        for (const auto& p : curve.points) {
            if (p.bound && *p.bound != p.outage) bound_differs = true;
        }
        if (bound_differs) {
            std::vector<std::pair<double, double>> bound_pts;
            for (const auto& p : curve.points) {
                if (p.bound && *p.bound > 0.0) {
                    bound_pts.emplace_back(x(p.snr_db), y(std::log10(*p.bound)));
                }
            }
            polyline(out, bound_pts, color, true, false);
            legend_entry(out, legend_slot++, color, true, curve.scheme_label + " bound");
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_slope_svg(const std::vector<ptcd::DiversityReport>& reports,
                             const std::string& title) {
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -std::numeric_limits<double>::infinity();
    double y_hi = 0.0;
    std::vector<double> grid;
    for (const auto& report : reports) {
        y_hi = std::max(y_hi, report.estimate.asymptote_claim);
        for (const auto& sp : report.estimate.slopes) {
            x_lo = std::min(x_lo, sp.snr_db_midpoint);
            x_hi = std::max(x_hi, sp.snr_db_midpoint);
            grid.push_back(sp.snr_db_midpoint);
            y_hi = std::max(y_hi, sp.slope);
        }
    }
    if (!std::isfinite(x_lo)) {
        x_lo = 0.0;
        x_hi = 1.0;
    }
    std::sort(grid.begin(), grid.end());
    y_hi = std::max(1.0, y_hi) + 0.5;

    const LinearScale x{x_lo, x_hi, kPlotLeft, kPlotRight};
    const LinearScale y{0.0, y_hi, kPlotBottom, kPlotTop};

    std::string out;
    open_svg(out, title);
    for (double v = 0.0; v <= y_hi + 1e-9; v += y_hi > 6.0 ? 2.0 : 1.0) {
        const double py = y(v);
        out += "<line x1=\"" + num(kPlotLeft) + "\" y1=\"" + num(py) + "\" x2=\"" +
               num(kPlotRight) + "\" y2=\"" + num(py) + "\" stroke=\"#ddd\"/>\n";
        out += "<text x=\"" + num(kPlotLeft - 8.0) + "\" y=\"" + num(py + 4.0) +
               "\" text-anchor=\"end\">" + num(v) + "</text>\n";
    }
    draw_x_axis(out, x, x_ticks_for(x_lo, x_hi, grid), "SNR midpoint (dB)");
    draw_y_label(out, "estimated diversity slope");
    draw_frame(out);

    std::size_t legend_slot = 0;
    for (std::size_t r = 0; r < reports.size(); ++r) {
        const auto& report = reports[r];
        const std::string color = kPalette[r % kPaletteSize];
        std::vector<std::pair<double, double>> pts;
        for (const auto& sp : report.estimate.slopes) {
            pts.emplace_back(x(sp.snr_db_midpoint), y(sp.slope));
        }
        polyline(out, pts, color, false, true);
        legend_entry(out, legend_slot++, color, false, report.scheme_label);

        const double target = report.estimate.asymptote_claim;
        if (target > 0.0) {
            const double py = y(target);
            out += "<line x1=\"" + num(kPlotLeft) + "\" y1=\"" + num(py) + "\" x2=\"" +
                   num(kPlotRight) + "\" y2=\"" + num(py) + "\" stroke=\"" + color +
                   "\" stroke-dasharray=\"7 4\"/>\n";
            legend_entry(out, legend_slot++, color, true,
                         report.scheme_label + " target " + num(target));
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace ptcdsim
