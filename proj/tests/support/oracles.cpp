#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) {
        throw std::invalid_argument("regularized_gamma_p needs a > 0, x >= 0");
    }
    if (x == 0.0) return 0.0;

    const double log_prefix = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0) {
        // Lower series: P = prefix * sum_n x^n / (a (a+1) ... (a+n)).
        double ap = a;
        double term = 1.0 / a;
        double sum = term;
        for (int n = 0; n < 1000; ++n) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(log_prefix);
    }
    // Upper continued fraction (modified Lentz) for Q, then P = 1 - Q.
    double b = x + 1.0 - a;
    double c = 1e300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 - std::exp(log_prefix) * h;
}

double erlang_cdf(std::size_t k, double x) {
    if (k == 0) {
        throw std::invalid_argument("erlang_cdf needs k >= 1");
    }
    if (x <= 0.0) return 0.0;
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t j = 1; j < k; ++j) {
        term *= x / static_cast<double>(j);
        sum += term;
    }
    return 1.0 - std::exp(-x) * sum;
}

double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n) {
    if (n == 0 || n % 2 != 0) {
        throw std::invalid_argument("simpson needs an even, positive panel count");
    }
    const double h = (b - a) / static_cast<double>(n);
    double sum = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) {
        sum += f(a + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

double ks_two_sample(std::vector<double> xs, std::vector<double> ys) {
    if (xs.empty() || ys.empty()) {
        throw std::invalid_argument("ks_two_sample needs non-empty samples");
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const double nx = static_cast<double>(xs.size());
    const double ny = static_cast<double>(ys.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < xs.size() && j < ys.size()) {
        const double v = std::min(xs[i], ys[j]);
        while (i < xs.size() && xs[i] <= v) ++i;
        while (j < ys.size() && ys[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
    }
    return d;
}

double ks_critical_001(std::size_t n, std::size_t m) {
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    return 1.628 * std::sqrt((nn + mm) / (nn * mm));
}

double cooperative_single_relay_outage(double rate_bpcu, double snr_linear) {
    const double node_snr = snr_linear / 2.0;
    const double threshold = std::exp2(2.0 * rate_bpcu) - 1.0;
    const double x = threshold / node_snr;

    const double p_link_fail = 1.0 - std::exp(-x);  // one unit-mean exponential below x
    // Two-branch MRC tail P(g1 + g2 < x) by integrating the convolution.
    const double p_mrc_fail = simpson(
        [x](double t) { return std::exp(-t) * (1.0 - std::exp(-(x - t))); }, 0.0, x, 4000);

    // Relay silent (source-relay link failed): destination relies on the
    // direct link alone. Otherwise both copies combine.
    return p_link_fail * p_link_fail + (1.0 - p_link_fail) * p_mrc_fail;
}

Moments gamma_moments_numeric(double shape, double scale) {
    if (!(shape >= 1.0) || !(scale > 0.0)) {
        throw std::invalid_argument("gamma_moments_numeric needs shape >= 1, scale > 0");
    }
    const double upper = scale * (shape + 40.0 * std::sqrt(shape) + 40.0);
    const double log_norm = std::lgamma(shape) + shape * std::log(scale);
    auto pdf = [&](double t) {
        if (t <= 0.0) return 0.0;
        return std::exp((shape - 1.0) * std::log(t) - t / scale - log_norm);
    };
    const std::size_t panels = 20000;
    const double m1 = simpson([&](double t) { return t * pdf(t); }, 0.0, upper, panels);
    const double m2 = simpson([&](double t) { return t * t * pdf(t); }, 0.0, upper, panels);
    return {m1, m2 - m1 * m1};
}

}  // namespace oracle
