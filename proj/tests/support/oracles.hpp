#ifndef PTCD_TESTS_ORACLES_HPP
#define PTCD_TESTS_ORACLES_HPP

#include <cstddef>
#include <functional>
#include <vector>

// Independent numerical oracles for the test suite. Everything here is
// implemented from first principles (series, continued fractions, plain
// quadrature) and never calls into the library under test, so the two sides
// of each comparison stay independent.
namespace oracle {

/// Regularized lower incomplete gamma P(a, x); series for x < a+1, Lentz
/// continued fraction otherwise.
double regularized_gamma_p(double a, double x);

/// CDF of a sum of k i.i.d. unit-mean exponentials at x:
/// 1 - e^{-x} * sum_{j<k} x^j / j!.
double erlang_cdf(std::size_t k, double x);

/// Composite Simpson rule with n (even) panels.
double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n);

/// Two-sample Kolmogorov-Smirnov statistic sup |F1 - F2| (inputs copied and
/// sorted internally).
double ks_two_sample(std::vector<double> xs, std::vector<double> ys);

/// Critical KS distance at significance alpha = 0.01 for sample sizes n, m.
double ks_critical_001(std::size_t n, std::size_t m);

/// Outage probability of a symmetric single-relay decode-and-forward network
/// on unit-mean Rayleigh links: total power snr_linear split over two nodes,
/// two time slots (rate target doubled per slot). Semi-analytic: exponential
/// CDFs for the single-link events, Simpson integration for the two-branch
/// MRC tail.
double cooperative_single_relay_outage(double rate_bpcu, double snr_linear);

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Mean and variance of Gamma(shape, scale), shape >= 1, by quadrature of
/// the density (no closed-form moment identities used).
Moments gamma_moments_numeric(double shape, double scale);

}  // namespace oracle

#endif
