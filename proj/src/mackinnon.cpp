#include <algorithm>
#include <array>
#include <cmath>

#include "gridts/adf.hpp"
#include "gridts/error.hpp"
#include "mackinnon_internal.hpp"

namespace gridts {

namespace {

// Response-surface coefficients for the constant-only (drift, no trend)
// Dickey-Fuller distribution, one univariate series. Critical values are
// tau_crit(N) = b0 + b1/N + b2/N^2 + b3/N^3 with the finite-sample
// coefficients from MacKinnon, "Critical Values for Cointegration Tests",
// Queen's Economics Dept. WP 1227 (2010), Table 2.
struct CritSurface {
    double b0, b1, b2, b3;
};

constexpr CritSurface kCritC1 = {-3.43035, -6.5393, -16.786, -79.433};
constexpr CritSurface kCritC5 = {-2.86154, -2.8903, -4.234, -40.040};
constexpr CritSurface kCritC10 = {-2.56677, -1.5384, -2.809, 0.0};

// P-value mapping for the same constant-only case, from MacKinnon,
// "Approximate Asymptotic Distribution Functions for Unit-Root and
// Cointegration Tests", JBES 12 (1994): p = Phi(poly(tau)) with separate
// polynomials left and right of tau_star, and hard 0/1 cutoffs outside
// [tau_min, tau_max] where the fitted surfaces stop being valid.
constexpr double kTauMin = -18.83;
constexpr double kTauMax = 2.74;
constexpr double kTauStar = -1.61;
constexpr std::array<double, 3> kSmallP = {2.1659, 1.4412, 0.038269};
constexpr std::array<double, 4> kLargeP = {1.7339, 0.93202, -0.12745, -0.010368};

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / 1.4142135623730951); }

const CritSurface& surface(SigLevel level) {
    switch (level) {
    case SigLevel::Pct1: return kCritC1;
    case SigLevel::Pct5: return kCritC5;
    case SigLevel::Pct10: return kCritC10;
    }
    return kCritC5;
}

} // namespace

double CriticalValues::at(SigLevel level) const noexcept {
    switch (level) {
    case SigLevel::Pct1: return cv1;
    case SigLevel::Pct5: return cv5;
    case SigLevel::Pct10: return cv10;
    }
    return cv5;
}

double detail::mackinnon_crit_unchecked(SigLevel level, std::size_t nobs) {
    const CritSurface& s = surface(level);
    const double n = static_cast<double>(nobs);
    return s.b0 + s.b1 / n + s.b2 / (n * n) + s.b3 / (n * n * n);
}

double mackinnon_crit(SigLevel level, std::size_t nobs) {
    if (nobs < 20)
        fail(Errc::TooFewObs, "critical-value surface needs nobs >= 20, got " +
                                  std::to_string(nobs));
    return detail::mackinnon_crit_unchecked(level, nobs);
}

double mackinnon_pvalue(double tau) {
    if (!std::isfinite(tau)) fail(Errc::NonFinite, "mackinnon_pvalue: tau is not finite");
    if (tau < kTauMin) return 0.0;
    if (tau > kTauMax) return 1.0;
    double z;
    if (tau <= kTauStar) {
        z = kSmallP[0] + kSmallP[1] * tau + kSmallP[2] * tau * tau;
    } else {
        z = kLargeP[0] + tau * (kLargeP[1] + tau * (kLargeP[2] + tau * kLargeP[3]));
    }
    return std::clamp(std_normal_cdf(z), 0.0, 1.0);
}

} // namespace gridts
