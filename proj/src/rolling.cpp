#include "gridts/rolling.hpp"

#include <cmath>
#include <string>

#include "gridts/error.hpp"

namespace gridts {

namespace {

void require_fully_defined(const TimeSeries& s, const char* op) {
    if (s.undefined_prefix() != 0)
        fail(Errc::UndefinedPrefix, std::string(op) + ": input has an undefined prefix");
}

void require_window(const TimeSeries& s, std::size_t n, std::size_t min_n, const char* op) {
    if (n < min_n)
        fail(Errc::WindowTooSmall,
             std::string(op) + ": window " + std::to_string(n) + " < " + std::to_string(min_n));
    if (n > s.defined_len())
        fail(Errc::WindowTooLarge, std::string(op) + ": window " + std::to_string(n) +
                                       " exceeds series length " + std::to_string(s.defined_len()));
}

} // namespace

void RollingConfig::validate() const {
    if (window < 2) fail(Errc::WindowTooSmall, "rolling window must be >= 2");
    if (!(alpha > 0.0 && alpha <= 1.0)) fail(Errc::BadAlpha, "alpha must be in (0, 1]");
}

TimeSeries moving_average(const TimeSeries& s, std::size_t n) {
    require_fully_defined(s, "moving_average");
    require_window(s, n, 1, "moving_average");

    const auto y = s.defined();
    std::vector<double> out(y.size() - n + 1);
    for (std::size_t t = n - 1; t < y.size(); ++t) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += y[t - i];
        out[t - (n - 1)] = sum / static_cast<double>(n);
    }
    TimeSeries result(s.start_time(), s.step(), n - 1, std::move(out), s.meta());
    return result.with_label("ma(" + std::to_string(n) + ")");
}

TimeSeries moving_std(const TimeSeries& s, std::size_t n) {
    require_fully_defined(s, "moving_std");
    require_window(s, n, 2, "moving_std");

    const auto y = s.defined();
    std::vector<double> out(y.size() - n + 1);
    for (std::size_t t = n - 1; t < y.size(); ++t) {
        // Two-pass sample variance. An all-equal window short-circuits to
        // exactly zero, which the mean/subtract path cannot guarantee in
        // floating point.
        bool all_equal = true;
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sum += y[t - i];
            if (y[t - i] != y[t]) all_equal = false;
        }
        if (all_equal) {
            out[t - (n - 1)] = 0.0;
            continue;
        }
        const double mean = sum / static_cast<double>(n);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = y[t - i] - mean;
            ss += d * d;
        }
        out[t - (n - 1)] = std::sqrt(ss / static_cast<double>(n - 1));
    }
    TimeSeries result(s.start_time(), s.step(), n - 1, std::move(out), s.meta());
    return result.with_label("mstd(" + std::to_string(n) + ")");
}

TimeSeries ewma(const TimeSeries& s, double alpha) {
    require_fully_defined(s, "ewma");
    if (!(alpha > 0.0 && alpha <= 1.0)) fail(Errc::BadAlpha, "ewma: alpha must be in (0, 1]");

    const auto y = s.defined();
    std::vector<double> out(y.size());
    out[0] = y[0];
    for (std::size_t t = 1; t < y.size(); ++t) out[t] = alpha * y[t] + (1.0 - alpha) * out[t - 1];
    TimeSeries result(s.start_time(), s.step(), 0, std::move(out), s.meta());
    return result.with_label("ewma(" + std::to_string(alpha) + ")");
}

} // namespace gridts
