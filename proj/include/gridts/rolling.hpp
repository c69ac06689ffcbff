#pragma once

#include <cstddef>

#include "gridts/series.hpp"

namespace gridts {

/// Window / smoothing parameters shared by the rolling operations.
struct RollingConfig {
    std::size_t window = 30; ///< trailing window length, >= 2
    double alpha = 0.05;     ///< EWMA smoothing factor in (0, 1]

    /// Errors: WindowTooSmall, BadAlpha.
    void validate() const;
};

/// Trailing mean over the current point and the n-1 before it. The first
/// n-1 outputs are undefined. Errors: WindowTooSmall (n = 0),
/// WindowTooLarge, UndefinedPrefix.
TimeSeries moving_average(const TimeSeries& s, std::size_t n);

/// Trailing sample standard deviation (n-1 denominator) over the same
/// window as moving_average; requires n >= 2. A window of identical values
/// yields exactly 0. Errors: WindowTooSmall, WindowTooLarge, UndefinedPrefix.
TimeSeries moving_std(const TimeSeries& s, std::size_t n);

/// Exponentially weighted moving average, S_1 = y_1 and
/// S_t = alpha*y_t + (1-alpha)*S_{t-1}. No undefined prefix.
/// Errors: BadAlpha, UndefinedPrefix.
TimeSeries ewma(const TimeSeries& s, double alpha);

} // namespace gridts
