#pragma once

#include <cstddef>
#include <string>

#include "gridts/series.hpp"

namespace gridts {

/// How log-based transforms treat values <= 0. Strict raises; DropNonpositive
/// truncates the series to the longest all-positive suffix and reports how
/// many leading entries were cut.
enum class LogPolicy { Strict, DropNonpositive };

/// One stationarizing transformation with its parameters.
struct TransformKind {
    enum class Op { Identity, Log, RemoveMA, RemoveEWMA, RemoveLogMA, Diff };

    Op op = Op::Identity;
    std::size_t window = 30; ///< RemoveMA / RemoveLogMA
    double alpha = 0.05;     ///< RemoveEWMA
    int order = 1;           ///< Diff, 1 or 2

    static TransformKind identity() { return {}; }
    static TransformKind log() { return {Op::Log, 0, 0.0, 0}; }
    static TransformKind remove_ma(std::size_t n) { return {Op::RemoveMA, n, 0.0, 0}; }
    static TransformKind remove_ewma(double a) { return {Op::RemoveEWMA, 0, a, 0}; }
    static TransformKind remove_log_ma(std::size_t n) { return {Op::RemoveLogMA, n, 0.0, 0}; }
    static TransformKind diff(int order) { return {Op::Diff, 0, 0.0, order}; }

    /// Short machine label, e.g. "remove_ma(30)" or "diff(2)".
    std::string label() const;

    /// Report-row prefix: "", "Log", "Removed MA", "Removed Exp WMA",
    /// "Removed Log MA", "First Diff", "Second Diff".
    std::string display_prefix() const;

    /// Parses "identity|log|remove-ma|remove-ewma|remove-log-ma|diff1|diff2",
    /// taking window/alpha parameters from the arguments. Throws BadConfig.
    static TransformKind parse(const std::string& name, std::size_t window, double alpha);
};

/// Natural log elementwise. Errors: NonpositiveValue (Strict), EmptySeries
/// (nothing survives DropNonpositive), UndefinedPrefix. `dropped`, when
/// non-null, receives the number of truncated leading entries.
TimeSeries log_transform(const TimeSeries& s, LogPolicy policy, std::size_t* dropped = nullptr);

/// y_t - MA_t(n); first n-1 outputs undefined. Errors as moving_average.
TimeSeries remove_ma(const TimeSeries& s, std::size_t n);

/// y_t - EWMA_t(alpha); the first output is exactly 0. Errors as ewma.
TimeSeries remove_ewma(const TimeSeries& s, double alpha);

/// log(y_t) - log(MA_t(n)), with the moving average taken over the original
/// (policy-filtered) series. Errors: NonpositiveValue, WindowTooLarge,
/// EmptySeries, UndefinedPrefix.
TimeSeries remove_log_ma(const TimeSeries& s, std::size_t n, LogPolicy policy,
                         std::size_t* dropped = nullptr);

/// Order-1 or order-2 differencing; each order adds one undefined entry.
/// Errors: BadLength (order outside {1,2}), TooShort.
TimeSeries difference(const TimeSeries& s, int order);

/// Dispatches to the transform ops above. Errors propagate.
TimeSeries apply(const TimeSeries& s, const TransformKind& kind,
                 LogPolicy policy = LogPolicy::Strict);

} // namespace gridts
