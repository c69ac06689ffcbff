#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gridts/timeutil.hpp"

namespace gridts {

enum class Variable { Demand, Price };
enum class Market { DayAhead, RealTime };

const char* variable_name(Variable v) noexcept;
const char* market_name(Market m) noexcept;
Variable parse_variable(const std::string& text);
Market parse_market(const std::string& text);

struct SeriesMeta {
    std::string zone;                 ///< operational zone name, or "synthetic"
    Variable variable = Variable::Price;
    Market market = Market::RealTime;
    Horizon horizon = Horizon::Hourly;
    std::string transform_label;      ///< empty for raw series

    /// Display label in the report-row style, e.g. "RT Price" or
    /// "Removed MA RT Price".
    std::string display_label() const;
};

/// Uniformly sampled series. Rolling and differencing operations have no
/// output for their first few points; those entries are "undefined" and are
/// only ever a leading prefix, so the defined part is always contiguous.
/// Internally the series stores the prefix length plus the defined values,
/// which makes the prefix invariant structural.
class TimeSeries {
public:
    TimeSeries() = default;
    TimeSeries(Timestamp start, Horizon step, std::size_t undefined_prefix,
               std::vector<double> defined_values, SeriesMeta meta);

    std::size_t size() const noexcept { return lead_ + values_.size(); }
    std::size_t undefined_prefix() const noexcept { return lead_; }
    std::size_t defined_len() const noexcept { return values_.size(); }

    /// Defined values only (indices undefined_prefix()..size()-1).
    std::span<const double> defined() const noexcept { return values_; }

    bool is_defined(std::size_t index) const noexcept { return index >= lead_ && index < size(); }

    /// Value at a global index; index must be defined.
    double at(std::size_t index) const;

    Timestamp start_time() const noexcept { return start_; }
    Horizon step() const noexcept { return step_; }
    Timestamp time_at(std::size_t index) const { return advance(start_, step_, static_cast<std::int64_t>(index)); }

    const SeriesMeta& meta() const noexcept { return meta_; }
    SeriesMeta& meta() noexcept { return meta_; }

    /// Copy with `suffix` appended to the transform label ("a" -> "a|b").
    TimeSeries with_label(const std::string& suffix) const;

private:
    Timestamp start_{};
    Horizon step_ = Horizon::Hourly;
    std::size_t lead_ = 0;
    std::vector<double> values_;
    SeriesMeta meta_;
};

/// Validated constructor for raw (fully defined) series.
/// Errors: EmptySeries, NonFinite.
TimeSeries make_series(std::vector<double> values, SeriesMeta meta, Timestamp start, Horizon step);

/// Mean-aggregates into calendar buckets of the target horizon (day =
/// calendar day UTC, week = ISO week, month = calendar month). The target
/// must not be finer than the source step; resampling to the same horizon
/// is the identity. Requires an empty undefined prefix.
/// Errors: FinerTarget, UndefinedPrefix.
TimeSeries resample(const TimeSeries& s, Horizon target);

/// Strips the undefined prefix, advancing start_time accordingly.
/// Errors: EmptySeries if nothing is defined.
TimeSeries drop_undefined_prefix(const TimeSeries& s);

/// y_t = alpha0 + beta*t + eps_t for t = 1..n, eps ~ N(0, noise_sd^2).
/// Errors: BadLength if n < 2.
TimeSeries gen_trend(std::size_t n, double alpha0, double beta, double noise_sd, std::uint64_t seed);

/// First-order autoregression y_t = alpha0 + phi*y_{t-1} + eps_t, started
/// at the stationary mean alpha0/(1-phi) when |phi| < 1 (at 0 otherwise)
/// so there is no warm-up transient.
/// Errors: BadLength if n < 2.
TimeSeries gen_ar1(std::size_t n, double alpha0, double phi, double noise_sd, std::uint64_t seed);

/// Random walk with drift: gen_ar1 with phi = 1.
TimeSeries gen_random_walk(std::size_t n, double drift, double noise_sd, std::uint64_t seed);

/// Metadata used by the generators (zone "synthetic", daily step).
SeriesMeta synthetic_meta();

} // namespace gridts
