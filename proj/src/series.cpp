#include "gridts/series.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "gridts/error.hpp"
#include "gridts/rng.hpp"

namespace gridts {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

const char* variable_name(Variable v) noexcept {
    return v == Variable::Demand ? "Demand" : "Price";
}

const char* market_name(Market m) noexcept { return m == Market::DayAhead ? "DA" : "RT"; }

Variable parse_variable(const std::string& text) {
    const std::string t = lower(text);
    if (t == "demand") return Variable::Demand;
    if (t == "price") return Variable::Price;
    fail(Errc::BadConfig, "unknown variable '" + text + "' (want demand|price)");
}

Market parse_market(const std::string& text) {
    const std::string t = lower(text);
    if (t == "da" || t == "dayahead" || t == "day-ahead") return Market::DayAhead;
    if (t == "rt" || t == "realtime" || t == "real-time") return Market::RealTime;
    fail(Errc::BadConfig, "unknown market '" + text + "' (want da|rt)");
}

std::string SeriesMeta::display_label() const {
    std::string base = std::string(market_name(market)) + " " + variable_name(variable);
    if (transform_label.empty()) return base;
    return transform_label + " " + base;
}

TimeSeries::TimeSeries(Timestamp start, Horizon step, std::size_t undefined_prefix,
                       std::vector<double> defined_values, SeriesMeta meta)
    : start_(start), step_(step), lead_(undefined_prefix), values_(std::move(defined_values)),
      meta_(std::move(meta)) {
    if (values_.empty() && lead_ == 0) fail(Errc::EmptySeries, "series has no values");
}

double TimeSeries::at(std::size_t index) const {
    if (!is_defined(index)) fail(Errc::UndefinedPrefix, "value at index is undefined");
    return values_[index - lead_];
}

TimeSeries TimeSeries::with_label(const std::string& suffix) const {
    TimeSeries out = *this;
    if (out.meta_.transform_label.empty())
        out.meta_.transform_label = suffix;
    else
        out.meta_.transform_label += "|" + suffix;
    return out;
}

TimeSeries make_series(std::vector<double> values, SeriesMeta meta, Timestamp start, Horizon step) {
    if (values.empty()) fail(Errc::EmptySeries, "make_series: empty input");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            fail(Errc::NonFinite, "make_series: value at index " + std::to_string(i) +
                                      " is not finite");
    }
    meta.horizon = step;
    return TimeSeries(start, step, 0, std::move(values), std::move(meta));
}

TimeSeries resample(const TimeSeries& s, Horizon target) {
    if (s.undefined_prefix() != 0)
        fail(Errc::UndefinedPrefix, "resample: drop the undefined prefix first");
    if (target == s.step()) return s;
    if (!coarser_than(target, s.step()))
        fail(Errc::FinerTarget, std::string("cannot resample ") + horizon_name(s.step()) +
                                    " to " + horizon_name(target));

    const auto vals = s.defined();
    std::vector<double> out;
    Timestamp first_bucket{};
    Timestamp cur_key{};
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const Timestamp key = bucket_start(s.time_at(i), target);
        if (count == 0) {
            first_bucket = key;
            cur_key = key;
        } else if (key != cur_key) {
            out.push_back(sum / static_cast<double>(count));
            sum = 0.0;
            count = 0;
            cur_key = key;
        }
        sum += vals[i];
        ++count;
    }
    out.push_back(sum / static_cast<double>(count));

    SeriesMeta meta = s.meta();
    meta.horizon = target;
    return TimeSeries(first_bucket, target, 0, std::move(out), std::move(meta));
}

TimeSeries drop_undefined_prefix(const TimeSeries& s) {
    if (s.defined_len() == 0) fail(Errc::EmptySeries, "series is entirely undefined");
    if (s.undefined_prefix() == 0) return s;
    const auto vals = s.defined();
    const Timestamp start = s.time_at(s.undefined_prefix());
    return TimeSeries(start, s.step(), 0, std::vector<double>(vals.begin(), vals.end()), s.meta());
}

SeriesMeta synthetic_meta() {
    SeriesMeta meta;
    meta.zone = "synthetic";
    meta.variable = Variable::Price;
    meta.market = Market::RealTime;
    meta.horizon = Horizon::Daily;
    return meta;
}

namespace {

constexpr std::chrono::sys_days kSyntheticStart = std::chrono::sys_days{
    std::chrono::year{2015} / 1 / 1};

TimeSeries wrap_synthetic(std::vector<double> values) {
    return TimeSeries(kSyntheticStart, Horizon::Daily, 0, std::move(values), synthetic_meta());
}

} // namespace

TimeSeries gen_trend(std::size_t n, double alpha0, double beta, double noise_sd,
                     std::uint64_t seed) {
    if (n < 2) fail(Errc::BadLength, "gen_trend: need n >= 2");
    Rng rng(seed);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i + 1);
        const double eps = noise_sd > 0.0 ? noise_sd * rng.normal() : 0.0;
        values[i] = alpha0 + beta * t + eps;
    }
    return wrap_synthetic(std::move(values));
}

TimeSeries gen_ar1(std::size_t n, double alpha0, double phi, double noise_sd, std::uint64_t seed) {
    if (n < 2) fail(Errc::BadLength, "gen_ar1: need n >= 2");
    Rng rng(seed);
    std::vector<double> values(n);
    values[0] = std::abs(phi) < 1.0 ? alpha0 / (1.0 - phi) : 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double eps = noise_sd > 0.0 ? noise_sd * rng.normal() : 0.0;
        values[i] = alpha0 + phi * values[i - 1] + eps;
    }
    return wrap_synthetic(std::move(values));
}

TimeSeries gen_random_walk(std::size_t n, double drift, double noise_sd, std::uint64_t seed) {
    return gen_ar1(n, drift, 1.0, noise_sd, seed);
}

} // namespace gridts
