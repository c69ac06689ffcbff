#include "gridts/transforms.hpp"

#include <cmath>
#include <cstdio>

#include "gridts/error.hpp"
#include "gridts/rolling.hpp"

namespace gridts {

std::string TransformKind::label() const {
    char buf[48];
    switch (op) {
    case Op::Identity: return "identity";
    case Op::Log: return "log";
    case Op::RemoveMA:
        std::snprintf(buf, sizeof(buf), "remove_ma(%zu)", window);
        return buf;
    case Op::RemoveEWMA:
        std::snprintf(buf, sizeof(buf), "remove_ewma(%g)", alpha);
        return buf;
    case Op::RemoveLogMA:
        std::snprintf(buf, sizeof(buf), "remove_log_ma(%zu)", window);
        return buf;
    case Op::Diff:
        std::snprintf(buf, sizeof(buf), "diff(%d)", order);
        return buf;
    }
    return "?";
}

std::string TransformKind::display_prefix() const {
    switch (op) {
    case Op::Identity: return "";
    case Op::Log: return "Log";
    case Op::RemoveMA: return "Removed MA";
    case Op::RemoveEWMA: return "Removed Exp WMA";
    case Op::RemoveLogMA: return "Removed Log MA";
    case Op::Diff: return order == 1 ? "First Diff" : "Second Diff";
    }
    return "?";
}

TransformKind TransformKind::parse(const std::string& name, std::size_t window, double alpha) {
    if (name == "identity") return identity();
    if (name == "log") return log();
    if (name == "remove-ma") return remove_ma(window);
    if (name == "remove-ewma") return remove_ewma(alpha);
    if (name == "remove-log-ma") return remove_log_ma(window);
    if (name == "diff1") return diff(1);
    if (name == "diff2") return diff(2);
    fail(Errc::BadConfig, "unknown transform '" + name + "'");
}

namespace {

void require_fully_defined(const TimeSeries& s, const char* op) {
    if (s.undefined_prefix() != 0)
        fail(Errc::UndefinedPrefix, std::string(op) + ": input has an undefined prefix");
}

/// Longest all-positive suffix of `s` under the given policy; Strict raises
/// on the first nonpositive value instead.
TimeSeries positive_suffix(const TimeSeries& s, LogPolicy policy, std::size_t* dropped) {
    const auto y = s.defined();
    std::size_t first_ok = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] <= 0.0) {
            if (policy == LogPolicy::Strict)
                fail(Errc::NonpositiveValue, "log of nonpositive value " + std::to_string(y[i]) +
                                                 " at index " + std::to_string(i));
            first_ok = i + 1;
        }
    }
    if (dropped) *dropped = first_ok;
    if (first_ok == 0) return s;
    if (first_ok == y.size())
        fail(Errc::EmptySeries, "no positive suffix remains after drop-nonpositive");
    std::vector<double> vals(y.begin() + static_cast<std::ptrdiff_t>(first_ok), y.end());
    return TimeSeries(s.time_at(first_ok), s.step(), 0, std::move(vals), s.meta());
}

} // namespace

TimeSeries log_transform(const TimeSeries& s, LogPolicy policy, std::size_t* dropped) {
    require_fully_defined(s, "log_transform");
    std::size_t cut = 0;
    TimeSeries base = positive_suffix(s, policy, &cut);
    if (dropped) *dropped = cut;

    std::vector<double> out(base.defined().begin(), base.defined().end());
    for (double& v : out) v = std::log(v);
    TimeSeries result(base.start_time(), base.step(), 0, std::move(out), base.meta());
    return result.with_label(cut == 0 ? "log" : "log[dropped=" + std::to_string(cut) + "]");
}

TimeSeries remove_ma(const TimeSeries& s, std::size_t n) {
    require_fully_defined(s, "remove_ma");
    const TimeSeries ma = moving_average(s, n);
    const auto y = s.defined();
    const auto m = ma.defined();
    std::vector<double> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = y[i + (n - 1)] - m[i];
    TimeSeries result(s.start_time(), s.step(), n - 1, std::move(out), s.meta());
    return result.with_label("remove_ma(" + std::to_string(n) + ")");
}

TimeSeries remove_ewma(const TimeSeries& s, double alpha) {
    require_fully_defined(s, "remove_ewma");
    const TimeSeries sm = ewma(s, alpha);
    const auto y = s.defined();
    const auto m = sm.defined();
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] - m[i];
    TimeSeries result(s.start_time(), s.step(), 0, std::move(out), s.meta());
    return result.with_label("remove_ewma(" + std::to_string(alpha) + ")");
}

TimeSeries remove_log_ma(const TimeSeries& s, std::size_t n, LogPolicy policy,
                         std::size_t* dropped) {
    require_fully_defined(s, "remove_log_ma");
    std::size_t cut = 0;
    TimeSeries base = positive_suffix(s, policy, &cut);
    if (dropped) *dropped = cut;

    // The average of positive values is positive, so the second log is safe.
    const TimeSeries ma = moving_average(base, n);
    const auto y = base.defined();
    const auto m = ma.defined();
    std::vector<double> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = std::log(y[i + (n - 1)]) - std::log(m[i]);
    TimeSeries result(base.start_time(), base.step(), n - 1, std::move(out), base.meta());
    return result.with_label("remove_log_ma(" + std::to_string(n) + ")");
}

TimeSeries difference(const TimeSeries& s, int order) {
    if (order != 1 && order != 2) fail(Errc::BadLength, "difference order must be 1 or 2");
    if (s.defined_len() <= static_cast<std::size_t>(order))
        fail(Errc::TooShort, "difference: need defined length > order");

    auto diff_once = [](const TimeSeries& in) {
        const auto y = in.defined();
        std::vector<double> out(y.size() - 1);
        for (std::size_t i = 1; i < y.size(); ++i) out[i - 1] = y[i] - y[i - 1];
        return TimeSeries(in.start_time(), in.step(), in.undefined_prefix() + 1, std::move(out),
                          in.meta());
    };

    TimeSeries result = diff_once(s);
    if (order == 2) result = diff_once(result);
    return result.with_label("diff(" + std::to_string(order) + ")");
}

TimeSeries apply(const TimeSeries& s, const TransformKind& kind, LogPolicy policy) {
    switch (kind.op) {
    case TransformKind::Op::Identity: return s;
    case TransformKind::Op::Log: return log_transform(s, policy);
    case TransformKind::Op::RemoveMA: return remove_ma(s, kind.window);
    case TransformKind::Op::RemoveEWMA: return remove_ewma(s, kind.alpha);
    case TransformKind::Op::RemoveLogMA: return remove_log_ma(s, kind.window, policy);
    case TransformKind::Op::Diff: return difference(s, kind.order);
    }
    fail(Errc::BadConfig, "unhandled transform kind");
}

} // namespace gridts
