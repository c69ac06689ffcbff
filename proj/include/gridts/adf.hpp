#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gridts/linreg.hpp"
#include "gridts/series.hpp"

namespace gridts {

enum class SigLevel { Pct1, Pct5, Pct10 };

/// Which information criterion the lag search minimizes. Standard is
/// m*ln(rss/m) + 2k. AsPrinted is the -2*ln(rss/m) + 2k variant (no sample
/// size factor); it is anomalous -- minimizing it prefers the worse fit --
/// and is kept only so the behaviour can be reproduced and studied.
enum class AicVariant { Standard, AsPrinted };

struct AdfConfig {
    /// Largest candidate lag. Defaults to the Schwert rule
    /// ceil(12*(N/100)^(1/4)), clipped so the widest design still fits.
    std::optional<int> maxlag;

    /// When set, skips the AIC search and fits exactly this lag count.
    std::optional<int> fixed_lag;

    AicVariant aic_variant = AicVariant::Standard;

    /// Significance level for the verdict, in (0, 1).
    double significance = 0.05;
};

struct CriticalValues {
    double cv1 = 0.0;
    double cv5 = 0.0;
    double cv10 = 0.0;

    double at(SigLevel level) const noexcept;
};

struct AdfResult {
    double statistic = 0.0; ///< t-ratio of the lagged-level coefficient
    double pvalue = 1.0;
    int lags_used = 0;
    std::size_t nobs = 0; ///< regression rows; defined length - lags_used - 1
    CriticalValues critical;
    std::vector<double> aic_trace; ///< AIC per candidate lag 0..maxlag (AIC mode)

    bool reject_at(SigLevel level) const noexcept { return statistic < critical.at(level); }
};

enum class Verdict { Stationary, NonStationary };

const char* verdict_name(Verdict v) noexcept;

/// Schwert-style default lag ceiling: ceil(12*(N/100)^(1/4)), clipped so
/// that N - maxlag - 1 >= maxlag + 5 still holds. Errors: TooShort.
int default_maxlag(std::size_t defined_len);

/// Finite-sample critical value for the constant-only test regression,
/// from the published response surface b0 + b1/N + b2/N^2 + b3/N^3.
/// Errors: TooFewObs if nobs < 20.
double mackinnon_crit(SigLevel level, std::size_t nobs);

/// Approximate p-value for the constant-only test statistic: a published
/// piecewise polynomial in tau pushed through the standard normal CDF.
/// Monotone nondecreasing in tau, clamped to [0, 1].
double mackinnon_pvalue(double tau);

/// Information criterion of a fit; k counts all regressors including the
/// constant. Errors: ZeroRss on a perfect fit.
double aic(const OlsFit& fit, AicVariant variant);

/// Unit-root test. In AIC mode every candidate lag 0..maxlag is fitted on
/// the common sample implied by maxlag (so the criteria are comparable),
/// the minimizer is refit on its own maximal sample, and the statistic,
/// critical values and p-value come from the refit.
/// Errors: TooShort, DegenerateSeries, BadConfig.
AdfResult adf_test(const TimeSeries& s, const AdfConfig& cfg = {});

/// Plain test with no lagged differences; identical to adf_test with
/// fixed_lag = 0. Errors: TooShort (defined length < 10), DegenerateSeries.
AdfResult df_test(const TimeSeries& s);

/// Stationary iff pvalue < alpha (strict).
Verdict verdict(const AdfResult& r, double alpha);

} // namespace gridts
