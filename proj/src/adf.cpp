#include "gridts/adf.hpp"

#include <Eigen/Dense>
#include <cassert>
#include <cmath>
#include <limits>

#include "gridts/error.hpp"
#include "mackinnon_internal.hpp"

namespace gridts {

const char* verdict_name(Verdict v) noexcept {
    return v == Verdict::Stationary ? "Stationary" : "NonStationary";
}

int default_maxlag(std::size_t defined_len) {
    const double n = static_cast<double>(defined_len);
    // Schwert's rule of thumb, then clip so the widest candidate design
    // keeps N - maxlag - 1 >= maxlag + 5 rows.
    const int schwert = static_cast<int>(std::ceil(12.0 * std::pow(n / 100.0, 0.25)));
    if (defined_len < 7) fail(Errc::TooShort, "series too short for any lag search");
    const int cap = static_cast<int>((defined_len - 6) / 2);
    return std::max(0, std::min(schwert, cap));
}

double aic(const OlsFit& fit, AicVariant variant) {
    if (fit.rss <= 0.0) fail(Errc::ZeroRss, "aic: perfect fit has no finite criterion");
    const double m = static_cast<double>(fit.nobs);
    const double k = static_cast<double>(fit.coef.size());
    const double mse = fit.rss / m;
    if (variant == AicVariant::Standard) return m * std::log(mse) + 2.0 * k;
    return -2.0 * std::log(mse) + 2.0 * k;
}

namespace {

/// AIC of a candidate from its residual sum of squares on m common rows.
double aic_from_rss(double rss, std::size_t m, std::size_t k, AicVariant variant) {
    const double mse = rss / static_cast<double>(m);
    const double penalty = 2.0 * static_cast<double>(k);
    if (variant == AicVariant::Standard)
        return static_cast<double>(m) * std::log(mse) + penalty;
    return -2.0 * std::log(mse) + penalty;
}

/// Candidate scan for the lag search. All lags 0..maxlag are scored on the
/// same maxlag-trimmed sample so their criteria are comparable. Columns are
/// arranged [const, y_{t-1}, dy_{t-1}, ..., dy_{t-maxlag}]; the candidate
/// with p lags spans the first p+2, so one Householder factorization yields
/// every candidate's residual sum of squares as a suffix sum of Q'y.
std::vector<double> candidate_aics(const TimeSeries& s, int maxlag, AicVariant variant) {
    const auto y = s.defined();
    const auto N = static_cast<std::size_t>(y.size());
    const auto lags = static_cast<std::size_t>(maxlag);
    const std::size_t m = N - lags - 1;
    const std::size_t K = lags + 2;

    Eigen::MatrixXd A(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(K));
    Eigen::VectorXd b(static_cast<Eigen::Index>(m));
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t t = lags + 1 + r;
        const auto ri = static_cast<Eigen::Index>(r);
        b(ri) = y[t] - y[t - 1];
        A(ri, 0) = 1.0;
        A(ri, 1) = y[t - 1];
        for (std::size_t j = 1; j <= lags; ++j)
            A(ri, static_cast<Eigen::Index>(j + 1)) = y[t - j] - y[t - j - 1];
    }

    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    const Eigen::VectorXd c = qr.householderQ().transpose() * b;
    const Eigen::VectorXd rdiag =
        qr.matrixQR().diagonal().head(static_cast<Eigen::Index>(K)).cwiseAbs();
    const double diag_tol =
        rdiag.maxCoeff() * static_cast<double>(m) * std::numeric_limits<double>::epsilon();
    if (rdiag(0) <= diag_tol || rdiag(1) <= diag_tol)
        fail(Errc::DegenerateSeries, "level and constant columns are collinear");

    // rss for the candidate spanning the first j columns is sum_{i>=j} c_i^2.
    std::vector<double> suffix(m + 1, 0.0);
    for (std::size_t i = m; i-- > 0;)
        suffix[i] = suffix[i + 1] + c(static_cast<Eigen::Index>(i)) * c(static_cast<Eigen::Index>(i));

    std::vector<double> aics(lags + 1);
    for (std::size_t p = 0; p <= lags; ++p) {
        const double rss = suffix[p + 2];
        if (rss <= 0.0) fail(Errc::DegenerateSeries, "perfect fit during lag search");
        aics[p] = aic_from_rss(rss, m, p + 2, variant);
    }
    return aics;
}

AdfResult finish(const TimeSeries& s, int p, std::vector<double> trace) {
    OlsFit fit;
    try {
        const AdfDesign design = build_adf_design(s, p);
        fit = ols_fit(design.X, design.targets);
    } catch (const Error& e) {
        if (e.code() == Errc::RankDeficient)
            fail(Errc::DegenerateSeries, std::string("test regression is degenerate (") +
                                             e.what() + ")");
        throw;
    }

    AdfResult r;
    r.statistic = fit.tstat[0];
    if (!std::isfinite(r.statistic))
        fail(Errc::DegenerateSeries, "test statistic is undefined (perfect fit)");
    r.lags_used = p;
    r.nobs = fit.nobs;
    assert(r.nobs + static_cast<std::size_t>(p) + 1 == s.defined_len());
    r.critical.cv1 = detail::mackinnon_crit_unchecked(SigLevel::Pct1, r.nobs);
    r.critical.cv5 = detail::mackinnon_crit_unchecked(SigLevel::Pct5, r.nobs);
    r.critical.cv10 = detail::mackinnon_crit_unchecked(SigLevel::Pct10, r.nobs);
    r.pvalue = mackinnon_pvalue(r.statistic);
    if (trace.empty()) trace.push_back(aic(fit, AicVariant::Standard));
    r.aic_trace = std::move(trace);
    return r;
}

} // namespace

AdfResult adf_test(const TimeSeries& s, const AdfConfig& cfg) {
    const std::size_t N = s.defined_len();
    if (!(cfg.significance > 0.0 && cfg.significance < 1.0))
        fail(Errc::BadConfig, "significance must be in (0, 1)");

    if (cfg.fixed_lag) {
        const int p = *cfg.fixed_lag;
        if (p < 0) fail(Errc::BadConfig, "fixed lag must be >= 0");
        if (cfg.maxlag && p > *cfg.maxlag)
            fail(Errc::BadConfig, "fixed lag exceeds maxlag");
        return finish(s, p, {});
    }

    int maxlag;
    if (cfg.maxlag) {
        maxlag = *cfg.maxlag;
        if (maxlag < 0) fail(Errc::BadConfig, "maxlag must be >= 0");
        if (N < static_cast<std::size_t>(2 * maxlag + 6))
            fail(Errc::TooShort, "need N - maxlag - 1 >= maxlag + 5 for the lag search");
    } else {
        maxlag = default_maxlag(N);
    }

    std::vector<double> trace = candidate_aics(s, maxlag, cfg.aic_variant);
    int best = 0;
    for (int p = 1; p <= maxlag; ++p)
        if (trace[static_cast<std::size_t>(p)] < trace[static_cast<std::size_t>(best)]) best = p;

    // Refit the winner on its own maximal sample; statistic, p-value and
    // critical values all come from the refit.
    return finish(s, best, std::move(trace));
}

AdfResult df_test(const TimeSeries& s) {
    if (s.defined_len() < 10) fail(Errc::TooShort, "df_test: need at least 10 defined values");
    AdfConfig cfg;
    cfg.fixed_lag = 0;
    return adf_test(s, cfg);
}

Verdict verdict(const AdfResult& r, double alpha) {
    return r.pvalue < alpha ? Verdict::Stationary : Verdict::NonStationary;
}

} // namespace gridts
