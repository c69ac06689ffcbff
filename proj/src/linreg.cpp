#include "gridts/linreg.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "gridts/error.hpp"

namespace gridts {

DesignMatrix DesignMatrix::zeros(std::size_t rows, std::size_t cols) {
    DesignMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.data.assign(rows * cols, 0.0);
    m.col_names.assign(cols, "");
    return m;
}

OlsFit ols_fit(const DesignMatrix& X, const std::vector<double>& y) {
    const std::size_t m = X.rows;
    const std::size_t k = X.cols;
    if (y.size() != m)
        fail(Errc::ShapeMismatch, "ols_fit: " + std::to_string(m) + " rows vs " +
                                      std::to_string(y.size()) + " targets");
    if (k == 0 || m <= k)
        fail(Errc::ShapeMismatch, "ols_fit: need more rows than columns (" + std::to_string(m) +
                                      "x" + std::to_string(k) + ")");
    for (double v : X.data)
        if (!std::isfinite(v)) fail(Errc::NonFinite, "ols_fit: non-finite design entry");
    for (double v : y)
        if (!std::isfinite(v)) fail(Errc::NonFinite, "ols_fit: non-finite target");

    Eigen::MatrixXd A(m, k);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < k; ++c) A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = X.at(r, c);
    const Eigen::Map<const Eigen::VectorXd> b(y.data(), static_cast<Eigen::Index>(m));

    // Column-pivoted Householder QR: stable on the near-collinear designs a
    // unit-root regression produces, and the rank check falls out of it.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    const std::size_t rank = static_cast<std::size_t>(qr.rank());
    if (rank < k)
        fail(Errc::RankDeficient, "design has rank " + std::to_string(rank) + " < " +
                                      std::to_string(k) + " columns");

    const Eigen::VectorXd coef = qr.solve(b);
    const Eigen::VectorXd resid = b - A * coef;
    const double rss = resid.squaredNorm();
    const double sigma2 = rss / static_cast<double>(m - k);

    // X*P = Q*R  =>  (X'X)^-1 = P R^-1 R^-T P'.
    const Eigen::MatrixXd R =
        qr.matrixR().topLeftCorner(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k))
            .template triangularView<Eigen::Upper>();
    const Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(
        Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));
    const Eigen::MatrixXd xtx_inv =
        qr.colsPermutation() * (Rinv * Rinv.transpose()) * qr.colsPermutation().transpose();

    OlsFit fit;
    fit.nobs = m;
    fit.df_resid = m - k;
    fit.rank = rank;
    fit.rss = rss;
    fit.sigma2 = sigma2;
    fit.coef.resize(k);
    fit.stderr_.resize(k);
    fit.tstat.resize(k);
    fit.residuals.assign(resid.data(), resid.data() + m);
    for (std::size_t j = 0; j < k; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        fit.coef[j] = coef(jj);
        fit.stderr_[j] = std::sqrt(sigma2 * xtx_inv(jj, jj));
        fit.tstat[j] = fit.stderr_[j] > 0.0 ? fit.coef[j] / fit.stderr_[j]
                                            : std::numeric_limits<double>::quiet_NaN();
    }
    return fit;
}

AdfDesign build_adf_design(const TimeSeries& s, int p) {
    if (p < 0) fail(Errc::BadLength, "lag count must be >= 0");
    const auto y = s.defined();
    const std::size_t N = y.size();
    const std::size_t lags = static_cast<std::size_t>(p);
    // m = N - p - 1 rows, k = p + 2 columns; require at least one residual df.
    if (N < lags + 2 || N - lags - 1 <= lags + 2)
        fail(Errc::TooShort, "series of defined length " + std::to_string(N) +
                                 " is too short for " + std::to_string(p) + " lags");

    const std::size_t m = N - lags - 1;
    const std::size_t k = lags + 2;
    AdfDesign d;
    d.X = DesignMatrix::zeros(m, k);
    d.X.col_names[0] = "y.lag1";
    for (std::size_t j = 1; j <= lags; ++j) d.X.col_names[j] = "dy.lag" + std::to_string(j);
    d.X.col_names[k - 1] = "const";
    d.targets.resize(m);

    // Row r corresponds to t = p + 1 + r in 0-based indexing of y.
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t t = lags + 1 + r;
        d.targets[r] = y[t] - y[t - 1];
        d.X.at(r, 0) = y[t - 1];
        for (std::size_t j = 1; j <= lags; ++j) d.X.at(r, j) = y[t - j] - y[t - j - 1];
        d.X.at(r, k - 1) = 1.0;
    }
    return d;
}

} // namespace gridts
