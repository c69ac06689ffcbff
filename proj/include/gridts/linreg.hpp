#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gridts/series.hpp"

namespace gridts {

/// Dense row-major design matrix with named columns.
struct DesignMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; ///< rows*cols, row-major
    std::vector<std::string> col_names;

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static DesignMatrix zeros(std::size_t rows, std::size_t cols);
};

/// Least-squares fit result.
struct OlsFit {
    std::vector<double> coef;
    std::vector<double> stderr_; ///< sqrt(sigma2 * diag((X'X)^-1))
    std::vector<double> tstat;   ///< coef / stderr (NaN where stderr is 0)
    std::vector<double> residuals;
    double rss = 0.0;
    double sigma2 = 0.0; ///< rss / (m - k)
    std::size_t nobs = 0;
    std::size_t df_resid = 0;
    std::size_t rank = 0;
};

/// Minimizes ||y - X b||^2 via Householder QR with column pivoting; standard
/// errors come from the triangular factor, never from forming (X'X)^-1 by
/// normal equations. Errors: ShapeMismatch (|y| != rows or rows <= cols),
/// RankDeficient (numerical rank < cols; the message reports the rank),
/// NonFinite.
OlsFit ols_fit(const DesignMatrix& X, const std::vector<double>& y);

/// Regression sample for a unit-root test with p lagged differences.
/// Targets are dy_t for t = p+2..N over the defined values; columns are
/// [y_{t-1}, dy_{t-1}, ..., dy_{t-p}, const], so the test statistic is
/// always tstat[0]. m = N - p - 1 rows, k = p + 2 columns.
struct AdfDesign {
    DesignMatrix X;
    std::vector<double> targets;
};

/// Errors: BadLength (p < 0), TooShort (needs N - p - 1 > p + 2).
AdfDesign build_adf_design(const TimeSeries& s, int p);

} // namespace gridts
