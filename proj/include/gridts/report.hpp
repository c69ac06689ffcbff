#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gridts/adf.hpp"
#include "gridts/dataset.hpp"
#include "gridts/rolling.hpp"
#include "gridts/transforms.hpp"

namespace gridts {

/// One line of a per-zone results table.
struct ReportRow {
    std::string zone;
    std::string series_label; ///< e.g. "Removed MA RT Price"
    double statistic = 0.0;
    double pvalue = 1.0;
    int lags_used = 0;
    std::size_t nobs = 0;
    double cv1 = 0.0;
    double cv5 = 0.0;
    double cv10 = 0.0;
    Verdict verdict = Verdict::NonStationary;
};

/// A (zone, series, transform) combination that could not be tested; the
/// batch never aborts on one bad series.
struct SkippedRow {
    std::string zone;
    std::string series_label;
    std::string reason;
};

struct ReportTable {
    std::string zone;
    std::vector<ReportRow> rows;
    std::vector<SkippedRow> skipped;
};

enum class ReportFormat { Csv, Json, Markdown };

ReportFormat parse_report_format(const std::string& text);

struct ReportConfig {
    Horizon horizon = Horizon::Daily;
    std::vector<TransformKind> transforms; ///< empty -> default_transforms()
    AdfConfig adf;
    RollingConfig rolling; ///< window/alpha used to build default transforms
    int threads = 1;       ///< zones are processed in parallel when > 1
};

/// The seven standard report transforms: Identity, Log, RemoveMA(n),
/// RemoveEWMA(alpha), Diff(1), Diff(2), RemoveLogMA(n).
std::vector<TransformKind> default_transforms(const RollingConfig& rolling);

/// Runs zone x market x variable x transform through the unit-root test at
/// the configured horizon. Per-series failures become SkippedRow entries;
/// log transforms retry with LogPolicy::DropNonpositive (warning on stderr)
/// before being skipped. Tables come back sorted by zone, rows and skips by
/// label, so results are byte-deterministic at any thread count.
/// Errors: EmptyDataset.
std::vector<ReportTable> run_report(const ZoneDataset& d, const ReportConfig& cfg);

/// Renders one table. CSV columns follow ReportRow field order; skipped
/// combinations appear with empty numeric fields and the reason in the
/// verdict column. Markdown titles the table "<ZONE> DATA".
/// Errors: IoError.
void emit(const ReportTable& table, ReportFormat format, const std::string& path);

std::string render(const ReportTable& table, ReportFormat format);

/// Wide CSV (time,value,ma,ewma,mstd) for external plotting; undefined
/// cells are empty. Errors: IoError plus the rolling-op errors.
void export_plot_series(const TimeSeries& s, const RollingConfig& rolling, const std::string& path);

struct AnomalyFlag {
    Timestamp timestamp{};
    std::string zone;
    std::string series_label;
    double zscore = 0.0;
    double threshold = 0.0;
};

/// Rolling z-score detector. The baseline window for point t is the n
/// points before t (the current point is excluded so a spike cannot mask
/// itself); a flag is emitted when |z| > threshold and the window spread is
/// nonzero. Errors: TooShort (defined length <= n), WindowTooSmall.
std::vector<AnomalyFlag> flag_anomalies(const TimeSeries& s, std::size_t window, double threshold = 4.0);

} // namespace gridts
