#include "gridts/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gridts/error.hpp"

namespace gridts {

ReportFormat parse_report_format(const std::string& text) {
    if (text == "csv") return ReportFormat::Csv;
    if (text == "json") return ReportFormat::Json;
    if (text == "md" || text == "markdown") return ReportFormat::Markdown;
    fail(Errc::BadConfig, "unknown format '" + text + "' (want csv|json|md)");
}

std::vector<TransformKind> default_transforms(const RollingConfig& rolling) {
    rolling.validate();
    return {
        TransformKind::identity(),
        TransformKind::log(),
        TransformKind::remove_ma(rolling.window),
        TransformKind::remove_ewma(rolling.alpha),
        TransformKind::diff(1),
        TransformKind::diff(2),
        TransformKind::remove_log_ma(rolling.window),
    };
}

namespace {

std::string row_label(const TransformKind& kind, const SeriesMeta& meta) {
    const std::string base = std::string(market_name(meta.market)) + " " +
                             variable_name(meta.variable);
    const std::string prefix = kind.display_prefix();
    return prefix.empty() ? base : prefix + " " + base;
}

std::string sanitize(std::string text) {
    std::replace(text.begin(), text.end(), ',', ';');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

ReportTable report_zone(const ZoneDataset& d, const std::string& zone, const ReportConfig& cfg,
                        const std::vector<TransformKind>& transforms) {
    ReportTable table;
    table.zone = zone;

    for (Market market : {Market::DayAhead, Market::RealTime}) {
        for (Variable variable : {Variable::Demand, Variable::Price}) {
            TimeSeries base = extract_series(d, zone, variable, market);
            std::string resample_failure;
            try {
                base = resample(base, cfg.horizon);
            } catch (const Error& e) {
                resample_failure = e.what();
            }
            for (const TransformKind& kind : transforms) {
                const std::string label = row_label(kind, base.meta());
                if (!resample_failure.empty()) {
                    table.skipped.push_back({zone, label, resample_failure});
                    continue;
                }
                try {
                    TimeSeries transformed;
                    try {
                        transformed = apply(base, kind, LogPolicy::Strict);
                    } catch (const Error& e) {
                        if (e.code() != Errc::NonpositiveValue) throw;
                        std::cerr << "warning: " << zone << " " << label
                                  << ": nonpositive values, dropping to positive suffix\n";
                        transformed = apply(base, kind, LogPolicy::DropNonpositive);
                    }
                    const TimeSeries sample = drop_undefined_prefix(transformed);
                    const AdfResult res = adf_test(sample, cfg.adf);

                    ReportRow row;
                    row.zone = zone;
                    row.series_label = label;
                    row.statistic = res.statistic;
                    row.pvalue = res.pvalue;
                    row.lags_used = res.lags_used;
                    row.nobs = res.nobs;
                    row.cv1 = res.critical.cv1;
                    row.cv5 = res.critical.cv5;
                    row.cv10 = res.critical.cv10;
                    row.verdict = verdict(res, cfg.adf.significance);
                    table.rows.push_back(std::move(row));
                } catch (const Error& e) {
                    table.skipped.push_back({zone, label, e.what()});
                }
            }
        }
    }

    std::sort(table.rows.begin(), table.rows.end(),
              [](const ReportRow& a, const ReportRow& b) { return a.series_label < b.series_label; });
    std::sort(table.skipped.begin(), table.skipped.end(), [](const SkippedRow& a, const SkippedRow& b) {
        return a.series_label < b.series_label;
    });
    return table;
}

} // namespace

std::vector<ReportTable> run_report(const ZoneDataset& d, const ReportConfig& cfg) {
    if (d.zones.empty()) fail(Errc::EmptyDataset, "dataset has no zones");
    const std::vector<TransformKind> transforms =
        cfg.transforms.empty() ? default_transforms(cfg.rolling) : cfg.transforms;

    std::vector<std::string> zones;
    zones.reserve(d.zones.size());
    for (const auto& [zone, records] : d.zones) zones.push_back(zone);

    std::vector<ReportTable> tables(zones.size());
    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < zones.size(); ++i)
            tables[i] = report_zone(d, zones[i], cfg, transforms);
    } else {
        // Zones are independent; results land in slots indexed by zone, so
        // scheduling order cannot change the output.
        std::vector<std::future<void>> work;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t) {
            work.push_back(std::async(std::launch::async, [&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= zones.size()) return;
                    tables[i] = report_zone(d, zones[i], cfg, transforms);
                }
            }));
        }
        for (auto& f : work) f.get();
    }
    return tables;
}

namespace {

std::string fmt(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string render_csv(const ReportTable& table) {
    std::ostringstream out;
    out << "zone,series_label,statistic,pvalue,lags_used,nobs,cv1,cv5,cv10,verdict\n";
    for (const ReportRow& r : table.rows) {
        out << r.zone << ',' << r.series_label << ',' << fmt(r.statistic, "%.10g") << ','
            << fmt(r.pvalue, "%.6g") << ',' << r.lags_used << ',' << r.nobs << ','
            << fmt(r.cv1, "%.10g") << ',' << fmt(r.cv5, "%.10g") << ',' << fmt(r.cv10, "%.10g")
            << ',' << verdict_name(r.verdict) << '\n';
    }
    for (const SkippedRow& s : table.skipped) {
        out << s.zone << ',' << s.series_label << ",,,,,,,,skipped(" << sanitize(s.reason)
            << ")\n";
    }
    return out.str();
}

std::string render_json(const ReportTable& table) {
    nlohmann::ordered_json j;
    j["zone"] = table.zone;
    j["rows"] = nlohmann::ordered_json::array();
    for (const ReportRow& r : table.rows) {
        j["rows"].push_back({{"zone", r.zone},
                             {"series_label", r.series_label},
                             {"statistic", r.statistic},
                             {"pvalue", r.pvalue},
                             {"lags_used", r.lags_used},
                             {"nobs", r.nobs},
                             {"cv1", r.cv1},
                             {"cv5", r.cv5},
                             {"cv10", r.cv10},
                             {"verdict", verdict_name(r.verdict)}});
    }
    j["skipped"] = nlohmann::ordered_json::array();
    for (const SkippedRow& s : table.skipped)
        j["skipped"].push_back({{"series_label", s.series_label}, {"reason", s.reason}});
    return j.dump(2) + "\n";
}

std::string render_markdown(const ReportTable& table) {
    std::ostringstream out;
    out << "# " << table.zone << " DATA\n\n";
    out << "| Series | Test Statistic | P-Value | #Lags Used | Observations | CV (1%) | CV (5%) "
           "| CV (10%) | Verdict |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const ReportRow& r : table.rows) {
        out << "| " << r.series_label << " | " << fmt(r.statistic, "%.10g") << " | "
            << fmt(r.pvalue, "%.6g") << " | " << r.lags_used << " | " << r.nobs << " | "
            << fmt(r.cv1, "%.10g") << " | " << fmt(r.cv5, "%.10g") << " | "
            << fmt(r.cv10, "%.10g") << " | " << verdict_name(r.verdict) << " |\n";
    }
    if (!table.skipped.empty()) {
        out << "\nSkipped:\n";
        for (const SkippedRow& s : table.skipped)
            out << "- " << s.series_label << ": " << s.reason << "\n";
    }
    return out.str();
}

} // namespace

std::string render(const ReportTable& table, ReportFormat format) {
    switch (format) {
    case ReportFormat::Csv: return render_csv(table);
    case ReportFormat::Json: return render_json(table);
    case ReportFormat::Markdown: return render_markdown(table);
    }
    fail(Errc::BadConfig, "unhandled report format");
}

void emit(const ReportTable& table, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoError, "cannot write '" + path + "'");
    out << render(table, format);
    if (!out.good()) fail(Errc::IoError, "write failed for '" + path + "'");
}

void export_plot_series(const TimeSeries& s, const RollingConfig& rolling,
                        const std::string& path) {
    rolling.validate();
    const TimeSeries ma = moving_average(s, rolling.window);
    const TimeSeries mstd = moving_std(s, rolling.window);
    const TimeSeries smooth = ewma(s, rolling.alpha);

    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoError, "cannot write '" + path + "'");
    out << "time,value,ma,ewma,mstd\n";
    auto cell = [](const TimeSeries& t, std::size_t i) {
        return t.is_defined(i) ? fmt(t.at(i), "%.17g") : std::string();
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << format_timestamp(s.time_at(i)) << ',' << cell(s, i) << ',' << cell(ma, i) << ','
            << cell(smooth, i) << ',' << cell(mstd, i) << '\n';
    }
    if (!out.good()) fail(Errc::IoError, "write failed for '" + path + "'");
}

std::vector<AnomalyFlag> flag_anomalies(const TimeSeries& s, std::size_t window,
                                        double threshold) {
    if (window < 2) fail(Errc::WindowTooSmall, "anomaly window must be >= 2");
    const auto y = s.defined();
    if (y.size() <= window)
        fail(Errc::TooShort, "need more than " + std::to_string(window) + " defined values");

    std::vector<AnomalyFlag> flags;
    for (std::size_t t = window; t < y.size(); ++t) {
        // Baseline excludes y[t] so a spike cannot inflate its own window.
        double sum = 0.0;
        for (std::size_t i = 1; i <= window; ++i) sum += y[t - i];
        const double mean = sum / static_cast<double>(window);
        double ss = 0.0;
        for (std::size_t i = 1; i <= window; ++i) {
            const double d = y[t - i] - mean;
            ss += d * d;
        }
        const double sd = std::sqrt(ss / static_cast<double>(window - 1));
        if (sd <= 0.0) continue;
        const double z = (y[t] - mean) / sd;
        if (std::abs(z) > threshold) {
            flags.push_back({s.time_at(s.undefined_prefix() + t), s.meta().zone,
                             s.meta().display_label(), z, threshold});
        }
    }
    return flags;
}

} // namespace gridts
