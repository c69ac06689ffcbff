#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gridts/adf.hpp"
#include "gridts/dataset.hpp"
#include "gridts/error.hpp"
#include "gridts/report.hpp"
#include "gridts/rolling.hpp"
#include "gridts/series.hpp"
#include "gridts/transforms.hpp"

namespace {

using namespace gridts;

std::string slug(const std::string& zone) {
    std::string out = zone;
    for (char& c : out)
        if (c == ' ' || c == '/') c = '_';
    return out;
}

const char* format_ext(ReportFormat f) {
    switch (f) {
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
    case ReportFormat::Markdown: return "md";
    }
    return "txt";
}

struct SeriesArgs {
    std::string zone;
    std::string market = "rt";
    std::string variable = "price";
    std::string horizon = "hourly";
};

void add_series_options(CLI::App* cmd, SeriesArgs& args) {
    cmd->add_option("--zone", args.zone, "Zone name")->required();
    cmd->add_option("--market", args.market, "Market: da|rt")->capture_default_str();
    cmd->add_option("--variable", args.variable, "Variable: demand|price")->capture_default_str();
    cmd->add_option("--horizon", args.horizon, "Resample to: hourly|daily|weekly|monthly")
        ->capture_default_str();
}

TimeSeries load_series(const std::string& csv, const SeriesArgs& args) {
    const ZoneDataset d = load_csv(csv);
    TimeSeries s = extract_series(d, args.zone, parse_variable(args.variable),
                                  parse_market(args.market));
    return resample(s, parse_horizon(args.horizon));
}

int run_validate(const std::string& csv) {
    const ZoneDataset d = load_csv(csv);
    std::cout << "rows: " << d.validation.total_rows << "\n";
    for (const auto& [zone, count] : d.validation.rows_per_zone)
        std::cout << "zone " << zone << ": " << count << " rows\n";
    if (!d.validation.unknown_zones.empty()) {
        std::cout << "unknown zones:";
        for (const auto& z : d.validation.unknown_zones) std::cout << " " << z;
        std::cout << "\n";
    }
    std::cout << "OK: hourly-contiguous, no duplicates\n";
    return 0;
}

void print_adf_result(const AdfResult& r, double significance) {
    std::printf("statistic: %.10g\n", r.statistic);
    std::printf("pvalue: %.10g\n", r.pvalue);
    std::printf("lags_used: %d\n", r.lags_used);
    std::printf("nobs: %zu\n", r.nobs);
    std::printf("cv1: %.10g\n", r.critical.cv1);
    std::printf("cv5: %.10g\n", r.critical.cv5);
    std::printf("cv10: %.10g\n", r.critical.cv10);
    std::printf("verdict: %s\n", verdict_name(verdict(r, significance)));
}

} // namespace

int main(int argc, char** argv) {
    using namespace gridts;

    CLI::App app{"Stationarity analysis for electricity-market time series"};
    app.require_subcommand(1);

    // validate
    std::string validate_csv;
    auto* validate_cmd = app.add_subcommand("validate", "Check a dataset CSV for schema, gaps and duplicates");
    validate_cmd->add_option("csv", validate_csv, "Dataset CSV path")->required();

    // report
    std::string report_csv, report_out;
    std::string report_horizon = "daily", report_format = "md", report_aic = "standard";
    std::size_t report_window = 30;
    double report_alpha = 0.05, report_significance = 0.05;
    std::optional<int> report_maxlag;
    int report_threads = 1;
    auto* report_cmd = app.add_subcommand("report", "Run the full zone x series x transform table");
    report_cmd->add_option("csv", report_csv, "Dataset CSV path")->required();
    report_cmd->add_option("--horizon", report_horizon, "hourly|daily|weekly|monthly")
        ->capture_default_str();
    report_cmd->add_option("--format", report_format, "csv|json|md")->capture_default_str();
    report_cmd->add_option("--out", report_out, "Output directory")->required();
    report_cmd->add_option("--maxlag", report_maxlag, "Lag-search ceiling (default: Schwert rule)");
    report_cmd->add_option("--alpha", report_alpha, "EWMA smoothing factor for the transform set")
        ->capture_default_str();
    report_cmd->add_option("--window", report_window, "Moving-average window for the transform set")
        ->capture_default_str();
    report_cmd->add_option("--aic", report_aic, "Criterion variant: standard|paper")
        ->capture_default_str();
    report_cmd->add_option("--significance", report_significance, "Verdict significance level")
        ->capture_default_str();
    report_cmd->add_option("--threads", report_threads, "Zone-level parallelism")
        ->capture_default_str();

    // adf
    std::string adf_csv, adf_transform = "identity";
    SeriesArgs adf_series;
    std::size_t adf_window = 30;
    double adf_alpha = 0.05, adf_significance = 0.05;
    std::string adf_aic = "standard";
    std::optional<int> adf_maxlag, adf_fixed_lag;
    auto* adf_cmd = app.add_subcommand("adf", "Unit-root test for one series");
    adf_cmd->add_option("csv", adf_csv, "Dataset CSV path")->required();
    add_series_options(adf_cmd, adf_series);
    adf_cmd->add_option("--transform", adf_transform,
                        "identity|log|remove-ma|remove-ewma|remove-log-ma|diff1|diff2")
        ->capture_default_str();
    adf_cmd->add_option("--window", adf_window, "Window for remove-ma / remove-log-ma")
        ->capture_default_str();
    adf_cmd->add_option("--alpha", adf_alpha, "Alpha for remove-ewma")->capture_default_str();
    adf_cmd->add_option("--maxlag", adf_maxlag, "Lag-search ceiling (default: Schwert rule)");
    adf_cmd->add_option("--fixed-lag", adf_fixed_lag, "Skip the search and use exactly this lag");
    adf_cmd->add_option("--aic", adf_aic, "standard|paper")->capture_default_str();
    adf_cmd->add_option("--significance", adf_significance, "Verdict significance level")
        ->capture_default_str();

    // plot-data
    std::string plot_csv, plot_out;
    SeriesArgs plot_series;
    std::size_t plot_window = 30;
    double plot_alpha = 0.05;
    auto* plot_cmd = app.add_subcommand("plot-data", "Export value/MA/EWMA/Mstd columns for plotting");
    plot_cmd->add_option("csv", plot_csv, "Dataset CSV path")->required();
    add_series_options(plot_cmd, plot_series);
    plot_cmd->add_option("--out", plot_out, "Output CSV path")->required();
    plot_cmd->add_option("--window", plot_window, "Rolling window")->capture_default_str();
    plot_cmd->add_option("--alpha", plot_alpha, "EWMA alpha")->capture_default_str();

    // anomaly
    std::string anomaly_csv, anomaly_out;
    SeriesArgs anomaly_series;
    std::size_t anomaly_window = 30;
    double anomaly_threshold = 4.0;
    auto* anomaly_cmd = app.add_subcommand("anomaly", "Flag points far from their trailing baseline");
    anomaly_cmd->add_option("csv", anomaly_csv, "Dataset CSV path")->required();
    add_series_options(anomaly_cmd, anomaly_series);
    anomaly_cmd->add_option("--window", anomaly_window, "Baseline window (excludes current point)")
        ->capture_default_str();
    anomaly_cmd->add_option("--threshold", anomaly_threshold, "Flag when |z| exceeds this")
        ->capture_default_str();
    anomaly_cmd->add_option("--out", anomaly_out, "Optional output file (default: stdout)");

    // synth
    std::string synth_kind = "ar1", synth_out;
    std::size_t synth_n = 24 * 1797;
    std::uint64_t synth_seed = 1;
    std::vector<std::string> synth_zones;
    double synth_phi = 0.3, synth_alpha0 = 0.0, synth_drift = 0.0, synth_beta = 0.01;
    double synth_noise = 1.0, synth_demand_offset = 12000.0, synth_price_offset = 40.0;
    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic dataset CSV");
    synth_cmd->add_option("--kind", synth_kind, "rw|ar1|trend")->capture_default_str();
    synth_cmd->add_option("--n", synth_n, "Hourly samples per series")->capture_default_str();
    synth_cmd->add_option("--seed", synth_seed, "Base seed")->capture_default_str();
    synth_cmd->add_option("--out", synth_out, "Output CSV path")->required();
    synth_cmd->add_option("--zones", synth_zones,
                          "Zone names, or 'all' for the nine standard zones (default: synthetic)");
    synth_cmd->add_option("--phi", synth_phi, "AR(1) coefficient")->capture_default_str();
    synth_cmd->add_option("--alpha0", synth_alpha0, "AR(1) intercept")->capture_default_str();
    synth_cmd->add_option("--drift", synth_drift, "Random-walk drift")->capture_default_str();
    synth_cmd->add_option("--beta", synth_beta, "Trend slope")->capture_default_str();
    synth_cmd->add_option("--noise-sd", synth_noise, "Noise standard deviation")
        ->capture_default_str();
    synth_cmd->add_option("--demand-offset", synth_demand_offset, "Level added to demand columns")
        ->capture_default_str();
    synth_cmd->add_option("--price-offset", synth_price_offset, "Level added to price columns")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate_cmd) return run_validate(validate_csv);

        if (*report_cmd) {
            ReportConfig cfg;
            cfg.horizon = parse_horizon(report_horizon);
            cfg.rolling.window = report_window;
            cfg.rolling.alpha = report_alpha;
            cfg.adf.maxlag = report_maxlag;
            cfg.adf.significance = report_significance;
            cfg.adf.aic_variant =
                report_aic == "paper" ? AicVariant::AsPrinted : AicVariant::Standard;
            cfg.threads = report_threads;
            const ReportFormat format = parse_report_format(report_format);

            const ZoneDataset d = load_csv(report_csv);
            const auto tables = run_report(d, cfg);
            std::filesystem::create_directories(report_out);
            for (const ReportTable& t : tables) {
                const std::string path =
                    report_out + "/" + slug(t.zone) + "." + format_ext(format);
                emit(t, format, path);
                std::cout << "wrote " << path << " (" << t.rows.size() << " rows, "
                          << t.skipped.size() << " skipped)\n";
            }
            return 0;
        }

        if (*adf_cmd) {
            TimeSeries s = load_series(adf_csv, adf_series);
            const TransformKind kind = TransformKind::parse(adf_transform, adf_window, adf_alpha);
            TimeSeries transformed;
            try {
                transformed = apply(s, kind, LogPolicy::Strict);
            } catch (const Error& e) {
                if (e.code() != Errc::NonpositiveValue) throw;
                std::cerr << "warning: nonpositive values, dropping to positive suffix\n";
                transformed = apply(s, kind, LogPolicy::DropNonpositive);
            }
            AdfConfig cfg;
            cfg.maxlag = adf_maxlag;
            cfg.fixed_lag = adf_fixed_lag;
            cfg.significance = adf_significance;
            cfg.aic_variant = adf_aic == "paper" ? AicVariant::AsPrinted : AicVariant::Standard;
            const AdfResult r = adf_test(drop_undefined_prefix(transformed), cfg);
            std::printf("zone: %s\n", adf_series.zone.c_str());
            std::printf("series: %s\n", transformed.meta().display_label().c_str());
            print_adf_result(r, cfg.significance);
            return 0;
        }

        if (*plot_cmd) {
            TimeSeries s = load_series(plot_csv, plot_series);
            RollingConfig rolling{plot_window, plot_alpha};
            export_plot_series(s, rolling, plot_out);
            std::cout << "wrote " << plot_out << "\n";
            return 0;
        }

        if (*anomaly_cmd) {
            TimeSeries s = load_series(anomaly_csv, anomaly_series);
            const auto flags = flag_anomalies(s, anomaly_window, anomaly_threshold);
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!anomaly_out.empty()) {
                file.open(anomaly_out, std::ios::binary);
                if (!file) fail(Errc::IoError, "cannot write '" + anomaly_out + "'");
                out = &file;
            }
            *out << "timestamp,zone,series_label,zscore,threshold\n";
            char buf[64];
            for (const AnomalyFlag& f : flags) {
                std::snprintf(buf, sizeof(buf), "%.6g,%.6g", f.zscore, f.threshold);
                *out << format_timestamp(f.timestamp) << ',' << f.zone << ',' << f.series_label
                     << ',' << buf << '\n';
            }
            std::cerr << flags.size() << " flag(s)\n";
            return 0;
        }

        if (*synth_cmd) {
            SynthSpec spec;
            if (synth_kind == "rw")
                spec.kind = SynthSpec::Kind::RandomWalk;
            else if (synth_kind == "ar1")
                spec.kind = SynthSpec::Kind::Ar1;
            else if (synth_kind == "trend")
                spec.kind = SynthSpec::Kind::Trend;
            else
                fail(Errc::BadConfig, "unknown synth kind '" + synth_kind + "'");
            spec.n = synth_n;
            spec.seed = synth_seed;
            if (!synth_zones.empty()) {
                if (synth_zones.size() == 1 && synth_zones[0] == "all")
                    spec.zones.assign(kKnownZones.begin(), kKnownZones.end());
                else
                    spec.zones = synth_zones;
            }
            spec.phi = synth_phi;
            spec.alpha0 = synth_alpha0;
            spec.drift = synth_drift;
            spec.beta = synth_beta;
            spec.noise_sd = synth_noise;
            spec.demand_offset = synth_demand_offset;
            spec.price_offset = synth_price_offset;
            write_fixture(make_synthetic_dataset(spec), synth_out);
            std::cout << "wrote " << synth_out << "\n";
            return 0;
        }
    } catch (const gridts::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::BadConfig ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
