#include "gridts/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gridts/error.hpp"

namespace gridts {

const std::array<std::string, 9> kKnownZones = {
    "ISONE CA", "Portland", "Burlington", "Bridgeport", "Providence",
    "SEMASS",   "Worcester", "Concord",   "Boston",
};

namespace {

constexpr std::chrono::seconds kHour{3600};

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& reason) {
    fail(Errc::ParseError,
         "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason);
}

double parse_value(const std::string& field, std::size_t line, std::size_t column) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = first + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) parse_fail(line, column, "bad number '" + field + "'");
    if (!std::isfinite(v)) parse_fail(line, column, "non-finite value '" + field + "'");
    return v;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

bool known_zone(const std::string& zone) {
    return std::find(kKnownZones.begin(), kKnownZones.end(), zone) != kKnownZones.end();
}

} // namespace

ZoneDataset load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::IoError, "cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) fail(Errc::ParseError, "line 1, column 1: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader)
        parse_fail(1, 1, "header must be exactly '" + std::string(kCsvHeader) + "'");

    ZoneDataset d;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 6)
            parse_fail(lineno, 1, "expected 6 fields, got " + std::to_string(fields.size()));

        ZoneRecord rec;
        try {
            rec.timestamp = parse_timestamp(fields[0]);
        } catch (const Error&) {
            parse_fail(lineno, 1, "bad timestamp '" + fields[0] + "'");
        }
        const std::string& zone = fields[1];
        if (zone.empty()) parse_fail(lineno, 2, "empty zone name");
        rec.da_demand = parse_value(fields[2], lineno, 3);
        rec.da_price = parse_value(fields[3], lineno, 4);
        rec.rt_demand = parse_value(fields[4], lineno, 5);
        rec.rt_price = parse_value(fields[5], lineno, 6);
        if (rec.da_demand < 0.0) parse_fail(lineno, 3, "negative demand");
        if (rec.rt_demand < 0.0) parse_fail(lineno, 5, "negative demand");

        d.zones[zone].push_back(rec);
        ++d.validation.total_rows;
    }

    for (auto& [zone, records] : d.zones) {
        std::sort(records.begin(), records.end(),
                  [](const ZoneRecord& a, const ZoneRecord& b) { return a.timestamp < b.timestamp; });
        for (std::size_t i = 1; i < records.size(); ++i) {
            const auto delta = records[i].timestamp - records[i - 1].timestamp;
            if (delta == std::chrono::seconds{0})
                fail(Errc::DuplicateTimestamp,
                     "zone " + zone + " repeats " + format_timestamp(records[i].timestamp));
            if (delta != kHour)
                fail(Errc::GapError, "zone " + zone + " missing " +
                                         format_timestamp(records[i - 1].timestamp + kHour));
        }
        d.validation.rows_per_zone[zone] = records.size();
        if (!known_zone(zone)) d.validation.unknown_zones.push_back(zone);
    }
    return d;
}

TimeSeries extract_series(const ZoneDataset& d, const std::string& zone, Variable variable,
                          Market market) {
    const auto it = d.zones.find(zone);
    if (it == d.zones.end()) fail(Errc::UnknownZone, "zone '" + zone + "' not in dataset");
    const auto& records = it->second;

    std::vector<double> values(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const ZoneRecord& r = records[i];
        if (market == Market::DayAhead)
            values[i] = variable == Variable::Demand ? r.da_demand : r.da_price;
        else
            values[i] = variable == Variable::Demand ? r.rt_demand : r.rt_price;
    }

    SeriesMeta meta;
    meta.zone = zone;
    meta.variable = variable;
    meta.market = market;
    return make_series(std::move(values), std::move(meta), records.front().timestamp,
                       Horizon::Hourly);
}

void write_fixture(const ZoneDataset& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoError, "cannot write '" + path + "'");
    out << kCsvHeader << '\n';
    char buf[512];
    for (const auto& [zone, records] : d.zones) {
        for (const ZoneRecord& r : records) {
            // 17 significant digits round-trips any finite double.
            std::snprintf(buf, sizeof(buf), "%s,%s,%.17g,%.17g,%.17g,%.17g\n",
                          format_timestamp(r.timestamp).c_str(), zone.c_str(), r.da_demand,
                          r.da_price, r.rt_demand, r.rt_price);
            out << buf;
        }
    }
    if (!out.good()) fail(Errc::IoError, "write failed for '" + path + "'");
}

namespace {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    // splitmix64 finalizer over (base, stream)
    std::uint64_t x = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::vector<double> synth_values(const SynthSpec& spec, std::uint64_t seed) {
    TimeSeries s = [&] {
        switch (spec.kind) {
        case SynthSpec::Kind::RandomWalk:
            return gen_random_walk(spec.n, spec.drift, spec.noise_sd, seed);
        case SynthSpec::Kind::Ar1:
            return gen_ar1(spec.n, spec.alpha0, spec.phi, spec.noise_sd, seed);
        case SynthSpec::Kind::Trend:
            return gen_trend(spec.n, 0.0, spec.beta, spec.noise_sd, seed);
        }
        fail(Errc::BadConfig, "unknown synthetic kind");
    }();
    return {s.defined().begin(), s.defined().end()};
}

} // namespace

ZoneDataset make_synthetic_dataset(const SynthSpec& spec) {
    if (spec.zones.empty()) fail(Errc::BadConfig, "need at least one zone");
    const Timestamp start = std::chrono::sys_days{std::chrono::year{2015} / 1 / 1};

    ZoneDataset d;
    for (std::size_t zi = 0; zi < spec.zones.size(); ++zi) {
        const auto da_demand = synth_values(spec, mix_seed(spec.seed, 4 * zi + 0));
        const auto da_price = synth_values(spec, mix_seed(spec.seed, 4 * zi + 1));
        const auto rt_demand = synth_values(spec, mix_seed(spec.seed, 4 * zi + 2));
        const auto rt_price = synth_values(spec, mix_seed(spec.seed, 4 * zi + 3));

        std::vector<ZoneRecord>& records = d.zones[spec.zones[zi]];
        records.resize(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) {
            records[i].timestamp = start + std::chrono::hours{static_cast<long>(i)};
            records[i].da_demand = spec.demand_offset + da_demand[i];
            records[i].da_price = spec.price_offset + da_price[i];
            records[i].rt_demand = spec.demand_offset + rt_demand[i];
            records[i].rt_price = spec.price_offset + rt_price[i];
        }
        d.validation.rows_per_zone[spec.zones[zi]] = spec.n;
        d.validation.total_rows += spec.n;
        if (!known_zone(spec.zones[zi])) d.validation.unknown_zones.push_back(spec.zones[zi]);
    }
    return d;
}

} // namespace gridts
