#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gridts/series.hpp"

namespace gridts {

/// One hourly observation for a zone: both markets, both variables.
struct ZoneRecord {
    Timestamp timestamp{};
    double da_demand = 0.0;
    double da_price = 0.0;
    double rt_demand = 0.0;
    double rt_price = 0.0;
};

/// The nine operational zone names the reports expect.
extern const std::array<std::string, 9> kKnownZones;

struct ValidationReport {
    std::size_t total_rows = 0;
    std::map<std::string, std::size_t> rows_per_zone;
    std::vector<std::string> unknown_zones; ///< present but not in kKnownZones
};

/// Hourly records per zone, sorted and gap-checked on load.
struct ZoneDataset {
    std::map<std::string, std::vector<ZoneRecord>> zones;
    ValidationReport validation;

    bool has_zone(const std::string& zone) const { return zones.count(zone) != 0; }
};

/// CSV schema (bit-exact): header
///   timestamp,zone,da_demand,da_price,rt_demand,rt_price
/// with ISO-8601 UTC timestamps (YYYY-MM-DDTHH:00:00Z), plain decimal
/// numbers, UTF-8, LF line endings.
inline constexpr const char* kCsvHeader = "timestamp,zone,da_demand,da_price,rt_demand,rt_price";

/// Loads and validates a dataset CSV. Rows may arrive out of order (they
/// are sorted per zone), but duplicates and hourly gaps are errors, as are
/// non-finite values and negative demands.
/// Errors: IoError, ParseError(line, column, reason), DuplicateTimestamp,
/// GapError (names the first missing hour).
ZoneDataset load_csv(const std::string& path);

/// Hourly series for one (zone, variable, market) column, with metadata
/// fully populated. Errors: UnknownZone.
TimeSeries extract_series(const ZoneDataset& d, const std::string& zone, Variable variable,
                          Market market);

/// Serializes back to the same CSV schema; load_csv(write_fixture(d))
/// reproduces the dataset bit-exactly (values are written with 17
/// significant digits). Errors: IoError.
void write_fixture(const ZoneDataset& d, const std::string& path);

/// Parameters for the synthetic fixture generator used by tests and the
/// `synth` CLI subcommand.
struct SynthSpec {
    enum class Kind { RandomWalk, Ar1, Trend };

    Kind kind = Kind::Ar1;
    std::size_t n = 24 * 1797; ///< hourly samples per series
    std::uint64_t seed = 1;
    std::vector<std::string> zones = {"synthetic"};

    double phi = 0.3;        ///< Ar1
    double alpha0 = 0.0;     ///< Ar1 intercept
    double drift = 0.0;      ///< RandomWalk
    double beta = 0.01;      ///< Trend slope
    double noise_sd = 1.0;

    /// Level offsets keep demand columns positive and price columns
    /// realistic; a location shift does not change stationarity.
    double demand_offset = 12000.0;
    double price_offset = 40.0;
};

/// Builds an hourly dataset with four independent series per zone, each
/// from its own deterministic sub-seed. Errors: BadLength, BadConfig.
ZoneDataset make_synthetic_dataset(const SynthSpec& spec);

} // namespace gridts
