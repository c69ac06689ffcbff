#pragma once

#include <chrono>
#include <cstdint>
#include <string>

namespace gridts {

using Timestamp = std::chrono::sys_seconds;

/// Sampling interval of a series. Hour/Day/Week steps are fixed-width;
/// Month advances by calendar month.
enum class Horizon { Hourly, Daily, Weekly, Monthly };

const char* horizon_name(Horizon h) noexcept;

/// Parses "hourly|daily|weekly|monthly" (case-insensitive). Throws BadConfig.
Horizon parse_horizon(const std::string& text);

/// True if `a` is a strictly coarser sampling interval than `b`.
bool coarser_than(Horizon a, Horizon b) noexcept;

/// Timestamp of sample `index` for a series starting at `start` with the
/// given step. Monthly steps advance by calendar months.
Timestamp advance(Timestamp start, Horizon step, std::int64_t index);

/// Parses an ISO-8601 UTC timestamp of the form YYYY-MM-DDTHH:MM:SSZ.
/// Throws ParseError on malformed input.
Timestamp parse_timestamp(const std::string& text);

/// Formats as YYYY-MM-DDTHH:MM:SSZ.
std::string format_timestamp(Timestamp t);

/// Start of the calendar bucket containing `t`: midnight UTC for Daily,
/// the preceding Monday for Weekly (ISO weeks), the first of the month
/// for Monthly. Hourly truncates to the hour.
Timestamp bucket_start(Timestamp t, Horizon bucket);

} // namespace gridts
