#include "gridts/timeutil.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>

#include "gridts/error.hpp"

namespace gridts {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

int rank(Horizon h) noexcept {
    switch (h) {
    case Horizon::Hourly: return 0;
    case Horizon::Daily: return 1;
    case Horizon::Weekly: return 2;
    case Horizon::Monthly: return 3;
    }
    return 0;
}

bool parse_int(const char* first, const char* last, int& out) {
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

const char* horizon_name(Horizon h) noexcept {
    switch (h) {
    case Horizon::Hourly: return "hourly";
    case Horizon::Daily: return "daily";
    case Horizon::Weekly: return "weekly";
    case Horizon::Monthly: return "monthly";
    }
    return "?";
}

Horizon parse_horizon(const std::string& text) {
    const std::string t = lower(text);
    if (t == "hourly") return Horizon::Hourly;
    if (t == "daily") return Horizon::Daily;
    if (t == "weekly") return Horizon::Weekly;
    if (t == "monthly") return Horizon::Monthly;
    fail(Errc::BadConfig, "unknown horizon '" + text + "'");
}

bool coarser_than(Horizon a, Horizon b) noexcept { return rank(a) > rank(b); }

Timestamp advance(Timestamp start, Horizon step, std::int64_t index) {
    using namespace std::chrono;
    switch (step) {
    case Horizon::Hourly: return start + hours{index};
    case Horizon::Daily: return start + days{index};
    case Horizon::Weekly: return start + days{7 * index};
    case Horizon::Monthly: {
        const auto dp = floor<days>(start);
        const seconds tod = start - dp;
        year_month_day ymd{dp};
        year_month ym = ymd.year() / ymd.month();
        ym += months{index};
        // Clamp the day-of-month to what the target month actually has.
        const auto last = static_cast<unsigned>((ym.year() / ym.month() / std::chrono::last).day());
        const unsigned d = std::min(static_cast<unsigned>(ymd.day()), last);
        return sys_days{ym.year() / ym.month() / day{d}} + tod;
    }
    }
    return start;
}

Timestamp parse_timestamp(const std::string& text) {
    // YYYY-MM-DDTHH:MM:SSZ
    using namespace std::chrono;
    const char* s = text.c_str();
    const std::size_t n = text.size();
    const bool shape_ok = n == 20 && s[4] == '-' && s[7] == '-' && s[10] == 'T' && s[13] == ':' &&
                          s[16] == ':' && s[19] == 'Z';
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
    if (!shape_ok || !parse_int(s, s + 4, y) || !parse_int(s + 5, s + 7, mo) ||
        !parse_int(s + 8, s + 10, d) || !parse_int(s + 11, s + 13, h) ||
        !parse_int(s + 14, s + 16, mi) || !parse_int(s + 17, s + 19, sec)) {
        fail(Errc::ParseError, "bad timestamp '" + text + "' (want YYYY-MM-DDTHH:MM:SSZ)");
    }
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                             day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h > 23 || mi > 59 || sec > 59) {
        fail(Errc::ParseError, "invalid calendar time '" + text + "'");
    }
    return sys_days{ymd} + hours{h} + minutes{mi} + seconds{sec};
}

std::string format_timestamp(Timestamp t) {
    using namespace std::chrono;
    const auto dp = floor<days>(t);
    const year_month_day ymd{dp};
    const hh_mm_ss hms{t - dp};
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02ld:%02ld:%02ldZ", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()),
                  static_cast<long>(hms.hours().count()),
                  static_cast<long>(hms.minutes().count()),
                  static_cast<long>(hms.seconds().count()));
    return buf;
}

Timestamp bucket_start(Timestamp t, Horizon bucket) {
    using namespace std::chrono;
    const auto dp = floor<days>(t);
    switch (bucket) {
    case Horizon::Hourly: return floor<hours>(t);
    case Horizon::Daily: return dp;
    case Horizon::Weekly: {
        const weekday wd{dp};
        return dp - days{(wd - Monday).count()};
    }
    case Horizon::Monthly: {
        const year_month_day ymd{dp};
        return sys_days{ymd.year() / ymd.month() / 1};
    }
    }
    return t;
}

} // namespace gridts
