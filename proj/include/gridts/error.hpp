#pragma once

#include <stdexcept>
#include <string>

namespace gridts {

/// Error categories surfaced by the library. Each maps to one failure
/// condition documented on the operation that raises it.
enum class Errc {
    EmptySeries,
    NonFinite,
    BadLength,
    FinerTarget,
    UndefinedPrefix,
    WindowTooSmall,
    WindowTooLarge,
    BadAlpha,
    NonpositiveValue,
    TooShort,
    ShapeMismatch,
    RankDeficient,
    ZeroRss,
    TooFewObs,
    DegenerateSeries,
    ParseError,
    GapError,
    DuplicateTimestamp,
    UnknownZone,
    IoError,
    EmptyDataset,
    BadConfig,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace gridts
