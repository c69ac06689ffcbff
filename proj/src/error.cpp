#include "gridts/error.hpp"

namespace gridts {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::EmptySeries: return "EmptySeries";
    case Errc::NonFinite: return "NonFinite";
    case Errc::BadLength: return "BadLength";
    case Errc::FinerTarget: return "FinerTarget";
    case Errc::UndefinedPrefix: return "UndefinedPrefix";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::WindowTooLarge: return "WindowTooLarge";
    case Errc::BadAlpha: return "BadAlpha";
    case Errc::NonpositiveValue: return "NonpositiveValue";
    case Errc::TooShort: return "TooShort";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::ZeroRss: return "ZeroRss";
    case Errc::TooFewObs: return "TooFewObs";
    case Errc::DegenerateSeries: return "DegenerateSeries";
    case Errc::ParseError: return "ParseError";
    case Errc::GapError: return "GapError";
    case Errc::DuplicateTimestamp: return "DuplicateTimestamp";
    case Errc::UnknownZone: return "UnknownZone";
    case Errc::IoError: return "IoError";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::BadConfig: return "BadConfig";
    }
    return "UnknownError";
}

} // namespace gridts
