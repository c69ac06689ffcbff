#pragma once

#include <cstddef>

#include "gridts/adf.hpp"

namespace gridts::detail {

/// Response-surface evaluation without the nobs >= 20 precondition; the
/// test driver uses it so very short series still get (extrapolated)
/// thresholds attached to their result.
double mackinnon_crit_unchecked(SigLevel level, std::size_t nobs);

} // namespace gridts::detail
