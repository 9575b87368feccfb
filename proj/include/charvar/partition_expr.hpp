#pragma once

#include "charvar/partitions.hpp"

#include <string_view>

namespace charvar {

/// Parses exponent notation for a partition of n:
///
///     PARTITION := PART (SPACE PART)*
///     PART      := INT ("^" INT)?
///
/// so "1^2 2" is [1^2 2]. Repeated part sizes accumulate. Throws
/// SyntaxError, ZeroPart (part size or exponent 0) or SumMismatch.
Partition parse_partition(std::string_view text, unsigned n);

}  // namespace charvar
