#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace maxclass {

/// Exact arbitrary-precision integer for subgroup orders and solution counts
/// (2^{2^n+n-1} at the configured cap n = 6 exceeds 64 bits).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace maxclass
