#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace postlie {

/// Exact rational coefficient; gmp keeps it in lowest terms with positive
/// denominator after every arithmetic operation.
using Coefficient = mpq_class;

inline Coefficient coef(std::int64_t n, std::int64_t d = 1) {
  Coefficient q(static_cast<long>(n), static_cast<long>(d));
  q.canonicalize();
  return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Coefficient& c) { return c.get_str(); }

/// Accepts "p" or "p/q" with optional leading sign; throws std::invalid_argument.
Coefficient parse_coefficient(std::string_view text);

}  // namespace postlie
