#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace superroot {

// Exact rational scalar. All arithmetic in the library is exact; any
// tolerance-based comparison is a bug.
using Scalar = mpq_class;

// Canonical text form "p" or "p/q" with q > 0 and gcd(p,q) = 1.
inline std::string scalar_to_string(const Scalar& x) {
  return x.get_str();
}

inline Scalar scalar_from_string(const std::string& s) {
  try {
    Scalar x(s);
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline int sign(const Scalar& x) { return sgn(x); }

}  // namespace superroot
