#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace khoskein {

// Exact rational scalar used throughout. GMP keeps values canonical
// (reduced, positive denominator) after every operation.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Pivot-selection weight: total bit length of numerator and denominator.
inline std::size_t bit_size(const Rat& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

// Renders as "p" or "p/r".
inline std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace khoskein
