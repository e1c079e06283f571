#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pihall {

// Arbitrary-precision integer. Group orders are products of orbit lengths
// and can overflow any fixed width once degrees grow, so everything that
// holds an order uses this.
using Integer = mpz_class;

inline Integer to_integer(std::uint64_t v) {
  // mpz_class has no uint64 constructor on LLP64 systems; go through the
  // unsigned long path which is 64 bits everywhere we build.
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
  return Integer(static_cast<unsigned long>(v));
}

inline bool fits_u64(const Integer& v) {
  return v >= 0 && v.fits_ulong_p();
}

inline std::uint64_t to_u64(const Integer& v) {
  return static_cast<std::uint64_t>(v.get_ui());
}

}  // namespace pihall
