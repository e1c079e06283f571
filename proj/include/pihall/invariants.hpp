#pragma once

#include <cstdint>
#include <vector>

#include "pihall/perm_group.hpp"
#include "pihall/primes.hpp"
#include "pihall/rational.hpp"
#include "pihall/structure.hpp"

namespace pihall {

// True when the order of x involves only primes from pi; the identity is a
// pi-element for every pi.
bool is_pi_element(const Perm& x, const PrimeSet& pi);

// Number of conjugacy classes consisting of pi-elements. The identity
// class always counts, so the result is at least 1.
std::uint64_t k_pi(const PermGroup& g, const PrimeSet& pi,
                   std::uint64_t cap = kDefaultElementCap);
std::uint64_t k_pi(const std::vector<ConjClass>& classes, const PrimeSet& pi);

// k_pi(g) divided by the pi-part of |g|.
Rational d_pi(const PermGroup& g, const PrimeSet& pi,
              std::uint64_t cap = kDefaultElementCap);

// Probability that two uniformly random elements commute, which equals the
// class count divided by the group order.
Rational commuting_probability(const PermGroup& g,
                               std::uint64_t cap = kDefaultElementCap);

// g(p, x) = (x + p^2 - 1) / (p^2 x) for x >= 1; decreasing in x, with
// value 1 at x = 1 and 1/p at x = p + 1.
Rational g_p(std::uint64_t p, const Integer& x);

// f(p) = g(p, n(p)) where n(p) is the smallest prime above p.
Rational f_p(std::uint64_t p);

struct Thresholds {
  Rational nilpotent;  // 1/p
  Rational abelian;    // (p^2 + p - 1) / p^3
};
Thresholds thresholds(std::uint64_t p);

// Number of pi-classes of SL(2, q) for odd prime q, counted through the
// two maximal tori: ((q-1)_pi + (q+1)_pi) / 2. Requires pi to avoid 2
// (EvenPrimeInPi) and the defining characteristic q
// (DefiningCharacteristicInPi).
Integer k_pi_sl2_torus(std::uint64_t q, const PrimeSet& pi);

}  // namespace pihall
