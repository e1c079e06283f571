#include "pihall/invariants.hpp"

#include "pihall/errors.hpp"

namespace pihall {

bool is_pi_element(const Perm& x, const PrimeSet& pi) {
  return is_pi_number(element_order(x), pi);
}

std::uint64_t k_pi(const std::vector<ConjClass>& classes, const PrimeSet& pi) {
  std::uint64_t count = 0;
  for (const ConjClass& cls : classes) {
    if (is_pi_number(cls.order, pi)) ++count;
  }
  return count;
}

std::uint64_t k_pi(const PermGroup& g, const PrimeSet& pi, std::uint64_t cap) {
  return k_pi(conjugacy_classes(g, cap), pi);
}

Rational d_pi(const PermGroup& g, const PrimeSet& pi, std::uint64_t cap) {
  return Rational(to_integer(k_pi(g, pi, cap)), pi_part(g.order(), pi));
}

Rational commuting_probability(const PermGroup& g, std::uint64_t cap) {
  return Rational(to_integer(num_classes(g, cap)), g.order());
}

Rational g_p(std::uint64_t p, const Integer& x) {
  if (!is_prime(p)) {
    throw InvalidParameters(std::to_string(p) + " is not prime");
  }
  if (x < 1) throw InvalidParameters("g_p needs x >= 1");
  const Integer p2 = to_integer(p) * to_integer(p);
  return Rational(x + p2 - 1, p2 * x);
}

Rational f_p(std::uint64_t p) {
  if (!is_prime(p)) {
    throw InvalidParameters(std::to_string(p) + " is not prime");
  }
  return g_p(p, to_integer(next_prime(p)));
}

Thresholds thresholds(std::uint64_t p) {
  if (!is_prime(p)) {
    throw InvalidParameters(std::to_string(p) + " is not prime");
  }
  const Integer pz = to_integer(p);
  return Thresholds{Rational(Integer(1), pz),
                    Rational(pz * pz + pz - 1, pz * pz * pz)};
}

Integer k_pi_sl2_torus(std::uint64_t q, const PrimeSet& pi) {
  if (!is_prime(q) || q == 2) {
    throw InvalidParameters("q must be an odd prime, got " +
                            std::to_string(q));
  }
  if (pi.contains(2)) {
    throw EvenPrimeInPi("the torus count needs 2 outside pi");
  }
  if (pi.contains(q)) {
    throw DefiningCharacteristicInPi(
        "the torus count needs the defining characteristic " +
        std::to_string(q) + " outside pi");
  }
  const Integer minus = pi_part(to_integer(q - 1), pi);
  const Integer plus = pi_part(to_integer(q + 1), pi);
  return (minus + plus) / 2;
}

}  // namespace pihall
