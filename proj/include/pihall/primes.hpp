#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pihall/ints.hpp"

namespace pihall {

// Deterministic trial division; adequate for the magnitudes this library
// meets (cycle lengths, catalogue orders).
bool is_prime(std::uint64_t n);

// Prime factorization (p, multiplicity) with ascending primes.
std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n);

// Smallest prime above p, with a Bertrand sanity check result < 2p.
std::uint64_t next_prime(std::uint64_t p);

// Sorted set of distinct primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<std::uint64_t> primes);
  // Parses "3,5"; rejects non-primes and duplicates naming the offending
  // token.
  static PrimeSet parse(const std::string& csv);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool contains(std::uint64_t p) const;
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  std::uint64_t min() const;  // smallest member; throws when empty

  bool operator==(const PrimeSet&) const = default;

  std::string to_string() const;  // "{3,5}", "{}" when empty

 private:
  std::vector<std::uint64_t> primes_;
};

// Largest divisor of n composed only of primes in pi; pi_part(n, {}) == 1.
// Requires n > 0.
Integer pi_part(const Integer& n, const PrimeSet& pi);

// True when every prime factor of n lies in pi (so 1 qualifies always).
// Requires n > 0; never factors n, only divides by members of pi.
bool is_pi_number(const Integer& n, const PrimeSet& pi);

}  // namespace pihall
