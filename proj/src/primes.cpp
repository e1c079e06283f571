#include "pihall/primes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pihall/errors.hpp"

namespace pihall {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
  if (n == 0) throw InvalidParameters("cannot factor 0");
  std::vector<std::pair<std::uint64_t, int>> out;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t next_prime(std::uint64_t p) {
  std::uint64_t n = p + 1;
  while (!is_prime(n)) ++n;
  if (p >= 2 && n >= 2 * p) {
    throw InvalidParameters("next_prime overshot Bertrand bound for " +
                            std::to_string(p));
  }
  return n;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes)
    : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) {
      throw InvalidParameters(std::to_string(primes_[i]) + " is not prime");
    }
    if (i > 0 && primes_[i] == primes_[i - 1]) {
      throw InvalidParameters("duplicate prime " + std::to_string(primes_[i]));
    }
  }
}

PrimeSet PrimeSet::parse(const std::string& csv) {
  std::vector<std::uint64_t> primes;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      throw InvalidParameters("empty entry in prime set \"" + csv + "\"");
    }
    const auto last = token.find_last_not_of(" \t");
    const std::string trimmed = token.substr(first, last - first + 1);
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(trimmed, &used);
      if (used != trimmed.size()) throw std::invalid_argument(trimmed);
    } catch (const std::exception&) {
      throw InvalidParameters("\"" + trimmed + "\" is not a prime");
    }
    if (!is_prime(value)) {
      throw InvalidParameters("\"" + trimmed + "\" is not a prime");
    }
    if (std::find(primes.begin(), primes.end(), value) != primes.end()) {
      throw InvalidParameters("duplicate prime " + trimmed);
    }
    primes.push_back(value);
  }
  if (primes.empty() && !csv.empty()) {
    throw InvalidParameters("empty entry in prime set \"" + csv + "\"");
  }
  return PrimeSet(std::move(primes));
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::uint64_t PrimeSet::min() const {
  if (primes_.empty()) throw InvalidParameters("empty prime set has no min");
  return primes_.front();
}

std::string PrimeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(primes_[i]);
  }
  out += "}";
  return out;
}

Integer pi_part(const Integer& n, const PrimeSet& pi) {
  if (n <= 0) throw InvalidParameters("pi_part requires a positive integer");
  Integer rest = n;
  Integer part = 1;
  for (std::uint64_t p : pi.primes()) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      part *= to_integer(p);
    }
  }
  return part;
}

bool is_pi_number(const Integer& n, const PrimeSet& pi) {
  if (n <= 0) {
    throw InvalidParameters("is_pi_number requires a positive integer");
  }
  Integer rest = n;
  for (std::uint64_t p : pi.primes()) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  return rest == 1;
}

}  // namespace pihall
