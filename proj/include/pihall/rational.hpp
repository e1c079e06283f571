#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "pihall/ints.hpp"

namespace pihall {

// Exact rational number; always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const Integer& num) : value_(num) {}
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(std::int64_t num) : value_(static_cast<long>(num)) {}

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  // "a/b", or just "a" when the denominator is 1.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

}  // namespace pihall
