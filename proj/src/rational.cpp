#include "pihall/rational.hpp"

#include <ostream>

#include "pihall/errors.hpp"

namespace pihall {

namespace {

mpq_class make_canonical(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidParameters("rational with zero denominator");
  mpq_class q(num);
  q /= mpq_class(den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den)
    : value_(make_canonical(num, den)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : value_(make_canonical(Integer(static_cast<long>(num)),
                            Integer(static_cast<long>(den)))) {}

std::string Rational::str() const { return value_.get_str(); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ + b.value_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ - b.value_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ * b.value_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b == Rational(0)) throw InvalidParameters("division by zero rational");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace pihall
