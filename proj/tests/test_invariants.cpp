#include <doctest.h>

#include <cstdint>
#include <vector>

#include "pihall/build.hpp"
#include "pihall/errors.hpp"
#include "pihall/invariants.hpp"

#include "oracle.hpp"

namespace pihall {
namespace {

TEST_CASE("prime sets parse and reject bad tokens") {
  CHECK(PrimeSet::parse("3,5").primes() == std::vector<std::uint64_t>{3, 5});
  CHECK(PrimeSet::parse(" 5 , 3 ").primes() == std::vector<std::uint64_t>{3, 5});
  CHECK(PrimeSet::parse("").empty());
  CHECK(PrimeSet::parse("2").min() == 2);
  CHECK(PrimeSet::parse("3,5").to_string() == "{3,5}");
  CHECK(PrimeSet().to_string() == "{}");

  CHECK_THROWS_WITH_AS(PrimeSet::parse("3,4"), "\"4\" is not a prime",
                       InvalidParameters);
  CHECK_THROWS_WITH_AS(PrimeSet::parse("3,three"), "\"three\" is not a prime",
                       InvalidParameters);
  CHECK_THROWS_WITH_AS(PrimeSet::parse("3,3"), "duplicate prime 3",
                       InvalidParameters);
  CHECK_THROWS_AS(PrimeSet::parse("3,,5"), InvalidParameters);
  CHECK_THROWS_AS(PrimeSet({6}), InvalidParameters);
  CHECK_THROWS_AS(PrimeSet().min(), InvalidParameters);
}

TEST_CASE("pi parts of integers") {
  CHECK(pi_part(to_integer(360), PrimeSet({2, 3})) == 72);
  CHECK(pi_part(to_integer(360), PrimeSet({5})) == 5);
  CHECK(pi_part(to_integer(360), PrimeSet({7})) == 1);
  CHECK(pi_part(to_integer(1), PrimeSet({2})) == 1);
  CHECK(pi_part(to_integer(7), PrimeSet()) == 1);
  CHECK(is_pi_number(to_integer(12), PrimeSet({2, 3})));
  CHECK_FALSE(is_pi_number(to_integer(12), PrimeSet({2})));
  CHECK(is_pi_number(to_integer(1), PrimeSet()));
  CHECK_THROWS_AS(pi_part(to_integer(0), PrimeSet({2})), InvalidParameters);
}

TEST_CASE("rationals stay reduced with positive denominators") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(5, 10).num() == 1);
  CHECK(Rational(5, 10).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), InvalidParameters);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), InvalidParameters);
}

TEST_CASE("pi elements") {
  const Perm six = oracle::from_cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(is_pi_element(six, PrimeSet({2, 3})));
  CHECK_FALSE(is_pi_element(six, PrimeSet({2})));
  CHECK_FALSE(is_pi_element(six, PrimeSet({3})));
  CHECK(is_pi_element(Perm(6), PrimeSet()));
}

TEST_CASE("class counting invariants against brute force") {
  const std::vector<std::string> names = {"Sym(3)", "Sym(4)", "Alt(4)",
                                          "Dihedral(4)", "Cyclic(12)",
                                          "Semidirect(7,3)"};
  for (const auto& name : names) {
    CAPTURE(name);
    const PermGroup g = build_group(name);
    const auto brute = oracle::classes(g.elements());
    CHECK(commuting_probability(g) ==
          Rational(to_integer(brute.size()), g.order()));

    std::uint64_t brute_k23 = 0;
    for (const auto& cls : brute) {
      std::uint64_t o = oracle::element_order_iter(cls.front());
      while (o % 2 == 0) o /= 2;
      while (o % 3 == 0) o /= 3;
      if (o == 1) ++brute_k23;
    }
    CHECK(k_pi(g, PrimeSet({2, 3})) == brute_k23);
  }
}

TEST_CASE("pinned invariant values") {
  const PermGroup s3 = build_group("Sym(3)");
  CHECK(commuting_probability(s3) == Rational(1, 2));
  CHECK(k_pi(s3, PrimeSet({2})) == 2);
  CHECK(k_pi(s3, PrimeSet({3})) == 2);
  CHECK(d_pi(s3, PrimeSet({3})) == Rational(2, 3));
  CHECK(d_pi(s3, PrimeSet({2})) == Rational(1));
  CHECK(d_pi(s3, PrimeSet()) == Rational(1));

  const PermGroup f21 = build_group("Semidirect(7,3)");
  CHECK(k_pi(f21, PrimeSet({3, 7})) == 5);
  CHECK(d_pi(f21, PrimeSet({3, 7})) == Rational(5, 21));

  const PermGroup f55 = build_group("Semidirect(11,5)");
  CHECK(k_pi(f55, PrimeSet({5, 11})) == 7);
  CHECK(d_pi(f55, PrimeSet({5, 11})) == Rational(7, 55));

  const PermGroup e27 = build_group("Extraspecial(3)");
  CHECK(commuting_probability(e27) == Rational(11, 27));
}

TEST_CASE("the bounding function g and its value f at the next prime") {
  CHECK(g_p(2, to_integer(1)) == Rational(1));
  CHECK(g_p(2, to_integer(2)) == Rational(5, 8));
  CHECK(g_p(2, to_integer(3)) == Rational(1, 2));
  CHECK(g_p(3, to_integer(3)) == Rational(11, 27));
  CHECK(g_p(3, to_integer(4)) == Rational(1, 3));
  CHECK(g_p(5, to_integer(6)) == Rational(1, 5));

  // Decreasing in x.
  for (int x = 1; x < 30; ++x) {
    CHECK(g_p(3, to_integer(x + 1)) < g_p(3, to_integer(x)));
  }

  CHECK(f_p(2) == Rational(1, 2));
  CHECK(f_p(3) == Rational(13, 45));
  CHECK(f_p(5) == Rational(31, 175));
  CHECK(f_p(7) == Rational(59, 539));

  CHECK_THROWS_AS(g_p(4, to_integer(1)), InvalidParameters);
  CHECK_THROWS_AS(g_p(2, to_integer(0)), InvalidParameters);
  CHECK_THROWS_AS(f_p(9), InvalidParameters);
}

TEST_CASE("thresholds per prime") {
  CHECK(thresholds(2).nilpotent == Rational(1, 2));
  CHECK(thresholds(2).abelian == Rational(5, 8));
  CHECK(thresholds(3).nilpotent == Rational(1, 3));
  CHECK(thresholds(3).abelian == Rational(11, 27));
  CHECK(thresholds(5).nilpotent == Rational(1, 5));
  CHECK(thresholds(5).abelian == Rational(29, 125));
  CHECK(thresholds(2).nilpotent < thresholds(2).abelian);
  CHECK_THROWS_AS(thresholds(6), InvalidParameters);
}

TEST_CASE("torus count for SL(2,q)") {
  CHECK(k_pi_sl2_torus(5, PrimeSet({3})) == 2);
  CHECK(k_pi_sl2_torus(7, PrimeSet({3, 5})) == 2);
  CHECK(k_pi_sl2_torus(11, PrimeSet({3, 5})) == 4);
  CHECK(k_pi_sl2_torus(13, PrimeSet({3})) == 2);
  CHECK(k_pi_sl2_torus(13, PrimeSet({7})) == 4);
  CHECK(k_pi_sl2_torus(13, PrimeSet({3, 7})) == 5);
  CHECK(k_pi_sl2_torus(5, PrimeSet()) == 1);

  CHECK_THROWS_AS(k_pi_sl2_torus(5, PrimeSet({5})), DefiningCharacteristicInPi);
  CHECK_THROWS_AS(k_pi_sl2_torus(5, PrimeSet({2})), EvenPrimeInPi);
  CHECK_THROWS_AS(k_pi_sl2_torus(2, PrimeSet({3})), InvalidParameters);
  CHECK_THROWS_AS(k_pi_sl2_torus(9, PrimeSet({5})), InvalidParameters);
}

TEST_CASE("torus count agrees with the group computation") {
  const PermGroup sl25 = build_group("SL2(5)");
  CHECK(to_integer(k_pi(sl25, PrimeSet({3}))) == k_pi_sl2_torus(5, PrimeSet({3})));
  const PermGroup sl27 = build_group("SL2(7)");
  CHECK(to_integer(k_pi(sl27, PrimeSet({3}))) == k_pi_sl2_torus(7, PrimeSet({3})));
}

}  // namespace
}  // namespace pihall
