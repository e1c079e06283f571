#include <doctest.h>

#include <vector>

#include "pihall/errors.hpp"
#include "pihall/perm.hpp"

#include "oracle.hpp"

namespace pihall {
namespace {

TEST_CASE("composition applies the left factor first") {
  const Perm a = oracle::from_cycles(3, {{0, 1, 2}});
  const Perm b = oracle::from_cycles(3, {{0, 1}});
  // (0 1 2) then (0 1) sends 0 to 0, 1 to 2, 2 to 1.
  CHECK(a * b == oracle::from_cycles(3, {{1, 2}}));
  CHECK(b * a == oracle::from_cycles(3, {{0, 2}}));
  CHECK((a * b)[0] == 0);
}

TEST_CASE("inverse and identity") {
  const Perm x = oracle::from_cycles(5, {{0, 3, 1}, {2, 4}});
  CHECK((x * x.inverse()).is_identity());
  CHECK((x.inverse() * x).is_identity());
  CHECK(Perm(5).is_identity());
  CHECK(Perm(5).min_moved() == 5);
  CHECK(x.min_moved() == 0);
  CHECK(oracle::from_cycles(6, {{4, 5}}).min_moved() == 4);
}

TEST_CASE("conjugation relabels cycles") {
  const Perm x = oracle::from_cycles(4, {{0, 1}});
  const Perm g = oracle::from_cycles(4, {{0, 2}, {1, 3}});
  CHECK(conjugate(x, g) == oracle::from_cycles(4, {{2, 3}}));
  CHECK(conjugate(x, Perm(4)) == x);
}

TEST_CASE("commutator and commute agree") {
  const Perm a = oracle::from_cycles(4, {{0, 1, 2}});
  const Perm b = oracle::from_cycles(4, {{1, 2, 3}});
  const Perm c = oracle::from_cycles(4, {{0, 1}, {2, 3}});
  const Perm d = oracle::from_cycles(4, {{0, 2}, {1, 3}});
  CHECK_FALSE(commute(a, b));
  CHECK_FALSE(commutator(a, b).is_identity());
  CHECK(commute(c, d));
  CHECK(commutator(c, d).is_identity());
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
}

TEST_CASE("element order matches repeated multiplication") {
  const std::vector<Perm> samples = {
      Perm(7),
      oracle::from_cycles(7, {{0, 1}}),
      oracle::from_cycles(7, {{0, 1, 2}, {3, 4}}),
      oracle::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
      oracle::from_cycles(12, {{0, 1, 2, 3}, {4, 5, 6}, {7, 8}}),
  };
  for (const Perm& x : samples) {
    CHECK(element_order(x) == to_integer(oracle::element_order_iter(x)));
  }
}

TEST_CASE("cycle decomposition and printing") {
  const Perm x = oracle::from_cycles(6, {{3, 4}, {0, 1, 2}});
  const std::vector<std::vector<Point>> expected = {{0, 1, 2}, {3, 4}};
  CHECK(x.cycles() == expected);
  CHECK(x.cycle_string() == "(0 1 2)(3 4)");
  CHECK(Perm(6).cycle_string() == "()");
  CHECK(x.cycle_lengths() == std::vector<std::uint64_t>{3, 2});
}

TEST_CASE("image arrays must be bijections") {
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), InvalidParameters);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 3, 1}), InvalidParameters);
  // The empty image array is the degree-zero identity, same as Perm().
  CHECK(Perm(std::vector<Point>{}).is_identity());
}

TEST_CASE("degree mismatch in products is rejected") {
  CHECK_THROWS_AS(Perm(3) * Perm(4), DegreeMismatch);
}

TEST_CASE("lexicographic order puts the identity first") {
  const std::vector<Perm> s3 = oracle::closure_elements(
      3, {oracle::from_cycles(3, {{0, 1}}), oracle::from_cycles(3, {{0, 1, 2}})});
  REQUIRE(s3.size() == 6);
  CHECK(s3.front().is_identity());
  for (std::size_t i = 1; i < s3.size(); ++i) CHECK(s3[i - 1] < s3[i]);
}

TEST_CASE("equal permutations hash equally") {
  const Perm a = oracle::from_cycles(5, {{1, 4, 2}});
  const Perm b = oracle::from_cycles(5, {{4, 2, 1}});
  CHECK(a == b);
  CHECK(PermHash{}(a) == PermHash{}(b));
}

}  // namespace
}  // namespace pihall
