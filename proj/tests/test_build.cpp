#include <doctest.h>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pihall/build.hpp"
#include "pihall/catalogue.hpp"
#include "pihall/errors.hpp"
#include "pihall/expr.hpp"
#include "pihall/structure.hpp"

namespace pihall {
namespace {

TEST_CASE("expressions parse and print round trip") {
  const std::vector<std::string> canonical = {
      "Sym(5)",
      "ElemAbelian(3,2)",
      "Extraspecial(3) x Cyclic(5)",
      "Extraspecial(3) x Dihedral(5) x Dihedral(7)",
      "Semidirect(13,3)",
      "SL2(11)",
  };
  for (const auto& text : canonical) {
    CAPTURE(text);
    const GroupExpr e = parse_expr(text);
    CHECK(print_expr(e) == text);
    CHECK(parse_expr(print_expr(e)) == e);
  }
  // Whitespace does not matter.
  CHECK(parse_expr("  Sym( 4 )x Cyclic(5)  ") ==
        parse_expr("Sym(4) x Cyclic(5)"));
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("Grp(3)") == 0);
  CHECK(offset_of("Sym(3) x Grp(4)") == 9);
  CHECK(offset_of("Sym 3") == 4);
  CHECK(offset_of("Sym(3") == 5);
  CHECK(offset_of("Sym(3) Alt(4)") == 7);
  CHECK(offset_of("Sym(3,4)") == 0);
  CHECK(offset_of("Sym(a)") == 4);
  CHECK(offset_of("Sym(99999999999999999999)") == 4);
  CHECK(offset_of("sym(3)") == 0);
  CHECK(offset_of("x Sym(3)") == 0);
}

TEST_CASE("atom builders produce the advertised groups") {
  struct Expect {
    std::string expr;
    std::uint64_t order;
    Point degree;
  };
  const std::vector<Expect> table = {
      {"Sym(1)", 1, 1},          {"Sym(2)", 2, 2},
      {"Sym(6)", 720, 6},        {"Sym(8)", 40320, 8},
      {"Alt(3)", 3, 3},          {"Alt(5)", 60, 5},
      {"Alt(8)", 20160, 8},      {"Cyclic(1)", 1, 1},
      {"Cyclic(105)", 105, 105}, {"Dihedral(4)", 8, 4},
      {"Dihedral(9)", 18, 9},    {"ElemAbelian(3,2)", 9, 6},
      {"ElemAbelian(2,3)", 8, 6}, {"Extraspecial(3)", 27, 27},
      {"Extraspecial(5)", 125, 125}, {"Wreath(3)", 81, 9},
      {"Semidirect(7,3)", 21, 7}, {"Semidirect(13,3)", 39, 13},
      {"Semidirect(11,5)", 55, 11}, {"SL2(5)", 120, 24},
      {"SL2(7)", 336, 48},       {"SL2(11)", 1320, 120},
      {"SL2(13)", 2184, 168},
  };
  for (const auto& e : table) {
    CAPTURE(e.expr);
    const PermGroup g = build_group(e.expr);
    CHECK(g.order() == to_integer(e.order));
    CHECK(g.degree() == e.degree);
  }
}

TEST_CASE("structural sanity of the more intricate constructions") {
  const PermGroup e27 = build_group("Extraspecial(3)");
  CHECK_FALSE(is_abelian(e27));
  CHECK(center(e27).order() == 3);
  CHECK(derived_subgroup(e27).order() == 3);
  for (const Perm& x : e27.elements()) {
    if (!x.is_identity()) CHECK(element_order(x) == 3);
  }
  CHECK(is_cp_x_cp(quotient(e27, center(e27)), 3));

  const PermGroup w3 = build_group("Wreath(3)");
  CHECK_FALSE(is_abelian(w3));
  CHECK(center(w3).order() == 3);

  const PermGroup f21 = build_group("Semidirect(7,3)");
  CHECK_FALSE(is_abelian(f21));
  CHECK(derived_subgroup(f21).order() == 7);
  CHECK(center(f21).is_trivial());

  const PermGroup sl25 = build_group("SL2(5)");
  CHECK(center(sl25).order() == 2);
  // The unique involution is central.
  std::uint64_t involutions = 0;
  for (const Perm& x : sl25.elements()) {
    if (element_order(x) == 2) ++involutions;
  }
  CHECK(involutions == 1);
  CHECK(quotient(sl25, center(sl25)).order() == 60);
}

TEST_CASE("products act on disjoint point ranges") {
  const PermGroup g = build_group("Sym(4) x Cyclic(5)");
  CHECK(g.degree() == 9);
  CHECK(g.order() == to_integer(120));
  const PermGroup triple = build_group("Extraspecial(3) x Dihedral(5) x Dihedral(7)");
  CHECK(triple.degree() == 39);
  CHECK(triple.order() == to_integer(3780));
  CHECK(center(triple).order() == 3);
}

TEST_CASE("builder parameter validation") {
  CHECK_THROWS_AS(build_group("Sym(11)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Sym(0)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Alt(2)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Dihedral(2)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Cyclic(0)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("ElemAbelian(4,2)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("ElemAbelian(2,0)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Extraspecial(2)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Extraspecial(11)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Wreath(4)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Semidirect(7,5)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Semidirect(7,7)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Semidirect(8,3)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("SL2(2)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("SL2(9)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("SL2(37)"), InvalidParameters);
  CHECK_THROWS_AS(build_group("Cyclic(9000) x Cyclic(9000)"), InvalidParameters);
}

TEST_CASE("catalogue entries all parse, print canonically, and build") {
  const auto& entries = catalogue();
  CHECK(entries.size() == 35);
  for (const auto& entry : entries) {
    CAPTURE(entry.name);
    const GroupExpr e = parse_expr(entry.name);
    CHECK(print_expr(e) == entry.name);
    const PermGroup g = build_group(e);
    CHECK(g.order() > 0);
    CHECK(g.degree() >= 1);
  }
  std::vector<std::string> sophie;
  for (const auto& entry : entries) {
    for (const auto& tag : entry.tags) {
      if (tag == "sophie-germain") sophie.push_back(entry.name);
    }
  }
  CHECK(sophie == std::vector<std::string>{"Semidirect(7,3)", "Semidirect(11,5)"});
}

TEST_CASE("generator files load") {
  std::istringstream good(
      "# alternating group on five points\n"
      "degree 5\n"
      "(0 1 2)   # a 3-cycle\n"
      "(0 1 2 3 4)\n"
      "()\n");
  const PermGroup g = load_generators(good);
  CHECK(g.degree() == 5);
  CHECK(g.order() == to_integer(60));

  std::istringstream commas("degree 4\n(0, 1)(2, 3)\n");
  CHECK(load_generators(commas).order() == 2);

  std::istringstream degree_only("degree 6\n");
  CHECK(load_generators(degree_only).is_trivial());
}

TEST_CASE("generator file errors") {
  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(load_generators(in), FileFormatError);
  };
  fails("");
  fails("# only a comment\n");
  fails("order 5\n(0 1)\n");
  fails("degree five\n");
  fails("degree 5 extra\n");
  fails("degree 0\n");
  fails("degree 20000\n");
  fails("degree 5\n(0 5)\n");
  fails("degree 5\n(0 1)(1 2)\n");
  fails("degree 5\n(0 0)\n");
  fails("degree 5\n0 1\n");
  fails("degree 5\n(0 1\n");
  fails("degree 5\n(0 x)\n");

  CHECK_THROWS_AS(load_generators_file("/nonexistent/gens.txt"),
                  FileFormatError);
}

TEST_CASE("generator files round trip through cycle strings") {
  const PermGroup g = build_group("Dihedral(5)");
  std::string text = "degree 5\n";
  for (const Perm& s : g.generators()) text += s.cycle_string() + "\n";
  std::istringstream in(text);
  const PermGroup back = load_generators(in);
  CHECK(back.order() == g.order());
  for (const Perm& s : g.generators()) CHECK(back.contains(s));
}

}  // namespace
}  // namespace pihall
