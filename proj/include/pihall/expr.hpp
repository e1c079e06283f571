#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pihall {

struct Atom {
  std::string name;
  std::vector<std::uint64_t> args;
  bool operator==(const Atom&) const = default;
};

// A product of named atoms; the grammar has no nesting, so a flat list.
struct GroupExpr {
  std::vector<Atom> factors;
  bool operator==(const GroupExpr&) const = default;
};

// Grammar: expr := atom ('x' atom)*, atom := Name '(' int (',' int)* ')'.
// Whitespace between tokens is ignored, names are case-sensitive, and 'x'
// is the product operator. Unknown names and wrong argument counts are
// rejected here with a byte offset; value ranges are checked at build
// time.
GroupExpr parse_expr(const std::string& text);

// Canonical rendering; parse_expr(print_expr(e)) == e.
std::string print_expr(const GroupExpr& e);

}  // namespace pihall
