#pragma once

#include <iosfwd>
#include <string>

#include "pihall/expr.hpp"
#include "pihall/perm_group.hpp"

namespace pihall {

// Builds the group an expression denotes, with direct factors acting on
// disjoint point ranges in order. Parameter ranges are validated here and
// rejected with InvalidParameters.
PermGroup build_group(const GroupExpr& e);

// parse_expr + build_group.
PermGroup build_group(const std::string& text);

// Reads a generator file: a "degree <n>" line, then one generator per
// line in 0-based disjoint cycle notation, "()" for the identity. '#'
// starts a comment, blank lines are skipped. Malformed input, points out
// of range, and repeated points raise FileFormatError.
PermGroup load_generators(std::istream& in);
PermGroup load_generators_file(const std::string& path);

}  // namespace pihall
