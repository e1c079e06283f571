#include "pihall/expr.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "pihall/errors.hpp"

namespace pihall {

namespace {

const std::map<std::string, std::size_t>& atom_arity() {
  static const std::map<std::string, std::size_t> table = {
      {"Sym", 1},          {"Alt", 1},    {"Cyclic", 1},
      {"Dihedral", 1},     {"ElemAbelian", 2}, {"Extraspecial", 1},
      {"Wreath", 1},       {"Semidirect", 2},  {"SL2", 1},
  };
  return table;
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= text.size() ||
        !std::isalpha(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a name", pos);
    }
    while (pos < text.size() &&
           std::isalnum(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return text.substr(start, pos - start);
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a number", pos);
    }
    std::uint64_t value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError("number too large", start);
      }
      value = value * 10 + digit;
      ++pos;
    }
    return value;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected ") + what, pos);
    }
    ++pos;
  }

  Atom atom() {
    skip_ws();
    const std::size_t at = pos;
    const std::string name = ident();
    const auto it = atom_arity().find(name);
    if (it == atom_arity().end()) {
      throw ParseError("unknown group name \"" + name + "\"", at);
    }
    expect('(', "'('");
    Atom a{name, {}};
    a.args.push_back(number());
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        a.args.push_back(number());
        continue;
      }
      break;
    }
    expect(')', "')'");
    if (a.args.size() != it->second) {
      throw ParseError(name + " takes " + std::to_string(it->second) +
                           (it->second == 1 ? " argument" : " arguments"),
                       at);
    }
    return a;
  }
};

}  // namespace

GroupExpr parse_expr(const std::string& text) {
  Parser p{text};
  GroupExpr expr;
  expr.factors.push_back(p.atom());
  while (!p.at_end()) {
    const std::size_t at = p.pos;
    if (p.ident() != "x") {
      throw ParseError("expected 'x' between factors", at);
    }
    expr.factors.push_back(p.atom());
  }
  return expr;
}

std::string print_expr(const GroupExpr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.factors.size(); ++i) {
    if (i > 0) out += " x ";
    out += e.factors[i].name;
    out += "(";
    for (std::size_t j = 0; j < e.factors[i].args.size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(e.factors[i].args[j]);
    }
    out += ")";
  }
  return out;
}

}  // namespace pihall
