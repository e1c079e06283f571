#include "pihall/build.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "pihall/errors.hpp"
#include "pihall/primes.hpp"

namespace pihall {

namespace {

std::vector<Point> identity_images(Point degree) {
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  return img;
}

PermGroup sym_group(std::uint64_t n) {
  if (n < 1 || n > 10) {
    throw InvalidParameters("Sym needs 1 <= n <= 10, got " + std::to_string(n));
  }
  const Point deg = static_cast<Point>(n);
  if (n == 1) return PermGroup(1);
  auto swap01 = identity_images(deg);
  swap01[0] = 1;
  swap01[1] = 0;
  std::vector<Point> rot(deg);
  for (Point i = 0; i < deg; ++i) rot[i] = (i + 1) % deg;
  return PermGroup(deg, {Perm(swap01), Perm(rot)});
}

PermGroup alt_group(std::uint64_t n) {
  if (n < 3 || n > 10) {
    throw InvalidParameters("Alt needs 3 <= n <= 10, got " + std::to_string(n));
  }
  const Point deg = static_cast<Point>(n);
  // The 3-cycles (0 1 k) generate the alternating group.
  std::vector<Perm> gens;
  for (Point k = 2; k < deg; ++k) {
    auto img = identity_images(deg);
    img[0] = 1;
    img[1] = k;
    img[k] = 0;
    gens.push_back(Perm(img));
  }
  return PermGroup(deg, gens);
}

PermGroup cyclic_group(std::uint64_t n) {
  if (n < 1 || n > kMaxDegree) {
    throw InvalidParameters("Cyclic needs 1 <= n <= " +
                            std::to_string(kMaxDegree) + ", got " +
                            std::to_string(n));
  }
  const Point deg = static_cast<Point>(n);
  if (n == 1) return PermGroup(1);
  std::vector<Point> rot(deg);
  for (Point i = 0; i < deg; ++i) rot[i] = (i + 1) % deg;
  return PermGroup(deg, {Perm(rot)});
}

PermGroup dihedral_group(std::uint64_t m) {
  if (m < 3 || m > kMaxDegree) {
    throw InvalidParameters("Dihedral needs 3 <= m <= " +
                            std::to_string(kMaxDegree) + ", got " +
                            std::to_string(m));
  }
  const Point deg = static_cast<Point>(m);
  std::vector<Point> rot(deg), refl(deg);
  for (Point i = 0; i < deg; ++i) {
    rot[i] = (i + 1) % deg;
    refl[i] = static_cast<Point>((m - i) % m);
  }
  return PermGroup(deg, {Perm(rot), Perm(refl)});
}

PermGroup elem_abelian_group(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) {
    throw InvalidParameters("ElemAbelian needs a prime, got " +
                            std::to_string(p));
  }
  if (k < 1 || p * k > kMaxDegree) {
    throw InvalidParameters("ElemAbelian(" + std::to_string(p) + "," +
                            std::to_string(k) + ") does not fit the degree cap");
  }
  const Point deg = static_cast<Point>(p * k);
  std::vector<Perm> gens;
  for (std::uint64_t block = 0; block < k; ++block) {
    auto img = identity_images(deg);
    const Point base = static_cast<Point>(block * p);
    for (Point i = 0; i < p; ++i) {
      img[base + i] = base + static_cast<Point>((i + 1) % p);
    }
    gens.push_back(Perm(img));
  }
  return PermGroup(deg, gens);
}

// Heisenberg group over the p-element field, acting on itself by right
// multiplication; extraspecial of order p^3 and exponent p for odd p.
// Triples (a, b, c) multiply as (a+a', b+b', c+c'+a*b'), encoded as
// a*p^2 + b*p + c.
PermGroup extraspecial_group(std::uint64_t p) {
  if (p != 3 && p != 5 && p != 7) {
    throw InvalidParameters("Extraspecial needs p in {3, 5, 7}, got " +
                            std::to_string(p));
  }
  const Point deg = static_cast<Point>(p * p * p);
  std::vector<Point> by_a(deg), by_b(deg);
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      for (std::uint64_t c = 0; c < p; ++c) {
        const Point at = static_cast<Point>(a * p * p + b * p + c);
        by_a[at] = static_cast<Point>(((a + 1) % p) * p * p + b * p + c);
        by_b[at] =
            static_cast<Point>(a * p * p + ((b + 1) % p) * p + (c + a) % p);
      }
    }
  }
  return PermGroup(deg, {Perm(by_a), Perm(by_b)});
}

// The regular wreath product of two cyclic groups of order p, on p^2
// points arranged in p blocks of p.
PermGroup wreath_group(std::uint64_t p) {
  if (!is_prime(p) || p * p > kMaxDegree) {
    throw InvalidParameters("Wreath needs a prime with p^2 <= " +
                            std::to_string(kMaxDegree) + ", got " +
                            std::to_string(p));
  }
  const Point deg = static_cast<Point>(p * p);
  auto base = identity_images(deg);
  for (Point i = 0; i < p; ++i) base[i] = static_cast<Point>((i + 1) % p);
  std::vector<Point> top(deg);
  for (Point i = 0; i < deg; ++i) top[i] = static_cast<Point>((i + p) % deg);
  return PermGroup(deg, {Perm(base), Perm(top)});
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t q) {
  std::uint64_t acc = r % q;
  std::uint64_t o = 1;
  while (acc != 1) {
    acc = acc * r % q;
    ++o;
  }
  return o;
}

// The nonabelian group of order q*p, as affine maps x -> r*x + a on the
// q-element field with r of multiplicative order p.
PermGroup semidirect_group(std::uint64_t q, std::uint64_t p) {
  if (!is_prime(q) || !is_prime(p) || p == q || (q - 1) % p != 0) {
    throw InvalidParameters("Semidirect needs distinct primes with p | q-1, got (" +
                            std::to_string(q) + "," + std::to_string(p) + ")");
  }
  if (q > kMaxDegree) {
    throw InvalidParameters("Semidirect modulus exceeds the degree cap");
  }
  std::uint64_t r = 2;
  while (multiplicative_order(r, q) != p) ++r;
  const Point deg = static_cast<Point>(q);
  std::vector<Point> trans(deg), mult(deg);
  for (Point i = 0; i < deg; ++i) {
    trans[i] = static_cast<Point>((i + 1) % q);
    mult[i] = static_cast<Point>(r * i % q);
  }
  return PermGroup(deg, {Perm(trans), Perm(mult)});
}

// SL(2, q) acting on the nonzero row vectors of its natural module;
// generated by the two standard transvections.
PermGroup sl2_group(std::uint64_t q) {
  if (!is_prime(q) || q == 2 || q > 31) {
    throw InvalidParameters("SL2 needs an odd prime q <= 31, got " +
                            std::to_string(q));
  }
  const Point deg = static_cast<Point>(q * q - 1);
  auto idx = [q](std::uint64_t x, std::uint64_t y) {
    return static_cast<Point>(x * q + y - 1);
  };
  std::vector<Point> upper(deg), lower(deg);
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      upper[idx(x, y)] = idx(x, (x + y) % q);  // (x, y) * [[1,1],[0,1]]
      lower[idx(x, y)] = idx((x + y) % q, y);  // (x, y) * [[1,0],[1,1]]
    }
  }
  return PermGroup(deg, {Perm(upper), Perm(lower)});
}

PermGroup build_atom(const Atom& a) {
  if (a.name == "Sym") return sym_group(a.args[0]);
  if (a.name == "Alt") return alt_group(a.args[0]);
  if (a.name == "Cyclic") return cyclic_group(a.args[0]);
  if (a.name == "Dihedral") return dihedral_group(a.args[0]);
  if (a.name == "ElemAbelian") return elem_abelian_group(a.args[0], a.args[1]);
  if (a.name == "Extraspecial") return extraspecial_group(a.args[0]);
  if (a.name == "Wreath") return wreath_group(a.args[0]);
  if (a.name == "Semidirect") return semidirect_group(a.args[0], a.args[1]);
  if (a.name == "SL2") return sl2_group(a.args[0]);
  throw InvalidParameters("unknown group name \"" + a.name + "\"");
}

}  // namespace

PermGroup build_group(const GroupExpr& e) {
  if (e.factors.empty()) throw InvalidParameters("empty group expression");
  std::vector<PermGroup> parts;
  parts.reserve(e.factors.size());
  std::uint64_t total = 0;
  for (const Atom& a : e.factors) {
    parts.push_back(build_atom(a));
    total += parts.back().degree();
  }
  if (parts.size() == 1) return parts.front();
  if (total > kMaxDegree) {
    throw InvalidParameters("product degree " + std::to_string(total) +
                            " exceeds the degree cap");
  }
  const Point deg = static_cast<Point>(total);
  std::vector<Perm> gens;
  Point offset = 0;
  for (const PermGroup& part : parts) {
    for (const Perm& s : part.generators()) {
      auto img = identity_images(deg);
      for (Point i = 0; i < part.degree(); ++i) img[offset + i] = offset + s[i];
      gens.push_back(Perm(img));
    }
    offset += part.degree();
  }
  return PermGroup(deg, gens);
}

PermGroup build_group(const std::string& text) {
  return build_group(parse_expr(text));
}

namespace {

Perm parse_cycle_line(const std::string& line, Point degree) {
  std::vector<Point> img(degree);
  std::vector<char> used(degree, 0);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() &&
           std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
  };
  bool any = false;
  for (;;) {
    skip_ws();
    if (pos >= line.size()) break;
    if (line[pos] != '(') {
      throw FileFormatError("expected '(' in generator line: " + line);
    }
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos < line.size() && line[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < line.size() && line[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= line.size() ||
          !std::isdigit(static_cast<unsigned char>(line[pos]))) {
        throw FileFormatError("expected a point or ')' in generator line: " +
                              line);
      }
      std::uint64_t value = 0;
      while (pos < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(line[pos] - '0');
        if (value > kMaxDegree) {
          throw FileFormatError("point out of range in generator line: " +
                                line);
        }
        ++pos;
      }
      if (value >= degree) {
        throw FileFormatError("point " + std::to_string(value) +
                              " is out of range for degree " +
                              std::to_string(degree));
      }
      if (used[value]) {
        throw FileFormatError("point " + std::to_string(value) +
                              " repeats in generator line: " + line);
      }
      used[value] = 1;
      cycle.push_back(static_cast<Point>(value));
    }
    any = true;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  if (!any) {
    throw FileFormatError("generator line has no cycles: " + line);
  }
  return Perm(img);
}

}  // namespace

PermGroup load_generators(std::istream& in) {
  std::string line;
  bool have_degree = false;
  Point degree = 0;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    const std::string content = line.substr(first, last - first + 1);
    if (!have_degree) {
      std::istringstream ss(content);
      std::string word;
      std::uint64_t n = 0;
      if (!(ss >> word >> n) || word != "degree" || (ss >> word)) {
        throw FileFormatError("first line must be \"degree <n>\", got: " +
                              content);
      }
      if (n < 1 || n > kMaxDegree) {
        throw FileFormatError("degree " + std::to_string(n) +
                              " out of range [1, " +
                              std::to_string(kMaxDegree) + "]");
      }
      degree = static_cast<Point>(n);
      have_degree = true;
      continue;
    }
    gens.push_back(parse_cycle_line(content, degree));
  }
  if (!have_degree) {
    throw FileFormatError("generator file has no \"degree <n>\" line");
  }
  return PermGroup(degree, gens);
}

PermGroup load_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileFormatError("cannot open generator file: " + path);
  }
  return load_generators(in);
}

}  // namespace pihall
