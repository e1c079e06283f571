#include "pihall/perm.hpp"

#include <numeric>
#include <sstream>

#include "pihall/errors.hpp"

namespace pihall {

Perm::Perm(Point degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point v : img_) {
    if (v >= img_.size() || seen[v])
      throw InvalidParameters("image array is not a permutation");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Point Perm::min_moved() const {
  for (Point i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return degree();
}

Perm Perm::inverse() const {
  std::vector<Point> inv(img_.size());
  for (Point i = 0; i < degree(); ++i) inv[img_[i]] = i;
  Perm r;
  r.img_ = std::move(inv);
  return r;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  std::vector<Point> img(a.degree());
  for (Point i = 0; i < a.degree(); ++i) img[i] = b.img_[a.img_[i]];
  Perm r;
  r.img_ = std::move(img);
  return r;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<Point> cyc;
    Point j = i;
    do {
      cyc.push_back(j);
      seen[j] = true;
      j = img_[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::uint64_t> Perm::cycle_lengths() const {
  std::vector<std::uint64_t> out;
  std::vector<bool> seen(degree(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::uint64_t len = 0;
    Point j = i;
    do {
      ++len;
      seen[j] = true;
      j = img_[j];
    } while (j != i);
    out.push_back(len);
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k];
    }
    os << ')';
  }
  return os.str();
}

Integer element_order(const Perm& x) {
  Integer ord = 1;
  for (std::uint64_t len : x.cycle_lengths())
    mpz_lcm_ui(ord.get_mpz_t(), ord.get_mpz_t(),
               static_cast<unsigned long>(len));
  return ord;
}

Perm conjugate(const Perm& x, const Perm& g) { return g.inverse() * x * g; }

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

bool commute(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("cannot compare permutations of different degree");
  for (Point i = 0; i < a.degree(); ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace pihall
