#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pihall/ints.hpp"

namespace pihall {

using Point = std::uint32_t;

// Permutation of {0, ..., n-1} stored as its image array. Composition is
// left to right: (a * b) maps i to b[a[i]], i.e. apply a first, then b.
// Points act on the right, so i^(a*b) == (i^a)^b.
class Perm {
 public:
  Perm() = default;
  explicit Perm(Point degree);                // identity
  explicit Perm(std::vector<Point> images);   // validates a bijection

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator[](Point i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  // Smallest point i with img[i] != i; degree() for the identity.
  Point min_moved() const;

  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);

  bool operator==(const Perm&) const = default;
  // Lexicographic order on image arrays; the tie-breaking order used
  // throughout the library.
  auto operator<=>(const Perm&) const = default;

  // Nontrivial cycles, each rotated to start at its smallest point and
  // listed in increasing order of that point.
  std::vector<std::vector<Point>> cycles() const;
  std::vector<std::uint64_t> cycle_lengths() const;
  // "(0 1 2)(3 4)"; "()" for the identity.
  std::string cycle_string() const;

 private:
  std::vector<Point> img_;
};

// lcm of the cycle lengths.
Integer element_order(const Perm& x);

// g^-1 * x * g
Perm conjugate(const Perm& x, const Perm& g);
// a^-1 * b^-1 * a * b
Perm commutator(const Perm& a, const Perm& b);

bool commute(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace pihall
