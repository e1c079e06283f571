#pragma once

#include <cstdint>
#include <vector>

#include "pihall/ints.hpp"
#include "pihall/perm.hpp"

namespace pihall::detail {

// Deterministic Schreier-Sims stabilizer chain over the natural base
// (0, 1, ..., n-1) stored sparsely: a level exists exactly for the minimal
// moved points of the strong generators, so base points are strictly
// ascending and every level fixes all points below its base pointwise.
// No randomness anywhere; identical generator lists build identical chains.
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;          // strong generators with min_moved >= base
    std::vector<Point> orbit;        // orbit of base, BFS discovery order
    std::vector<Perm> transversal;   // transversal[i] maps base to orbit[i]
    std::vector<std::int32_t> where; // point -> orbit index, -1 if outside

    // Transversal element mapping base to p, or nullptr if p is outside
    // the orbit.
    const Perm* rep(Point p) const {
      return where[p] < 0 ? nullptr
                          : &transversal[static_cast<std::size_t>(where[p])];
    }
  };

  StabChain(Point degree, const std::vector<Perm>& generators);

  Point degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  const Integer& order() const { return order_; }

  bool contains(const Perm& g) const;
  // Residue of sifting g through the chain; identity iff g is a member.
  Perm sift(const Perm& g) const;

  // Every element exactly once, sorted lexicographically by image array.
  // Throws OrderExceedsCap when the order exceeds cap.
  std::vector<Perm> elements(std::uint64_t cap) const;

 private:
  Perm sift_from(Perm h, std::size_t start) const;
  void rebuild_orbit(Level& level) const;
  std::size_t insert_strong(Perm h, std::size_t lo);
  // Recomputes the level's orbit and scans its Schreier generators.
  // Returns the index of the level to process next after a new strong
  // generator was inserted, or -1 when the level is closed.
  std::ptrdiff_t process_level(std::size_t li);
  void close();

  Point degree_;
  std::vector<Level> levels_;   // ascending base points
  std::vector<Perm> strong_;
  Integer order_ = 1;
};

}  // namespace pihall::detail
