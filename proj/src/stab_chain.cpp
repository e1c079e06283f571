#include "pihall/stab_chain.hpp"

#include <algorithm>
#include <cassert>

#include "pihall/errors.hpp"

namespace pihall::detail {

StabChain::StabChain(Point degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree_)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " +
                           std::to_string(degree_));
    Perm r = sift(g);
    if (!r.is_identity()) insert_strong(std::move(r), 0);
  }
  close();
  for (const Level& level : levels_)
    order_ *= static_cast<unsigned long>(level.orbit.size());
}

Perm StabChain::sift(const Perm& g) const { return sift_from(g, 0); }

Perm StabChain::sift_from(Perm h, std::size_t start) const {
  for (std::size_t j = start; j < levels_.size(); ++j) {
    const Level& level = levels_[j];
    Point d = h[level.base];
    if (d == level.base) continue;
    const Perm* u = level.rep(d);
    if (u == nullptr) return h;
    h = h * u->inverse();
  }
  return h;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw DegreeMismatch("membership test needs degree " +
                         std::to_string(degree_) + ", got " +
                         std::to_string(g.degree()));
  return sift(g).is_identity();
}

void StabChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base);
  level.transversal.assign(1, Perm(degree_));
  level.where.assign(degree_, -1);
  level.where[level.base] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    for (const Perm& s : level.gens) {
      Point to = s[level.orbit[i]];
      if (level.where[to] < 0) {
        level.where[to] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(to);
        level.transversal.push_back(level.transversal[i] * s);
      }
    }
  }
}

std::size_t StabChain::insert_strong(Perm h, std::size_t lo) {
  Point m = h.min_moved();
  assert(m < degree_);
  std::size_t pos = 0;
  while (pos < levels_.size() && levels_[pos].base < m) ++pos;
  if (pos == levels_.size() || levels_[pos].base != m) {
    Level fresh;
    fresh.base = m;
    for (const Perm& t : strong_)
      if (t.min_moved() >= m) fresh.gens.push_back(t);
    levels_.insert(levels_.begin() + static_cast<std::ptrdiff_t>(pos),
                   std::move(fresh));
  }
  strong_.push_back(h);
  for (std::size_t j = lo; j <= pos; ++j) levels_[j].gens.push_back(h);
  for (std::size_t j = lo; j <= pos; ++j) rebuild_orbit(levels_[j]);
  return pos;
}

std::ptrdiff_t StabChain::process_level(std::size_t li) {
  rebuild_orbit(levels_[li]);
  for (std::size_t oi = 0; oi < levels_[li].orbit.size(); ++oi) {
    for (std::size_t si = 0; si < levels_[li].gens.size(); ++si) {
      const Level& level = levels_[li];
      const Perm& s = level.gens[si];
      Perm schreier =
          level.transversal[oi] * s * level.rep(s[level.orbit[oi]])->inverse();
      if (schreier.is_identity()) continue;
      Perm r = sift_from(std::move(schreier), li + 1);
      if (r.is_identity()) continue;
      // The residue fixes every point up to and including this level's
      // base, so it lands strictly deeper in the chain.
      return static_cast<std::ptrdiff_t>(insert_strong(std::move(r), li + 1));
    }
  }
  return -1;
}

void StabChain::close() {
  if (levels_.empty()) return;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    std::ptrdiff_t next = process_level(static_cast<std::size_t>(i));
    i = next < 0 ? i - 1 : next;
  }
}

std::vector<Perm> StabChain::elements(std::uint64_t cap) const {
  if (order_ > to_integer(cap)) throw OrderExceedsCap(order_.get_str(), cap);
  std::vector<Perm> acc{Perm(degree_)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(acc.size() * it->transversal.size());
    for (const Perm& u : it->transversal)
      for (const Perm& h : acc) next.push_back(h * u);
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  assert(Integer(static_cast<unsigned long>(acc.size())) == order_);
  return acc;
}

}  // namespace pihall::detail
