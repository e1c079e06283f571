#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pihall/ints.hpp"
#include "pihall/perm.hpp"

namespace pihall {

inline constexpr std::uint64_t kDefaultElementCap = 2'000'000;
inline constexpr Point kMaxDegree = 10'000;

namespace detail {
class StabChain;
struct Cache;
}  // namespace detail

// Permutation group on {0, ..., degree-1} given by generators. The
// stabilizer chain and everything derived from it are computed lazily and
// memoized; copies share the memo. Construction of the lazy state is not
// thread safe, queries on a fully built group are.
class PermGroup {
 public:
  explicit PermGroup(Point degree);  // trivial group
  PermGroup(Point degree, std::vector<Perm> generators);

  Point degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const Integer& order() const;
  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm& g) const;

  // Every element exactly once, sorted lexicographically by image array.
  // Throws OrderExceedsCap when the order exceeds cap.
  std::vector<Perm> elements(std::uint64_t cap = kDefaultElementCap) const;

  const detail::StabChain& chain() const;

 private:
  friend detail::Cache& cache_of(const PermGroup& g);

  Point degree_ = 1;
  std::vector<Perm> gens_;
  std::shared_ptr<detail::Cache> cache_;
};

// Ascending prime divisors of the group order, read off the chain's
// fundamental orbit lengths, so no large integer ever gets factored.
std::vector<std::uint64_t> prime_divisors(const PermGroup& g);

}  // namespace pihall
