#include "pihall/perm_group.hpp"

#include <algorithm>

#include "pihall/errors.hpp"
#include "pihall/group_cache.hpp"
#include "pihall/primes.hpp"

namespace pihall {

namespace detail {

std::uint32_t ElementTable::index_of(const Perm& x) const {
  auto it = index.find(x);
  if (it == index.end()) throw ElementNotInGroup("element not in group");
  return it->second;
}

const StabChain& chain_of(const PermGroup& g) {
  Cache& c = cache_of(g);
  if (!c.chain) c.chain.emplace(g.degree(), g.generators());
  return *c.chain;
}

const ElementTable& table_of(const PermGroup& g, std::uint64_t cap) {
  Cache& c = cache_of(g);
  if (!c.table) {
    ElementTable t;
    t.elems = chain_of(g).elements(cap);
    t.index.reserve(t.elems.size());
    for (std::uint32_t i = 0; i < t.elems.size(); ++i) t.index.emplace(t.elems[i], i);
    t.conj_by_gen.resize(g.generators().size());
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      const Perm& s = g.generators()[k];
      const Perm si = s.inverse();
      auto& row = t.conj_by_gen[k];
      row.resize(t.elems.size());
      for (std::uint32_t i = 0; i < t.elems.size(); ++i) {
        row[i] = t.index.at(si * t.elems[i] * s);
      }
    }
    c.table = std::move(t);
  }
  return *c.table;
}

}  // namespace detail

detail::Cache& cache_of(const PermGroup& g) { return *g.cache_; }

PermGroup::PermGroup(Point degree)
    : degree_(degree), cache_(std::make_shared<detail::Cache>()) {
  if (degree < 1 || degree > kMaxDegree) {
    throw InvalidParameters("degree " + std::to_string(degree) +
                            " out of range [1, " + std::to_string(kMaxDegree) +
                            "]");
  }
}

PermGroup::PermGroup(Point degree, std::vector<Perm> generators)
    : PermGroup(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " +
                           std::to_string(degree));
    }
    if (!g.is_identity()) gens_.push_back(g);
  }
}

const Integer& PermGroup::order() const { return detail::chain_of(*this).order(); }

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) {
    throw DegreeMismatch("element degree " + std::to_string(g.degree()) +
                         " does not match group degree " +
                         std::to_string(degree_));
  }
  return detail::chain_of(*this).contains(g);
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (cache_->table && cache_->table->elems.size() <= cap) {
    return cache_->table->elems;
  }
  return detail::chain_of(*this).elements(cap);
}

const detail::StabChain& PermGroup::chain() const {
  return detail::chain_of(*this);
}

std::vector<std::uint64_t> prime_divisors(const PermGroup& g) {
  std::vector<std::uint64_t> primes;
  for (const auto& level : g.chain().levels()) {
    for (const auto& [p, e] : factor(level.orbit.size())) {
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
        primes.push_back(p);
      }
    }
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

}  // namespace pihall
