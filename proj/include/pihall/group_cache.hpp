#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pihall/perm.hpp"
#include "pihall/perm_group.hpp"
#include "pihall/stab_chain.hpp"
#include "pihall/structure.hpp"

namespace pihall {

namespace detail {

// Every element of a small group, indexed both ways, plus the conjugation
// action of each generator as a permutation of element indices. This is
// what makes class and centralizer computations integer work.
struct ElementTable {
  std::vector<Perm> elems;  // sorted lexicographically
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  // conj_by_gen[k][i] = position of elems[i]^gens[k] in elems
  std::vector<std::vector<std::uint32_t>> conj_by_gen;

  std::uint32_t index_of(const Perm& x) const;
};

// Lazily filled per-group memo, shared between copies of a PermGroup.
struct Cache {
  std::optional<StabChain> chain;
  std::optional<ElementTable> table;
  std::optional<std::vector<ConjClass>> classes;
  std::optional<PermGroup> center;
  std::optional<PermGroup> derived;
  std::map<std::uint64_t, PermGroup> sylow;
  std::map<std::uint64_t, std::uint64_t> sylow_count;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::optional<SylowPair>>
      sylow_pair;
};

const StabChain& chain_of(const PermGroup& g);
const ElementTable& table_of(const PermGroup& g, std::uint64_t cap);

}  // namespace detail

detail::Cache& cache_of(const PermGroup& g);

}  // namespace pihall
