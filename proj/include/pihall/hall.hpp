#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pihall/perm_group.hpp"
#include "pihall/primes.hpp"
#include "pihall/structure.hpp"

namespace pihall {

// pi restricted to the primes actually dividing |g|; primes dropped this
// way are appended to *dropped when given, so callers can warn about them.
PrimeSet effective_pi(const PermGroup& g, const PrimeSet& pi,
                      std::vector<std::uint64_t>* dropped = nullptr);

// Searches for a Sylow p-subgroup and a Sylow q-subgroup that commute
// elementwise, fixing the canonical Sylow subgroup of the smaller prime
// and scanning conjugates of the other in a deterministic order. Their
// product is a nilpotent Hall {p,q}-subgroup, and one exists exactly when
// this search succeeds. p_part always belongs to p, q_part to q.
std::optional<SylowPair> find_commuting_sylow_pair(
    const PermGroup& g, std::uint64_t p, std::uint64_t q,
    std::uint64_t cap = kDefaultElementCap);

// Existence of a nilpotent (resp. abelian) Hall pi-subgroup. Nilpotent
// existence reduces to the two-prime case: it holds exactly when every
// pair of primes from pi admits a commuting Sylow pair. Abelian existence
// additionally needs every Sylow subgroup for pi abelian.
bool has_nilpotent_hall(const PermGroup& g, const PrimeSet& pi,
                        std::uint64_t cap = kDefaultElementCap);
bool has_abelian_hall(const PermGroup& g, const PrimeSet& pi,
                      std::uint64_t cap = kDefaultElementCap);

enum class HallStatus {
  witness,             // subgroup constructed explicitly
  exists_unwitnessed,  // existence proven pairwise, greedy assembly failed
  none,                // no nilpotent Hall pi-subgroup exists
};

struct HallSearch {
  HallStatus status;
  std::optional<PermGroup> subgroup;  // set exactly when status == witness
};

// Tries to assemble a nilpotent Hall pi-subgroup as a product of pairwise
// elementwise-commuting Sylow subgroups, greedily for three or more
// primes.
HallSearch construct_nilpotent_hall(const PermGroup& g, const PrimeSet& pi,
                                    std::uint64_t cap = kDefaultElementCap);

}  // namespace pihall
