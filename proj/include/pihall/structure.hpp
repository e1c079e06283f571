#pragma once

#include <cstdint>
#include <vector>

#include "pihall/ints.hpp"
#include "pihall/perm.hpp"
#include "pihall/perm_group.hpp"

namespace pihall {

// One conjugacy class: its lexicographically least element as the
// representative, the common element order, and the class length.
struct ConjClass {
  Perm rep;
  Integer order;
  std::uint64_t size = 0;
};

// A pair of Sylow subgroups commuting elementwise, so their product is a
// nilpotent Hall subgroup for the two primes involved.
struct SylowPair {
  PermGroup p_part;
  PermGroup q_part;
};

// Orbit of a subgroup under conjugation, together with its stabilizer
// N_G(H) and one conjugating witness per orbit member in discovery order
// (witnesses[0] is the identity, for the subgroup itself).
struct ConjugateOrbit {
  std::uint64_t size = 0;
  PermGroup normalizer;
  std::vector<Perm> witnesses;
};

// Classes sorted by (element order, size, representative). Requires the
// element table, so the group order must stay within cap. Memoized per
// group; returned by value so temporaries are safe.
std::vector<ConjClass> conjugacy_classes(
    const PermGroup& g, std::uint64_t cap = kDefaultElementCap);

std::uint64_t num_classes(const PermGroup& g,
                          std::uint64_t cap = kDefaultElementCap);

PermGroup centralizer(const PermGroup& g, const Perm& x,
                      std::uint64_t cap = kDefaultElementCap);
PermGroup centralizer(const PermGroup& g, const PermGroup& h,
                      std::uint64_t cap = kDefaultElementCap);

PermGroup center(const PermGroup& g, std::uint64_t cap = kDefaultElementCap);
PermGroup derived_subgroup(const PermGroup& g);

// Smallest normal subgroup of g containing the seed elements.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);

bool is_subgroup(const PermGroup& g, const PermGroup& h);
bool is_normal(const PermGroup& g, const PermGroup& h);

// Image of g acting on the right cosets of the normal subgroup n, with
// cosets numbered by the lexicographic rank of their minimal
// representative. Throws NotNormal, or IndexExceedsCap when the index
// exceeds max_index.
PermGroup quotient(const PermGroup& g, const PermGroup& n,
                   std::uint64_t max_index = kMaxDegree);

// A Sylow p-subgroup, deterministic for a given group; throws
// PrimeDoesNotDivideOrder when p does not divide |g|.
PermGroup sylow(const PermGroup& g, std::uint64_t p,
                std::uint64_t cap = kDefaultElementCap);

std::uint64_t num_sylow(const PermGroup& g, std::uint64_t p,
                        std::uint64_t cap = kDefaultElementCap);

PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     std::uint64_t cap = kDefaultElementCap);

ConjugateOrbit subgroup_conjugation_orbit(
    const PermGroup& g, const PermGroup& h,
    std::uint64_t cap = kDefaultElementCap);

bool is_abelian(const PermGroup& g);
bool is_nilpotent(const PermGroup& g, std::uint64_t cap = kDefaultElementCap);
bool is_elementary_abelian(const PermGroup& g);

// True when g is abelian of order p*p and exponent p.
bool is_cp_x_cp(const PermGroup& g, std::uint64_t p);

// True when g is nonabelian of order 6 (there is only one such group).
bool is_sym3(const PermGroup& g);

}  // namespace pihall
