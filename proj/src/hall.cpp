#include "pihall/hall.hpp"

#include <algorithm>
#include <utility>

#include "pihall/errors.hpp"
#include "pihall/group_cache.hpp"

namespace pihall {

PrimeSet effective_pi(const PermGroup& g, const PrimeSet& pi,
                      std::vector<std::uint64_t>* dropped) {
  const Integer& n = g.order();
  std::vector<std::uint64_t> kept;
  for (std::uint64_t p : pi.primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      kept.push_back(p);
    } else if (dropped) {
      dropped->push_back(p);
    }
  }
  return PrimeSet(std::move(kept));
}

namespace {

// Generators of h conjugated by w, if they all commute with the
// generators of every group in family.
std::optional<std::vector<Perm>> commuting_conjugate(
    const PermGroup& h, const Perm& w, const std::vector<PermGroup>& family) {
  const Perm wi = w.inverse();
  std::vector<Perm> conj;
  conj.reserve(h.generators().size());
  for (const Perm& s : h.generators()) {
    Perm c = wi * s * w;
    for (const PermGroup& other : family) {
      for (const Perm& t : other.generators()) {
        if (!commute(c, t)) return std::nullopt;
      }
    }
    conj.push_back(std::move(c));
  }
  return conj;
}

}  // namespace

std::optional<SylowPair> find_commuting_sylow_pair(const PermGroup& g,
                                                   std::uint64_t p,
                                                   std::uint64_t q,
                                                   std::uint64_t cap) {
  if (p == q) {
    throw InvalidParameters("a commuting Sylow pair needs distinct primes");
  }
  const std::uint64_t lo = std::min(p, q);
  const std::uint64_t hi = std::max(p, q);
  auto& cache = cache_of(g);
  auto it = cache.sylow_pair.find({lo, hi});
  if (it == cache.sylow_pair.end()) {
    const PermGroup lo_syl = sylow(g, lo, cap);
    const PermGroup hi_syl = sylow(g, hi, cap);
    std::optional<SylowPair> result;
    // Any commuting pair can be conjugated so its smaller-prime half is
    // the canonical Sylow subgroup, so fixing lo_syl loses nothing.
    const ConjugateOrbit orbit = subgroup_conjugation_orbit(g, hi_syl, cap);
    for (const Perm& w : orbit.witnesses) {
      if (auto conj = commuting_conjugate(hi_syl, w, {lo_syl})) {
        result = SylowPair{lo_syl, PermGroup(g.degree(), std::move(*conj))};
        break;
      }
    }
    it = cache.sylow_pair.emplace(std::make_pair(lo, hi), std::move(result))
             .first;
  }
  if (!it->second) return std::nullopt;
  if (p == lo) return *it->second;
  return SylowPair{it->second->q_part, it->second->p_part};
}

bool has_nilpotent_hall(const PermGroup& g, const PrimeSet& pi,
                        std::uint64_t cap) {
  const PrimeSet eff = effective_pi(g, pi);
  const auto& ps = eff.primes();
  if (ps.size() <= 1) return true;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (!find_commuting_sylow_pair(g, ps[i], ps[j], cap)) return false;
    }
  }
  return true;
}

bool has_abelian_hall(const PermGroup& g, const PrimeSet& pi,
                      std::uint64_t cap) {
  const PrimeSet eff = effective_pi(g, pi);
  for (std::uint64_t p : eff.primes()) {
    if (!is_abelian(sylow(g, p, cap))) return false;
  }
  return has_nilpotent_hall(g, eff, cap);
}

HallSearch construct_nilpotent_hall(const PermGroup& g, const PrimeSet& pi,
                                    std::uint64_t cap) {
  const PrimeSet eff = effective_pi(g, pi);
  const auto& ps = eff.primes();
  if (ps.empty()) return {HallStatus::witness, PermGroup(g.degree())};
  if (ps.size() == 1) return {HallStatus::witness, sylow(g, ps[0], cap)};

  std::vector<PermGroup> family;
  if (ps.size() == 2) {
    auto pair = find_commuting_sylow_pair(g, ps[0], ps[1], cap);
    if (!pair) return {HallStatus::none, std::nullopt};
    family = {std::move(pair->p_part), std::move(pair->q_part)};
  } else {
    // Greedy family assembly: fix the first Sylow subgroup, then for each
    // further prime take the first conjugate commuting with everything
    // collected so far. The greedy choice can dead-end even when a
    // nilpotent Hall subgroup exists, hence the pairwise re-check below.
    family.push_back(sylow(g, ps[0], cap));
    for (std::size_t k = 1; k < ps.size(); ++k) {
      const PermGroup syl = sylow(g, ps[k], cap);
      const ConjugateOrbit orbit = subgroup_conjugation_orbit(g, syl, cap);
      bool placed = false;
      for (const Perm& w : orbit.witnesses) {
        if (auto conj = commuting_conjugate(syl, w, family)) {
          family.push_back(PermGroup(g.degree(), std::move(*conj)));
          placed = true;
          break;
        }
      }
      if (!placed) {
        return {has_nilpotent_hall(g, eff, cap) ? HallStatus::exists_unwitnessed
                                                : HallStatus::none,
                std::nullopt};
      }
    }
  }

  std::vector<Perm> gens;
  for (const PermGroup& member : family) {
    gens.insert(gens.end(), member.generators().begin(),
                member.generators().end());
  }
  PermGroup hall(g.degree(), std::move(gens));
  if (hall.order() != pi_part(g.order(), eff)) {
    throw Error("internal error: assembled Hall subgroup has order " +
                hall.order().get_str() + ", expected " +
                pi_part(g.order(), eff).get_str());
  }
  return {HallStatus::witness, std::move(hall)};
}

}  // namespace pihall
