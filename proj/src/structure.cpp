#include "pihall/structure.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pihall/errors.hpp"
#include "pihall/group_cache.hpp"
#include "pihall/primes.hpp"
#include "pihall/stab_chain.hpp"

namespace pihall {

namespace {

using detail::ElementTable;

void require_same_degree(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) {
    throw DegreeMismatch("group degrees " + std::to_string(g.degree()) +
                         " and " + std::to_string(h.degree()) + " differ");
  }
}

bool is_prime_power_order(const Perm& x, std::uint64_t p) {
  return is_pi_number(element_order(x), PrimeSet({p}));
}

}  // namespace

std::vector<ConjClass> conjugacy_classes(const PermGroup& g,
                                         std::uint64_t cap) {
  auto& cache = cache_of(g);
  if (cache.classes) return *cache.classes;

  const ElementTable& t = detail::table_of(g, cap);
  std::vector<char> seen(t.elems.size(), 0);
  std::vector<ConjClass> classes;
  std::vector<std::uint32_t> work;
  // Scanning ascending means every class is met at its least element, so
  // the representative is the lexicographic minimum of its class.
  for (std::uint32_t i = 0; i < t.elems.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = 1;
    work.assign(1, i);
    std::uint64_t size = 0;
    while (!work.empty()) {
      const std::uint32_t x = work.back();
      work.pop_back();
      ++size;
      for (const auto& row : t.conj_by_gen) {
        const std::uint32_t y = row[x];
        if (!seen[y]) {
          seen[y] = 1;
          work.push_back(y);
        }
      }
    }
    classes.push_back({t.elems[i], element_order(t.elems[i]), size});
  }
  std::sort(classes.begin(), classes.end(),
            [](const ConjClass& a, const ConjClass& b) {
              if (a.order != b.order) return a.order < b.order;
              if (a.size != b.size) return a.size < b.size;
              return a.rep < b.rep;
            });
  cache.classes = std::move(classes);
  return *cache.classes;
}

std::uint64_t num_classes(const PermGroup& g, std::uint64_t cap) {
  return conjugacy_classes(g, cap).size();
}

PermGroup centralizer(const PermGroup& g, const Perm& x, std::uint64_t cap) {
  const ElementTable& t = detail::table_of(g, cap);
  const std::uint32_t start = t.index_of(x);
  const auto& gens = g.generators();

  // Orbit-stabilizer for the conjugation action on element indices; the
  // Schreier generators of the point stabilizer generate the centralizer.
  std::vector<std::int64_t> pos(t.elems.size(), -1);
  std::vector<std::uint32_t> members{start};
  std::vector<Perm> witness{Perm(g.degree())};
  pos[start] = 0;
  std::set<Perm> cgens;
  for (std::size_t w = 0; w < members.size(); ++w) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::uint32_t y = t.conj_by_gen[k][members[w]];
      if (pos[y] < 0) {
        pos[y] = static_cast<std::int64_t>(members.size());
        members.push_back(y);
        witness.push_back(witness[w] * gens[k]);
      } else {
        Perm s = witness[w] * gens[k] *
                 witness[static_cast<std::size_t>(pos[y])].inverse();
        if (!s.is_identity()) cgens.insert(std::move(s));
      }
    }
  }
  return PermGroup(g.degree(), {cgens.begin(), cgens.end()});
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h,
                      std::uint64_t cap) {
  require_same_degree(g, h);
  const ElementTable& t = detail::table_of(g, cap);
  std::vector<Perm> members;
  for (const Perm& e : t.elems) {
    bool ok = true;
    for (const Perm& s : h.generators()) {
      if (!commute(e, s)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(e);
  }
  return PermGroup(g.degree(), std::move(members));
}

PermGroup center(const PermGroup& g, std::uint64_t cap) {
  auto& cache = cache_of(g);
  if (!cache.center) cache.center = centralizer(g, g, cap);
  return *cache.center;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  std::vector<Perm> hgens;
  std::optional<detail::StabChain> chain;
  std::vector<Perm> queue = seeds;
  while (!queue.empty()) {
    Perm x = std::move(queue.back());
    queue.pop_back();
    if (x.degree() != g.degree()) {
      throw DegreeMismatch("seed degree does not match group degree");
    }
    if (chain ? chain->contains(x) : x.is_identity()) continue;
    hgens.push_back(x);
    chain.emplace(g.degree(), hgens);
    for (const Perm& s : g.generators()) queue.push_back(conjugate(hgens.back(), s));
  }
  return PermGroup(g.degree(), std::move(hgens));
}

PermGroup derived_subgroup(const PermGroup& g) {
  auto& cache = cache_of(g);
  if (!cache.derived) {
    std::vector<Perm> seeds;
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        seeds.push_back(commutator(gens[i], gens[j]));
      }
    }
    cache.derived = normal_closure(g, seeds);
  }
  return *cache.derived;
}

bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  require_same_degree(g, h);
  for (const Perm& x : h.generators()) {
    if (!g.contains(x)) return false;
  }
  return true;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) return false;
  for (const Perm& x : h.generators()) {
    for (const Perm& s : g.generators()) {
      if (!h.contains(conjugate(x, s))) return false;
    }
  }
  return true;
}

namespace {

// Lexicographically least element of the right coset N*g, found greedily
// along N's stabilizer chain: level by level, the image of everything
// below the next base point is frozen, and the transversal choice at the
// current base is the only remaining freedom.
Perm min_coset_rep(const detail::StabChain& nchain, Perm g) {
  for (const auto& level : nchain.levels()) {
    Point best = level.orbit.front();
    for (Point d : level.orbit) {
      if (g[d] < g[best]) best = d;
    }
    if (best != level.base) g = *level.rep(best) * g;
  }
  return g;
}

}  // namespace

PermGroup quotient(const PermGroup& g, const PermGroup& n,
                   std::uint64_t max_index) {
  require_same_degree(g, n);
  if (!is_normal(g, n)) throw NotNormal("subgroup is not normal");
  if (n.order() == 1) return g;
  const Integer index = g.order() / n.order();
  if (index == 1) return PermGroup(1);
  if (index > to_integer(std::min<std::uint64_t>(max_index, kMaxDegree))) {
    throw IndexExceedsCap("index " + index.get_str() + " exceeds cap " +
                          std::to_string(max_index));
  }

  const detail::StabChain& nchain = n.chain();
  std::set<Perm> reps;
  std::vector<Perm> work{Perm(g.degree())};
  reps.insert(work.front());
  while (!work.empty()) {
    const Perm r = std::move(work.back());
    work.pop_back();
    for (const Perm& s : g.generators()) {
      Perm nr = min_coset_rep(nchain, r * s);
      if (reps.insert(nr).second) work.push_back(std::move(nr));
    }
  }
  if (to_integer(reps.size()) != index) {
    throw Error("internal error: coset enumeration found " +
                std::to_string(reps.size()) + " cosets, expected " +
                index.get_str());
  }

  const std::vector<Perm> sorted(reps.begin(), reps.end());
  std::map<Perm, Point> rank;
  for (Point i = 0; i < sorted.size(); ++i) rank.emplace(sorted[i], i);
  const Point deg = static_cast<Point>(sorted.size());
  std::vector<Perm> qgens;
  for (const Perm& s : g.generators()) {
    std::vector<Point> img(deg);
    for (Point i = 0; i < deg; ++i) {
      img[i] = rank.at(min_coset_rep(nchain, sorted[i] * s));
    }
    qgens.push_back(Perm(std::move(img)));
  }
  return PermGroup(deg, std::move(qgens));
}

PermGroup sylow(const PermGroup& g, std::uint64_t p, std::uint64_t cap) {
  if (!is_prime(p)) {
    throw InvalidParameters(std::to_string(p) + " is not prime");
  }
  auto& cache = cache_of(g);
  if (auto it = cache.sylow.find(p); it != cache.sylow.end()) {
    return it->second;
  }
  const Integer& n = g.order();
  if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    throw PrimeDoesNotDivideOrder("prime " + std::to_string(p) +
                                  " does not divide group order " +
                                  n.get_str());
  }
  const Integer target = pi_part(n, PrimeSet({p}));
  if (target == n) {
    cache.sylow.emplace(p, g);
    return g;
  }

  // Grow a p-subgroup by repeated normalizer climbing: a p-subgroup that
  // is not yet Sylow has a p-element outside itself in its normalizer,
  // and adjoining one multiplies the order by at least p.
  const ElementTable& t = detail::table_of(g, cap);
  std::vector<Perm> pgens;
  for (const Perm& x : t.elems) {
    if (!x.is_identity() && is_prime_power_order(x, p)) {
      pgens.push_back(x);
      break;
    }
  }
  PermGroup pgrp(g.degree(), pgens);
  while (pgrp.order() < target) {
    const PermGroup norm = normalizer(g, pgrp, cap);
    bool grown = false;
    for (const Perm& y : norm.elements(cap)) {
      if (!y.is_identity() && is_prime_power_order(y, p) &&
          !pgrp.contains(y)) {
        pgens.push_back(y);
        pgrp = PermGroup(g.degree(), pgens);
        grown = true;
        break;
      }
    }
    if (!grown) {
      throw Error("internal error: Sylow subgroup construction stalled at order " +
                  pgrp.order().get_str());
    }
  }
  cache.sylow.emplace(p, pgrp);
  return pgrp;
}

ConjugateOrbit subgroup_conjugation_orbit(const PermGroup& g,
                                          const PermGroup& h,
                                          std::uint64_t cap) {
  if (!is_subgroup(g, h)) {
    throw ElementNotInGroup("conjugation orbit of a non-subgroup");
  }
  const auto& gens = g.generators();
  std::set<Perm> ngens;
  std::vector<Perm> witnesses{Perm(g.degree())};

  if (h.order() <= to_integer(10'000)) {
    // Conjugate subgroups are identified by their sorted element lists.
    const std::vector<Perm> helems = h.elements(cap);
    auto conj_all = [&](const Perm& u) {
      std::vector<Perm> out;
      out.reserve(helems.size());
      const Perm ui = u.inverse();
      for (const Perm& e : helems) out.push_back(ui * e * u);
      std::sort(out.begin(), out.end());
      return out;
    };
    std::map<std::vector<Perm>, std::size_t> seen;
    seen.emplace(helems, 0);
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
      const Perm u = witnesses[w];
      for (const Perm& s : gens) {
        const Perm us = u * s;
        auto [it, fresh] = seen.emplace(conj_all(us), witnesses.size());
        if (fresh) {
          witnesses.push_back(us);
        } else {
          Perm schreier = us * witnesses[it->second].inverse();
          if (!schreier.is_identity()) ngens.insert(std::move(schreier));
        }
      }
    }
  } else {
    // Too large to list: identify conjugates by membership of conjugated
    // generators instead. Quadratic in the orbit length, which stays tiny
    // for subgroups this big.
    std::vector<PermGroup> found{h};
    auto find_conjugate = [&](const Perm& u) -> std::ptrdiff_t {
      const Perm ui = u.inverse();
      for (std::size_t i = 0; i < found.size(); ++i) {
        bool all_in = true;
        for (const Perm& s : h.generators()) {
          if (!found[i].contains(ui * s * u)) {
            all_in = false;
            break;
          }
        }
        if (all_in) return static_cast<std::ptrdiff_t>(i);
      }
      return -1;
    };
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
      const Perm u = witnesses[w];
      for (const Perm& s : gens) {
        const Perm us = u * s;
        const std::ptrdiff_t at = find_conjugate(us);
        if (at < 0) {
          const Perm ui = us.inverse();
          std::vector<Perm> cgens;
          for (const Perm& x : h.generators()) cgens.push_back(ui * x * us);
          found.push_back(PermGroup(g.degree(), std::move(cgens)));
          witnesses.push_back(us);
        } else {
          Perm schreier =
              us * witnesses[static_cast<std::size_t>(at)].inverse();
          if (!schreier.is_identity()) ngens.insert(std::move(schreier));
        }
      }
    }
  }

  const std::uint64_t size = witnesses.size();
  PermGroup norm(g.degree(), {ngens.begin(), ngens.end()});
  return ConjugateOrbit{size, std::move(norm), std::move(witnesses)};
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     std::uint64_t cap) {
  return subgroup_conjugation_orbit(g, h, cap).normalizer;
}

std::uint64_t num_sylow(const PermGroup& g, std::uint64_t p,
                        std::uint64_t cap) {
  auto& cache = cache_of(g);
  if (auto it = cache.sylow_count.find(p); it != cache.sylow_count.end()) {
    return it->second;
  }
  const PermGroup syl = sylow(g, p, cap);
  const std::uint64_t count =
      syl.order() == g.order()
          ? 1
          : subgroup_conjugation_orbit(g, syl, cap).size;
  cache.sylow_count.emplace(p, count);
  return count;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

bool is_nilpotent(const PermGroup& g, std::uint64_t cap) {
  const auto primes = prime_divisors(g);
  if (primes.size() <= 1) return true;
  for (std::uint64_t p : primes) {
    if (!is_normal(g, sylow(g, p, cap))) return false;
  }
  return true;
}

bool is_elementary_abelian(const PermGroup& g) {
  if (!is_abelian(g)) return false;
  if (g.order() == 1) return true;
  const auto primes = prime_divisors(g);
  if (primes.size() != 1) return false;
  for (const Perm& s : g.generators()) {
    if (element_order(s) != to_integer(primes[0])) return false;
  }
  return true;
}

bool is_cp_x_cp(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) {
    throw InvalidParameters(std::to_string(p) + " is not prime");
  }
  return g.order() == to_integer(p) * to_integer(p) &&
         is_elementary_abelian(g);
}

bool is_sym3(const PermGroup& g) {
  return g.order() == 6 && !is_abelian(g);
}

}  // namespace pihall
