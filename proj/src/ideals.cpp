#include "bck/ideals.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

namespace bck {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Element x) { return Mask{1} << x; }

void require_same_universe(const FiniteCbckAlgebra& a, const ElementSet& s) {
  if (s.universe() != a.size())
    throw StructureError("set over " + std::to_string(s.universe()) +
                         " elements used with an algebra of size " + std::to_string(a.size()));
}

bool mask_is_ideal(const FiniteCbckAlgebra& a, Mask m) {
  if ((m & 1) == 0) return false;
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x) {
    if (m & bit(x)) continue;
    for (Element y = 0; y < n; ++y)
      if ((m & bit(y)) && (m & bit(a.op(x, y)))) return false;
  }
  return true;
}

Mask mask_closure(const FiniteCbckAlgebra& a, Mask m) {
  const std::size_t n = a.size();
  m |= 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element x = 0; x < n; ++x) {
      if (m & bit(x)) continue;
      for (Element y = 0; y < n; ++y) {
        if ((m & bit(y)) && (m & bit(a.op(x, y)))) {
          m |= bit(x);
          grew = true;
          break;
        }
      }
    }
  }
  return m;
}

bool mask_is_prime(const FiniteCbckAlgebra& a, Mask m) {
  const std::size_t n = a.size();
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  if (m == all) return false;
  for (Element x = 0; x < n; ++x) {
    if (m & bit(x)) continue;
    for (Element y = 0; y < n; ++y)
      if (!(m & bit(y)) && (m & bit(a.meet(x, y)))) return false;
  }
  return true;
}

}  // namespace

bool is_ideal(const FiniteCbckAlgebra& a, const ElementSet& s) {
  require_same_universe(a, s);
  if (!s.contains(0)) return false;
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x) {
    if (s.contains(x)) continue;
    for (Element y = 0; y < n; ++y)
      if (s.contains(y) && s.contains(a.op(x, y))) return false;
  }
  return true;
}

ElementSet generated_ideal(const FiniteCbckAlgebra& a, const ElementSet& s) {
  require_same_universe(a, s);
  ElementSet out = s;
  out.insert(0);
  const std::size_t n = a.size();
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element x = 0; x < n; ++x) {
      if (out.contains(x)) continue;
      for (Element y = 0; y < n; ++y) {
        if (out.contains(y) && out.contains(a.op(x, y))) {
          out.insert(x);
          grew = true;
          break;
        }
      }
    }
  }
  return out;
}

std::optional<std::vector<Element>> membership_witness(const FiniteCbckAlgebra& a, Element x,
                                                       const ElementSet& s) {
  require_same_universe(a, s);
  const std::size_t n = a.size();
  if (x >= n) throw StructureError("element " + std::to_string(x) + " is not in the algebra");
  const auto generators = s.members();

  // BFS over current values. Expanding generators in ascending order from a
  // lexicographically sorted frontier makes the first path found to each
  // value the lexicographically least shortest one.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<Element> via(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<Element> queue{x};
  seen[x] = true;
  while (!queue.empty() && !seen[0]) {
    const Element v = queue.front();
    queue.pop_front();
    for (Element g : generators) {
      const Element w = a.op(v, g);
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      via[w] = g;
      queue.push_back(w);
    }
  }
  if (!seen[0]) return std::nullopt;
  std::vector<Element> path;
  for (Element v = 0; v != x; v = parent[v]) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());

  Element check = x;
  for (Element g : path) check = a.op(check, g);
  if (check != 0) throw InternalError("membership witness does not reduce to 0");
  return path;
}

std::optional<std::size_t> IdealLattice::index_of(const ElementSet& ideal) const {
  const auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal, [](const auto& l, const auto& r) {
    return l.count() != r.count() ? l.count() < r.count() : l < r;
  });
  if (it == ideals.end() || *it != ideal) return std::nullopt;
  return static_cast<std::size_t>(it - ideals.begin());
}

std::vector<ElementSet> IdealLattice::primes() const {
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (prime[i]) out.push_back(ideals[i]);
  return out;
}

IdealLattice all_ideals(const FiniteCbckAlgebra& a, std::size_t element_guard) {
  const std::size_t n = a.size();
  if (n > element_guard || n > 64)
    throw GuardError("ideal enumeration is limited to " +
                     std::to_string(std::min<std::size_t>(element_guard, 64)) +
                     " elements; algebra has " + std::to_string(n));

  std::vector<Mask> strictly_below(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (y != x && a.leq(y, x)) strictly_below[x] |= bit(y);

  // Linear extension of the derived order; 0 comes first.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
    return std::popcount(strictly_below[x]) < std::popcount(strictly_below[y]);
  });

  std::vector<Mask> found;
  std::size_t visited = 0;
  auto extend = [&](auto&& self, std::size_t i, Mask current) -> void {
    if (i == n) {
      if (++visited > kMaxDownSets) throw GuardError("too many down-sets to enumerate ideals");
      if (mask_is_ideal(a, current)) {
        if (found.size() >= kMaxIdealCount)
          throw GuardError("algebra has more than " + std::to_string(kMaxIdealCount) + " ideals");
        found.push_back(current);
      }
      return;
    }
    const Element v = order[i];
    if (v == 0) {
      self(self, i + 1, current | 1);
      return;
    }
    self(self, i + 1, current);
    if ((strictly_below[v] & ~current) == 0) self(self, i + 1, current | bit(v));
  };
  extend(extend, 0, 0);

  std::sort(found.begin(), found.end(), [&](Mask l, Mask r) {
    if (std::popcount(l) != std::popcount(r)) return std::popcount(l) < std::popcount(r);
    return ElementSet::from_mask(n, l) < ElementSet::from_mask(n, r);
  });
  const std::size_t k = found.size();
  std::unordered_map<Mask, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(found[i], i);
  std::unordered_map<Mask, std::size_t> closure_cache;
  auto join_index = [&](Mask u) {
    if (auto it = index.find(u); it != index.end()) return it->second;
    if (auto it = closure_cache.find(u); it != closure_cache.end()) return it->second;
    const auto it = index.find(mask_closure(a, u));
    if (it == index.end()) throw InternalError("closure of an ideal union was not enumerated");
    closure_cache.emplace(u, it->second);
    return it->second;
  };

  std::vector<std::uint8_t> leq(k * k);
  std::vector<std::uint32_t> meet(k * k);
  std::vector<std::uint32_t> join(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      leq[i * k + j] = (found[i] & ~found[j]) == 0;
      const auto m = index.find(found[i] & found[j]);
      if (m == index.end()) throw InternalError("intersection of ideals was not enumerated");
      meet[i * k + j] = static_cast<std::uint32_t>(m->second);
      join[i * k + j] = static_cast<std::uint32_t>(join_index(found[i] | found[j]));
    }
  }

  IdealLattice out;
  out.lattice = FiniteDistLattice(k, std::move(leq), std::move(meet), std::move(join));
  out.ideals.reserve(k);
  out.prime.resize(k);
  out.maximal.resize(k);
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  for (std::size_t i = 0; i < k; ++i) {
    out.ideals.push_back(ElementSet::from_mask(n, found[i]));
    out.prime[i] = mask_is_prime(a, found[i]);
    bool maximal = found[i] != all;
    for (std::size_t j = 0; j < k && maximal; ++j)
      maximal = !(found[j] != all && found[j] != found[i] && (found[i] & ~found[j]) == 0);
    out.maximal[i] = maximal;
  }
  return out;
}

bool is_prime(const FiniteCbckAlgebra& a, const ElementSet& ideal) {
  if (!is_ideal(a, ideal)) throw PreconditionError(ideal.to_string() + " is not an ideal");
  if (ideal.is_full()) return false;
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x) {
    if (ideal.contains(x)) continue;
    for (Element y = 0; y < n; ++y)
      if (!ideal.contains(y) && ideal.contains(a.meet(x, y))) return false;
  }
  return true;
}

std::vector<ElementSet> prime_ideals(const FiniteCbckAlgebra& a, std::size_t element_guard) {
  return all_ideals(a, element_guard).primes();
}

IrreducibilityReport irreducible_and_meetprime_check(const IdealLattice& l,
                                                     const ElementSet& ideal) {
  const auto idx = l.index_of(ideal);
  if (!idx) throw PreconditionError(ideal.to_string() + " is not an ideal of this lattice");
  IrreducibilityReport r;
  if (ideal.is_full()) return r;
  r.irreducible = true;
  r.meet_prime = true;
  const std::size_t k = l.ideals.size();
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t h = 0; h < k; ++h) {
      const std::size_t m = l.lattice.meet(j, h);
      if (m == *idx && j != *idx && h != *idx) r.irreducible = false;
      if (l.lattice.leq(m, *idx) && !l.lattice.leq(j, *idx) && !l.lattice.leq(h, *idx))
        r.meet_prime = false;
    }
  }
  return r;
}

ElementSet annihilator(const FiniteCbckAlgebra& a, const ElementSet& s) {
  require_same_universe(a, s);
  ElementSet out(a.size());
  const auto members = s.members();
  for (Element x = 0; x < a.size(); ++x) {
    bool kills_all = true;
    for (Element m : members) {
      if (a.meet(x, m) != 0) {
        kills_all = false;
        break;
      }
    }
    if (kills_all) out.insert(x);
  }
  return out;
}

InvolutoryReport is_involutory(const FiniteCbckAlgebra& a, std::size_t element_guard) {
  InvolutoryReport r;
  for (const auto& ideal : all_ideals(a, element_guard).ideals) {
    auto double_ann = annihilator(a, annihilator(a, ideal));
    if (double_ann != ideal) r.holds = false;
    r.per_ideal.emplace_back(ideal, std::move(double_ann));
  }
  return r;
}

Simplicity simplicity(const FiniteCbckAlgebra& a, std::size_t element_guard) {
  if (a.size() == 1) return Simplicity::trivial;
  // Simple iff every nonzero element generates A; cheaper than enumeration
  // and equivalent, since any proper nonzero ideal contains such an element.
  if (a.size() > element_guard) throw GuardError("algebra exceeds the ideal guard");
  for (Element x = 1; x < a.size(); ++x)
    if (!generated_ideal(a, ElementSet(a.size(), {x})).is_full()) return Simplicity::not_simple;
  return Simplicity::simple;
}

bool is_simple(const FiniteCbckAlgebra& a, std::size_t element_guard) {
  return simplicity(a, element_guard) == Simplicity::simple;
}

bool chain_simplicity_criterion(const FiniteCbckAlgebra& a) {
  if (!is_chain(a)) throw PreconditionError("the chain criterion needs a cBCK-chain");
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 1; y < n; ++y)
      if (a.power(x, y, n) != 0) return false;
  return true;
}

std::vector<ElementSet> congruence_from_ideal(const FiniteCbckAlgebra& a, const ElementSet& ideal) {
  if (!is_ideal(a, ideal)) throw PreconditionError(ideal.to_string() + " is not an ideal");
  const std::size_t n = a.size();
  auto related = [&](Element x, Element y) {
    return ideal.contains(a.op(x, y)) && ideal.contains(a.op(y, x));
  };
  std::vector<ElementSet> classes;
  std::vector<bool> placed(n, false);
  for (Element x = 0; x < n; ++x) {
    if (placed[x]) continue;
    ElementSet cls(n);
    for (Element y = 0; y < n; ++y) {
      if (!related(x, y)) continue;
      if (placed[y]) throw InternalError("congruence classes overlap");
      cls.insert(y);
      placed[y] = true;
    }
    const auto members = cls.members();
    for (Element y : members)
      for (Element z : members)
        if (!related(y, z)) throw InternalError("congruence relation is not transitive");
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace bck
