#include "bck/duality.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>

#include "bck/space.hpp"

namespace bck {

// ---- FinitePoset -----------------------------------------------------------

FinitePoset FinitePoset::from_relation(std::size_t n, std::vector<std::uint8_t> rel,
                                       bool validate) {
  if (rel.size() != n * n) throw StructureError("relation must have n*n entries");
  FinitePoset p;
  p.n_ = n;
  p.rel_ = std::move(rel);
  for (auto& v : p.rel_) v = v != 0;
  if (!validate) return p;
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.leq(a, a)) throw StructureError("order is not reflexive at " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && p.leq(a, b) && p.leq(b, a))
        throw StructureError("order is not antisymmetric at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
      if (!p.leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (p.leq(b, c) && !p.leq(a, c))
          throw StructureError("order is not transitive at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
  return p;
}

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) {
  const std::size_t n = leq.size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a].size() != n) throw StructureError("order matrix is not square");
    for (std::size_t b = 0; b < n; ++b) rel[a * n + b] = leq[a][b];
  }
  *this = from_relation(n, std::move(rel));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) rel[a * n + b] = 1;
  return from_relation(n, std::move(rel), false);
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t a = 0; a < n; ++a) rel[a * n + a] = 1;
  return from_relation(n, std::move(rel), false);
}

FinitePoset FinitePoset::dual() const {
  std::vector<std::uint8_t> rel(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) rel[a * n_ + b] = rel_[b * n_ + a];
  return from_relation(n_, std::move(rel), false);
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n_ && direct; ++c) direct = !(less(a, c) && less(c, b));
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::vector<bool>> FinitePoset::matrix() const {
  std::vector<std::vector<bool>> m(n_, std::vector<bool>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) m[a][b] = leq(a, b);
  return m;
}

bool FinitePoset::is_antichain() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (less(a, b)) return false;
  return true;
}

bool FinitePoset::is_chain() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

// ---- FiniteDistLattice -----------------------------------------------------

FiniteDistLattice::FiniteDistLattice(std::size_t n, std::vector<std::uint8_t> leq,
                                     std::vector<std::uint32_t> meet,
                                     std::vector<std::uint32_t> join)
    : n_(n), leq_(std::move(leq)), meet_(std::move(meet)), join_(std::move(join)) {
  if (n_ == 0) throw StructureError("a lattice needs at least one element");
  if (leq_.size() != n_ * n_ || meet_.size() != n_ * n_ || join_.size() != n_ * n_)
    throw StructureError("lattice tables must have n*n entries");
  for (auto& v : leq_) v = v != 0;

  bool found_bottom = false;
  bool found_top = false;
  for (std::size_t a = 0; a < n_; ++a) {
    bool below_all = true;
    bool above_all = true;
    for (std::size_t b = 0; b < n_; ++b) {
      below_all = below_all && this->leq(a, b);
      above_all = above_all && this->leq(b, a);
      const std::size_t m = this->meet(a, b);
      const std::size_t j = this->join(a, b);
      if (m >= n_ || j >= n_) throw StructureError("lattice table entry out of range");
      if (a != b && this->leq(a, b) && this->leq(b, a))
        throw StructureError("lattice order is not antisymmetric");
      if (m != this->meet(b, a) || j != this->join(b, a))
        throw StructureError("meet or join is not commutative");
      if (!this->leq(m, a) || !this->leq(m, b) || !this->leq(a, j) || !this->leq(b, j))
        throw StructureError("meet or join is not a bound of its arguments");
      if (this->meet(a, j) != a || this->join(a, m) != a)
        throw StructureError("absorption fails");
      if ((m == a) != this->leq(a, b)) throw StructureError("meet disagrees with the order");
    }
    if (!this->leq(a, a) || this->meet(a, a) != a || this->join(a, a) != a)
      throw StructureError("lattice is not idempotent/reflexive at " + std::to_string(a));
    if (below_all) {
      bottom_ = a;
      found_bottom = true;
    }
    if (above_all) {
      top_ = a;
      found_top = true;
    }
  }
  if (!found_bottom || !found_top) throw StructureError("lattice is not bounded");
}

FiniteDistLattice FiniteDistLattice::from_order(const FinitePoset& order) {
  const std::size_t n = order.size();
  std::vector<std::uint8_t> leq(n * n);
  std::vector<std::uint32_t> meet(n * n);
  std::vector<std::uint32_t> join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a * n + b] = order.leq(a, b);
      constexpr std::size_t kNone = static_cast<std::size_t>(-1);
      std::size_t glb = kNone;
      std::size_t lub = kNone;
      for (std::size_t c = 0; c < n; ++c) {
        if (order.leq(c, a) && order.leq(c, b) && (glb == kNone || order.leq(glb, c))) glb = c;
        if (order.leq(a, c) && order.leq(b, c) && (lub == kNone || order.leq(c, lub))) lub = c;
      }
      // The scan keeps a maximal lower bound; it is the glb only if it
      // dominates every lower bound.
      for (std::size_t c = 0; c < n; ++c) {
        if (glb != kNone && order.leq(c, a) && order.leq(c, b) && !order.leq(c, glb)) glb = kNone;
        if (lub != kNone && order.leq(a, c) && order.leq(b, c) && !order.leq(lub, c)) lub = kNone;
      }
      if (glb == kNone || lub == kNone)
        throw StructureError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                             ") has no " + (glb == kNone ? "meet" : "join"));
      meet[a * n + b] = static_cast<std::uint32_t>(glb);
      join[a * n + b] = static_cast<std::uint32_t>(lub);
    }
  }
  return FiniteDistLattice(n, std::move(leq), std::move(meet), std::move(join));
}

FinitePoset FiniteDistLattice::order() const { return FinitePoset::from_relation(n_, leq_, false); }

bool satisfies_lattice_laws(const FiniteDistLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t m = l.meet(a, b);
      const std::size_t j = l.join(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (l.leq(c, a) && l.leq(c, b) && !l.leq(c, m)) return false;
        if (l.leq(a, c) && l.leq(b, c) && !l.leq(j, c)) return false;
        if (l.meet(m, c) != l.meet(a, l.meet(b, c))) return false;
        if (l.join(j, c) != l.join(a, l.join(b, c))) return false;
        for (std::size_t d : {a, b, c})
          for (std::size_t e : {a, b, c})
            if (l.leq(d, e) && l.leq(e, c) && !l.leq(d, c)) return false;
      }
    }
  }
  return true;
}

bool is_distributive(const FiniteDistLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
  return true;
}

// ---- irreducibles ----------------------------------------------------------

MeetIrreducibles meet_irreducibles(const FiniteDistLattice& l) {
  const std::size_t n = l.size();
  MeetIrreducibles out;
  for (std::size_t m = 0; m < n; ++m) {
    if (m == l.top()) continue;
    // m is meet-irreducible iff the meet of everything strictly above it is
    // still strictly above it (a unique upper cover).
    std::size_t above = l.top();
    for (std::size_t a = 0; a < n; ++a)
      if (a != m && l.leq(m, a)) above = l.meet(above, a);
    if (above != m) out.elements.push_back(m);
  }
  const std::size_t k = out.elements.size();
  std::vector<std::uint8_t> rel(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) rel[i * k + j] = l.leq(out.elements[i], out.elements[j]);
  out.poset = FinitePoset::from_relation(k, std::move(rel), false);
  return out;
}

std::vector<bool> join_irreducible_flags(const FiniteDistLattice& l) {
  const std::size_t n = l.size();
  std::vector<bool> flags(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == l.bottom()) continue;
    std::size_t below = l.bottom();
    for (std::size_t a = 0; a < n; ++a)
      if (a != j && l.leq(a, j)) below = l.join(below, a);
    flags[j] = below != j;
  }
  return flags;
}

// ---- Birkhoff --------------------------------------------------------------

namespace {

std::uint32_t as_index(std::size_t i) { return static_cast<std::uint32_t>(i); }

/// Lattice of a family of bitmask sets closed under & and |, ordered by inclusion.
FiniteDistLattice set_lattice(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const std::size_t n = sets.size();
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(sets[i], i);
  std::vector<std::uint8_t> leq(n * n);
  std::vector<std::uint32_t> meet(n * n);
  std::vector<std::uint32_t> join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a * n + b] = (sets[a] & ~sets[b]) == 0;
      const auto m = index.find(sets[a] & sets[b]);
      const auto j = index.find(sets[a] | sets[b]);
      if (m == index.end() || j == index.end())
        throw StructureError("set family is not closed under intersection and union");
      meet[a * n + b] = as_index(m->second);
      join[a * n + b] = as_index(j->second);
    }
  }
  return FiniteDistLattice(n, std::move(leq), std::move(meet), std::move(join));
}

}  // namespace

FiniteDistLattice lattice_from_poset(const FinitePoset& poset, std::size_t guard) {
  const std::size_t n = poset.size();
  if (n > 63) throw GuardError("Birkhoff construction is limited to 63-element posets");
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (poset.less(b, a)) below[a] |= std::uint64_t{1} << b;

  // A linear extension: fewer predecessors first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(below[a]) < std::popcount(below[b]);
  });

  // Every prefix decision extends to a down-set (exclude the rest), so the
  // search visits O(n * #down-sets) states.
  std::vector<std::uint64_t> downsets;
  auto extend = [&](auto&& self, std::size_t i, std::uint64_t current) -> void {
    if (i == n) {
      if (downsets.size() >= guard)
        throw GuardError("poset has more than " + std::to_string(guard) + " down-sets");
      downsets.push_back(current);
      return;
    }
    const std::size_t v = order[i];
    self(self, i + 1, current);
    if ((below[v] & ~current) == 0) self(self, i + 1, current | (std::uint64_t{1} << v));
  };
  extend(extend, 0, 0);
  return set_lattice(std::move(downsets));
}

// ---- isomorphism -----------------------------------------------------------

namespace {

using Signature = std::tuple<std::size_t, std::size_t, int, int>;

template <typename LeqA, typename LeqB>
std::optional<std::vector<std::size_t>> order_iso(std::size_t n, LeqA leq_a, LeqB leq_b,
                                                  const std::vector<Signature>& sig_a,
                                                  const std::vector<Signature>& sig_b) {
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sig_a[x] < sig_a[y]; });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(n, kUnset);
  std::vector<bool> used(n, false);

  auto assign = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t a = order[depth];
    for (std::size_t b = 0; b < n; ++b) {
      if (used[b] || sig_b[b] != sig_a[a]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t a2 = order[k];
        const std::size_t b2 = map[a2];
        consistent = leq_a(a, a2) == leq_b(b, b2) && leq_a(a2, a) == leq_b(b2, b);
      }
      if (!consistent) continue;
      map[a] = b;
      used[b] = true;
      if (self(self, depth + 1)) return true;
      used[b] = false;
      map[a] = kUnset;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return map;
}

std::vector<Signature> poset_signatures(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<Signature> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t down = 0;
    std::size_t up = 0;
    for (std::size_t b = 0; b < n; ++b) {
      down += p.leq(b, a);
      up += p.leq(a, b);
    }
    out[a] = {down, up, 0, 0};
  }
  return out;
}

std::vector<Signature> lattice_signatures(const FiniteDistLattice& l) {
  auto out = poset_signatures(l.order());
  const auto mi = meet_irreducibles(l);
  const auto ji = join_irreducible_flags(l);
  for (std::size_t e : mi.elements) std::get<2>(out[e]) = 1;
  for (std::size_t a = 0; a < l.size(); ++a) std::get<3>(out[a]) = ji[a] ? 1 : 0;
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_iso(const FinitePoset& a, const FinitePoset& b,
                                                  std::size_t guard) {
  if (a.size() > guard || b.size() > guard)
    throw GuardError("isomorphism search is limited to " + std::to_string(guard) + " elements");
  if (a.size() != b.size()) return std::nullopt;
  return order_iso(
      a.size(), [&](std::size_t x, std::size_t y) { return a.leq(x, y); },
      [&](std::size_t x, std::size_t y) { return b.leq(x, y); }, poset_signatures(a),
      poset_signatures(b));
}

std::optional<std::vector<std::size_t>> lattice_iso(const FiniteDistLattice& a,
                                                    const FiniteDistLattice& b,
                                                    std::size_t guard) {
  if (a.size() > guard || b.size() > guard)
    throw GuardError("isomorphism search is limited to " + std::to_string(guard) + " elements");
  if (a.size() != b.size()) return std::nullopt;
  return order_iso(
      a.size(), [&](std::size_t x, std::size_t y) { return a.leq(x, y); },
      [&](std::size_t x, std::size_t y) { return b.leq(x, y); }, lattice_signatures(a),
      lattice_signatures(b));
}

// ---- named lattices --------------------------------------------------------

FiniteDistLattice boolean_lattice(std::size_t n) {
  if (n > 12) throw GuardError("boolean_lattice is limited to n <= 12");
  std::vector<std::uint64_t> sets(std::size_t{1} << n);
  std::iota(sets.begin(), sets.end(), std::uint64_t{0});
  return set_lattice(std::move(sets));
}

FiniteDistLattice boolean_plus_top(std::size_t n) {
  if (n > 12) throw GuardError("boolean_plus_top is limited to n <= 12");
  const std::size_t b = std::size_t{1} << n;
  const std::size_t size = b + 1;
  std::vector<std::uint8_t> leq(size * size);
  std::vector<std::uint32_t> meet(size * size);
  std::vector<std::uint32_t> join(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const std::size_t cell = x * size + y;
      if (x == b || y == b) {
        leq[cell] = y == b;
        meet[cell] = as_index(x == b ? y : x);
        join[cell] = as_index(b);
      } else {
        leq[cell] = (x & ~y) == 0;
        meet[cell] = as_index(x & y);
        join[cell] = as_index(x | y);
      }
    }
  }
  return FiniteDistLattice(size, std::move(leq), std::move(meet), std::move(join));
}

FiniteDistLattice chain_lattice(std::size_t n) {
  if (n == 0) throw PreconditionError("chain_lattice needs at least one element");
  if (n > kIsoGuard) throw GuardError("chain is too long");
  std::vector<std::uint8_t> leq(n * n);
  std::vector<std::uint32_t> meet(n * n);
  std::vector<std::uint32_t> join(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      leq[x * n + y] = x <= y;
      meet[x * n + y] = as_index(std::min(x, y));
      join[x * n + y] = as_index(std::max(x, y));
    }
  }
  return FiniteDistLattice(n, std::move(leq), std::move(meet), std::move(join));
}

FiniteDistLattice divisor_lattice(std::uint64_t n) {
  if (n == 0) throw PreconditionError("divisor_lattice is undefined for 0");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }
  std::sort(divisors.begin(), divisors.end());
  const std::size_t k = divisors.size();
  if (k > kIsoGuard) throw GuardError("too many divisors");
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[divisors[i]] = i;
  std::vector<std::uint8_t> leq(k * k);
  std::vector<std::uint32_t> meet(k * k);
  std::vector<std::uint32_t> join(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const std::uint64_t g = std::gcd(divisors[x], divisors[y]);
      leq[x * k + y] = divisors[y] % divisors[x] == 0;
      meet[x * k + y] = as_index(index.at(g));
      join[x * k + y] = as_index(index.at(divisors[x] / g * divisors[y]));
    }
  }
  return FiniteDistLattice(k, std::move(leq), std::move(meet), std::move(join));
}

FiniteDistLattice lattice_product(std::span<const FiniteDistLattice> factors) {
  if (factors.empty()) throw PreconditionError("lattice_product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.size();
    if (n > kIsoGuard) throw GuardError("product lattice is too large");
  }
  const std::size_t k = factors.size();
  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> digits(k);
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = idx % factors[i].size();
      idx /= factors[i].size();
    }
    return digits;
  };
  std::vector<std::vector<std::size_t>> digits(n);
  for (std::size_t x = 0; x < n; ++x) digits[x] = decode(x);

  std::vector<std::uint8_t> leq(n * n);
  std::vector<std::uint32_t> meet(n * n);
  std::vector<std::uint32_t> join(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool below = true;
      std::size_t m = 0;
      std::size_t j = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& f = factors[i];
        below = below && f.leq(digits[x][i], digits[y][i]);
        m = m * f.size() + f.meet(digits[x][i], digits[y][i]);
        j = j * f.size() + f.join(digits[x][i], digits[y][i]);
      }
      leq[x * n + y] = below;
      meet[x * n + y] = as_index(m);
      join[x * n + y] = as_index(j);
    }
  }
  return FiniteDistLattice(n, std::move(leq), std::move(meet), std::move(join));
}

FiniteDistLattice free_distributive_lattice_2() {
  // 0 = bottom, 1 = x^y, 2 = x, 3 = y, 4 = xvy, 5 = top.
  const std::vector<std::pair<int, int>> strict{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
  std::vector<std::vector<bool>> leq(6, std::vector<bool>(6, false));
  for (int a = 0; a < 6; ++a) leq[a][a] = true;
  for (auto [a, b] : strict) leq[a][b] = true;
  for (int k = 0; k < 6; ++k)
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        if (leq[a][k] && leq[k][b]) leq[a][b] = true;
  return FiniteDistLattice::from_order(FinitePoset(std::move(leq)));
}

FiniteDistLattice compact_open_lattice(const FiniteSpace& space) {
  // Every open of a finite space is compact.
  return set_lattice(space.opens());
}

}  // namespace bck
