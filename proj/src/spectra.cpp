#include "bck/spectra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <tuple>

#include "bck/constructions.hpp"

namespace bck {

namespace {

constexpr PointSet point(std::size_t i) { return PointSet{1} << i; }

bool contains(PointSet s, std::size_t i) { return (s >> i) & 1U; }

}  // namespace

// ---- spectra ---------------------------------------------------------------

AlgebraSpectrum spectrum(const FiniteCbckAlgebra& a, std::size_t element_guard) {
  AlgebraSpectrum spec;
  spec.ideals = all_ideals(a, element_guard);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < spec.ideals.ideals.size(); ++i) {
    if (!spec.ideals.prime[i]) continue;
    spec.prime_index.push_back(i);
    labels.push_back(spec.ideals.ideals[i].to_string());
  }
  if (labels.size() > kMaxSpacePoints) throw GuardError("spectrum has more than 64 points");

  for (const auto& ideal : spec.ideals.ideals) spec.sigma_of_ideal.push_back(sigma(spec, ideal));
  std::vector<PointSet> basis;
  for (Element x = 0; x < a.size(); ++x) basis.push_back(sigma_elem(spec, x));
  spec.space = FiniteSpace(std::move(labels), spec.sigma_of_ideal, std::move(basis));
  return spec;
}

PointSet sigma(const AlgebraSpectrum& spec, const ElementSet& s) {
  PointSet out = 0;
  for (std::size_t p = 0; p < spec.prime_index.size(); ++p)
    if (!s.subset_of(spec.prime(p))) out |= point(p);
  return out;
}

PointSet sigma_elem(const AlgebraSpectrum& spec, Element a) {
  PointSet out = 0;
  for (std::size_t p = 0; p < spec.prime_index.size(); ++p)
    if (!spec.prime(p).contains(a)) out |= point(p);
  return out;
}

PointSet v_closed(const AlgebraSpectrum& spec, const ElementSet& ideal) {
  return spec.space.all_points() & ~sigma(spec, ideal);
}

PointSet tree_sigma(const RootedTree& tree, const PathIdeal& ideal) {
  PointSet out = 0;
  for (Vertex v = 0; v < tree.size(); ++v)
    if (!ideal_leq(tree, ideal, canonical_antichain(tree, {v}))) out |= point(v);
  return out;
}

TreeSpectrum tree_spectrum(const RootedTree& tree) {
  TreeSpectrum spec;
  spec.ideals = tree_ideal_lattice(tree);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < tree.size(); ++v) labels.push_back("I(" + tree.name(v) + ")");
  std::vector<PointSet> basis;
  for (const auto& ideal : spec.ideals.ideals) {
    spec.sigma_of_ideal.push_back(tree_sigma(tree, ideal));
    const TreeElement u = principal_generator(tree, ideal);
    basis.push_back(tree_sigma(tree, tree_generated_ideal(tree, {u})));
  }
  spec.space = FiniteSpace(std::move(labels), spec.sigma_of_ideal, std::move(basis));
  return spec;
}

// ---- Hochster conditions ---------------------------------------------------

bool check_compact(const FiniteSpace& space) { return space.is_open(space.all_points()); }

bool check_T0(const FiniteSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      bool separated = false;
      for (PointSet u : space.opens()) {
        if (contains(u, p) != contains(u, q)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool check_multiplicative_basis(const FiniteSpace& space) {
  const auto& opens = space.opens();
  for (PointSet u : opens)
    for (PointSet v : opens)
      if (!space.is_open(u & v)) return false;
  for (PointSet u : opens) {
    PointSet covered = 0;
    for (PointSet b : compact_opens(space))
      if ((b & ~u) == 0) covered |= b;
    if (covered != u) return false;
  }
  return true;
}

bool check_quasi_sober(const FiniteSpace& space) {
  const PointSet all = space.all_points();
  std::vector<PointSet> closed;
  for (PointSet u : space.opens()) closed.push_back(all & ~u);
  for (PointSet c : closed) {
    if (c == 0) continue;
    // Irreducible: not the union of two proper closed subsets.
    bool irreducible = true;
    for (PointSet a : closed) {
      if ((a & ~c) != 0 || a == c) continue;
      for (PointSet b : closed) {
        if ((b & ~c) != 0 || b == c) continue;
        if ((a | b) == c) irreducible = false;
      }
      if (!irreducible) break;
    }
    if (!irreducible) continue;
    bool generic_point = false;
    for (std::size_t p = 0; p < space.size() && !generic_point; ++p)
      generic_point = contains(c, p) && space.closure(point(p)) == c;
    if (!generic_point) return false;
  }
  return true;
}

bool check_generalized_spectral(const FiniteSpace& space) {
  return check_T0(space) && check_multiplicative_basis(space) && check_quasi_sober(space);
}

bool check_spectral(const FiniteSpace& space) {
  return check_compact(space) && check_generalized_spectral(space);
}

// ---- order and separation --------------------------------------------------

FinitePoset specialization_order(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = contains(space.closure(point(x)), y);
  return FinitePoset::from_relation(n, std::move(rel));
}

PointSet closed_points(const FiniteSpace& space) {
  PointSet out = 0;
  for (std::size_t p = 0; p < space.size(); ++p)
    if (space.closure(point(p)) == point(p)) out |= point(p);
  return out;
}

FiniteSpace subspace(const FiniteSpace& space, PointSet points) {
  std::vector<std::size_t> kept;
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < space.size(); ++p) {
    if (!contains(points, p)) continue;
    kept.push_back(p);
    labels.push_back(space.labels()[p]);
  }
  auto restrict = [&](PointSet s) {
    PointSet out = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (contains(s, kept[i])) out |= point(i);
    return out;
  };
  std::vector<PointSet> opens;
  std::vector<PointSet> basis;
  for (PointSet u : space.opens()) opens.push_back(restrict(u));
  for (PointSet b : space.basis()) basis.push_back(restrict(b));
  return FiniteSpace(std::move(labels), std::move(opens), std::move(basis));
}

FiniteSpace maximal_spectrum(const AlgebraSpectrum& spec) {
  PointSet maximal = 0;
  for (std::size_t p = 0; p < spec.prime_index.size(); ++p)
    if (spec.ideals.maximal[spec.prime_index[p]]) maximal |= point(p);
  return subspace(spec.space, maximal);
}

bool check_hausdorff(const FiniteSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      bool separated = false;
      for (PointSet u : space.opens()) {
        if (!contains(u, p) || contains(u, q)) continue;
        for (PointSet v : space.opens()) {
          if (contains(v, q) && (u & v) == 0) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool check_priestley(const FiniteSpace& space, const FinitePoset& order) {
  const std::size_t n = space.size();
  if (order.size() != n) throw PreconditionError("order and space have different sizes");
  if (!check_compact(space)) return false;
  std::vector<PointSet> clopen_upsets;
  for (PointSet u : space.opens()) {
    if (!space.is_closed(u)) continue;
    bool upset = true;
    for (std::size_t x = 0; x < n && upset; ++x)
      for (std::size_t y = 0; y < n && upset; ++y)
        if (contains(u, x) && order.leq(x, y) && !contains(u, y)) upset = false;
    if (upset) clopen_upsets.push_back(u);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (order.leq(x, y)) continue;
      bool separated = false;
      for (PointSet u : clopen_upsets) separated = separated || (contains(u, x) && !contains(u, y));
      if (!separated) return false;
    }
  }
  return true;
}

bool clopen_upset_check(const AlgebraSpectrum& spec, const FiniteCbckAlgebra& a,
                        const ElementSet& ideal) {
  const PointSet s = sigma(spec, ideal);
  const PointSet complement = spec.space.all_points() & ~s;
  if (complement != sigma(spec, annihilator(a, ideal))) return false;
  if (!spec.space.is_open(s) || !spec.space.is_closed(s)) return false;
  const std::size_t n = spec.prime_index.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (contains(s, p) && spec.prime(p).subset_of(spec.prime(q)) && !contains(s, q)) return false;
  return true;
}

bool check_noetherian(const FiniteSpace& space) {
  // A finite family of opens has no infinite descending chain of closed
  // sets; what can fail is an open that is not a finite union of basic opens.
  for (PointSet u : space.opens()) {
    PointSet covered = 0;
    for (PointSet b : space.basis())
      if ((b & ~u) == 0) covered |= b;
    if (covered != u) return false;
  }
  return true;
}

std::vector<PointSet> compact_opens(const FiniteSpace& space) { return space.opens(); }

// ---- maps ------------------------------------------------------------------

SpectrumMap spectrum_map(const BckHomomorphism& h, std::size_t element_guard) {
  const auto check = check_homomorphism(h);
  if (!check.holds) throw PreconditionError("map is not a homomorphism");
  const AlgebraSpectrum source = spectrum(h.source, element_guard);
  const AlgebraSpectrum target = spectrum(h.target, element_guard);

  SpectrumMap out;
  for (std::size_t q = 0; q < target.prime_index.size(); ++q) {
    ElementSet preimage(h.source.size());
    for (Element x = 0; x < h.source.size(); ++x)
      if (target.prime(q).contains(h.map[x])) preimage.insert(x);
    if (preimage.is_full())
      throw PreconditionError("preimage of the prime " + target.prime(q).to_string() +
                              " is the whole source algebra");
    std::optional<std::size_t> found;
    for (std::size_t p = 0; p < source.prime_index.size(); ++p)
      if (source.prime(p) == preimage) found = p;
    if (!found) throw InternalError("preimage " + preimage.to_string() + " is not prime");
    out.point_map.push_back(*found);
  }
  for (PointSet u : source.space.opens()) {
    PointSet pulled = 0;
    for (std::size_t q = 0; q < out.point_map.size(); ++q)
      if (contains(u, out.point_map[q])) pulled |= point(q);
    if (!target.space.is_open(pulled)) out.spectral = false;
  }
  return out;
}

FiniteSpace disjoint_union_space(std::span<const FiniteSpace> spaces) {
  std::vector<std::string> labels;
  std::vector<std::size_t> offset;
  for (std::size_t c = 0; c < spaces.size(); ++c) {
    offset.push_back(labels.size());
    for (const auto& l : spaces[c].labels()) labels.push_back(std::to_string(c) + ":" + l);
  }
  if (labels.size() > kMaxSpacePoints) throw GuardError("disjoint union has more than 64 points");

  std::vector<PointSet> opens{0};
  std::vector<PointSet> basis;
  for (std::size_t c = 0; c < spaces.size(); ++c) {
    std::vector<PointSet> next;
    for (PointSet u : opens) {
      for (PointSet v : spaces[c].opens()) {
        next.push_back(u | (v << offset[c]));
        if (next.size() > kMaxIdealCount) throw GuardError("disjoint union has too many opens");
      }
    }
    opens = std::move(next);
    for (PointSet b : spaces[c].basis()) basis.push_back(b << offset[c]);
  }
  return FiniteSpace(std::move(labels), std::move(opens), std::move(basis));
}

std::optional<std::vector<std::size_t>> homeomorphic(const FiniteSpace& s1, const FiniteSpace& s2) {
  const std::size_t n = s1.size();
  std::optional<std::vector<std::size_t>> found;
  if (n == s2.size() && s1.opens().size() == s2.opens().size()) {
    auto signature = [](const FiniteSpace& s, std::size_t p) {
      std::size_t in_opens = 0;
      for (PointSet u : s.opens()) in_opens += contains(u, p);
      return std::pair{in_opens, std::popcount(s.closure(point(p)))};
    };
    std::vector<std::pair<std::size_t, int>> sig1(n);
    std::vector<std::pair<std::size_t, int>> sig2(n);
    std::vector<PointSet> closure1(n);
    std::vector<PointSet> closure2(n);
    for (std::size_t p = 0; p < n; ++p) {
      sig1[p] = signature(s1, p);
      sig2[p] = signature(s2, p);
      closure1[p] = s1.closure(point(p));
      closure2[p] = s2.closure(point(p));
    }
    std::vector<std::size_t> map(n, 0);
    std::vector<bool> used(n, false);
    auto image_is_homeo = [&] {
      for (PointSet u : s1.opens()) {
        PointSet image = 0;
        for (std::size_t p = 0; p < n; ++p)
          if (contains(u, p)) image |= point(map[p]);
        if (!s2.is_open(image)) return false;
      }
      return true;
    };
    // Homeomorphisms preserve closures of points, so the specialization
    // preorder prunes partial maps.
    auto assign = [&](auto&& self, std::size_t p) -> bool {
      if (p == n) return image_is_homeo();
      for (std::size_t q = 0; q < n; ++q) {
        if (used[q] || sig1[p] != sig2[q]) continue;
        bool consistent = true;
        for (std::size_t r = 0; r < p && consistent; ++r)
          consistent = contains(closure1[p], r) == contains(closure2[q], map[r]) &&
                       contains(closure1[r], p) == contains(closure2[map[r]], q);
        if (!consistent) continue;
        map[p] = q;
        used[q] = true;
        if (self(self, p + 1)) return true;
        used[q] = false;
      }
      return false;
    };
    if (assign(assign, 0)) found = map;
  }

  if (check_T0(s1) && check_T0(s2)) {
    const bool lattice_route =
        lattice_iso(compact_open_lattice(s1), compact_open_lattice(s2)).has_value() &&
        check_compact(s1) == check_compact(s2);
    if (lattice_route != found.has_value())
      throw InternalError("point and lattice homeomorphism tests disagree");
  }
  return found;
}

bool check_union_homeo(std::span<const FiniteCbckAlgebra> components, std::size_t element_guard) {
  const auto u = cbck_union(components);
  std::vector<FiniteSpace> parts;
  for (const auto& c : components) parts.push_back(spectrum(c, element_guard).space);
  return homeomorphic(spectrum(u.algebra, element_guard).space, disjoint_union_space(parts))
      .has_value();
}

// ---- compactness versus finite generation ----------------------------------

CompactFgReport check_compact_iff_fg(const FiniteCbckAlgebra& a, std::size_t element_guard) {
  CompactFgReport r;
  r.compact = check_compact(spectrum(a, element_guard).space);
  ElementSet generators(a.size(), a.maximal_elements());
  r.finitely_generated = generated_ideal(a, generators).is_full();
  return r;
}

TreeCompactFgReport check_compact_iff_fg(const RootedTree& tree) {
  TreeCompactFgReport r;
  r.compact = check_compact(tree_spectrum(tree).space);
  // Subsets of vertex indicators by increasing size, then lexicographically.
  const std::size_t m = tree.size();
  for (std::size_t k = 1; k <= m && !r.finitely_generated; ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<TreeElement> s;
      for (Vertex v = 0; v < m; ++v)
        if (pick[v]) s.push_back(indicator(tree, v));
      if (tree_generated_ideal(tree, s).is_whole()) {
        r.finitely_generated = true;
        r.generators = std::move(s);
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return r;
}

}  // namespace bck
