#pragma once

// Prime spectra with the topology {sigma(I)}, for finite algebras and for
// tree algebras, plus the point-set checks run against them.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/ideals.hpp"
#include "bck/space.hpp"
#include "bck/tree_algebra.hpp"

namespace bck {

struct AlgebraSpectrum {
  FiniteSpace space;
  IdealLattice ideals;
  /// Point i is the prime ideals.ideals[prime_index[i]].
  std::vector<std::size_t> prime_index;
  /// sigma(I) for every ideal, in IdealLattice order.
  std::vector<PointSet> sigma_of_ideal;

  const ElementSet& prime(std::size_t point) const { return ideals.ideals[prime_index[point]]; }
};

/// Points are the prime ideals; opens are sigma(I) over all ideals; the
/// basis is {sigma(a)}.
AlgebraSpectrum spectrum(const FiniteCbckAlgebra& algebra,
                         std::size_t element_guard = kDefaultIdealGuard);

/// {P : S not within P}. Equals sigma((S]).
PointSet sigma(const AlgebraSpectrum& spec, const ElementSet& s);
PointSet sigma_elem(const AlgebraSpectrum& spec, Element a);
/// {Q : I within Q}, the complement of sigma(I).
PointSet v_closed(const AlgebraSpectrum& spec, const ElementSet& ideal);

struct TreeSpectrum {
  /// Point v is the prime I(v).
  FiniteSpace space;
  TreeIdealLattice ideals;
  std::vector<PointSet> sigma_of_ideal;
};

/// Built from the symbolic ideals; the basis is sigma((u]) for the principal
/// generator u of each ideal.
TreeSpectrum tree_spectrum(const RootedTree& tree);
PointSet tree_sigma(const RootedTree& tree, const PathIdeal& ideal);

// Hochster's conditions on a finite space. An empty space passes all of them.
/// (H1) the whole point set is open, hence compact.
bool check_compact(const FiniteSpace& space);
/// (H2)
bool check_T0(const FiniteSpace& space);
/// (H3) opens form a basis closed under pairwise intersection; in a finite
/// space every open is compact.
bool check_multiplicative_basis(const FiniteSpace& space);
/// (H4) every nonempty irreducible closed set is the closure of a point.
bool check_quasi_sober(const FiniteSpace& space);
bool check_generalized_spectral(const FiniteSpace& space);
bool check_spectral(const FiniteSpace& space);

/// x <= y iff every open containing y contains x; for a spectrum this is
/// inclusion of prime ideals. Throws StructureError if the space is not T0.
FinitePoset specialization_order(const FiniteSpace& space);
PointSet closed_points(const FiniteSpace& space);
FiniteSpace subspace(const FiniteSpace& space, PointSet points);
/// M(A): the maximal ideals as a subspace.
FiniteSpace maximal_spectrum(const AlgebraSpectrum& spec);
bool check_hausdorff(const FiniteSpace& space);

/// Compact, and x not<= y is witnessed by a clopen up-set containing x but not
/// y. Throws PreconditionError when the order has the wrong size.
bool check_priestley(const FiniteSpace& space, const FinitePoset& order);

/// sigma(I) is closed with complement sigma(I*), and is an up-set under
/// inclusion of primes.
bool clopen_upset_check(const AlgebraSpectrum& spec, const FiniteCbckAlgebra& algebra,
                        const ElementSet& ideal);

/// Descending chains of closed sets stabilize: verified by checking that each
/// open is the union of the finitely many basic opens inside it.
bool check_noetherian(const FiniteSpace& space);
std::vector<PointSet> compact_opens(const FiniteSpace& space);

struct SpectrumMap {
  /// Point of X(target) -> point of X(source), via preimages.
  std::vector<std::size_t> point_map;
  /// Preimages of opens are open.
  bool spectral = true;
};

/// X(h): X(B) -> X(A), Q -> h^-1(Q). Throws PreconditionError when some
/// preimage is all of A, InternalError when a proper preimage is not prime.
SpectrumMap spectrum_map(const BckHomomorphism& h, std::size_t element_guard = kDefaultIdealGuard);

/// Points of each space in turn (labels prefixed by the block index); opens
/// are blockwise unions of component opens.
FiniteSpace disjoint_union_space(std::span<const FiniteSpace> spaces);

/// A bijection carrying the open family of s1 onto that of s2. When both
/// spaces are T0 the answer is cross-checked against isomorphism of their
/// open-set lattices; disagreement throws InternalError.
std::optional<std::vector<std::size_t>> homeomorphic(const FiniteSpace& s1, const FiniteSpace& s2);

/// spectrum(union(cs)) is homeomorphic to the disjoint union of spectrum(c).
bool check_union_homeo(std::span<const FiniteCbckAlgebra> components,
                       std::size_t element_guard = kDefaultIdealGuard);

struct CompactFgReport {
  bool compact = false;
  bool finitely_generated = false;
};

/// The generating set tried is the set of maximal elements.
CompactFgReport check_compact_iff_fg(const FiniteCbckAlgebra& algebra,
                                     std::size_t element_guard = kDefaultIdealGuard);

struct TreeCompactFgReport {
  bool compact = false;
  bool finitely_generated = false;
  /// Smallest set of vertex indicators generating A^T, found by search.
  std::vector<TreeElement> generators;
};

TreeCompactFgReport check_compact_iff_fg(const RootedTree& tree);

}  // namespace bck
