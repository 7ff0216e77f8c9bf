#pragma once

// Ideals of finite cBCK-algebras.
//
// Ideals are ElementSets over the algebra's universe. Enumeration works on
// 64-bit masks, so everything that lists ideals requires |A| <= 64 and by
// default |A| <= kDefaultIdealGuard.

#include <cstddef>
#include <optional>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/duality.hpp"
#include "bck/element_set.hpp"

namespace bck {

inline constexpr std::size_t kDefaultIdealGuard = 20;
inline constexpr std::size_t kMaxIdealCount = 4096;
/// Down-set enumeration gives up after this many candidates.
inline constexpr std::size_t kMaxDownSets = std::size_t{1} << 22;

/// 0 in I, and x*y in I with y in I forces x in I.
bool is_ideal(const FiniteCbckAlgebra& algebra, const ElementSet& set);

/// Least ideal containing s, by fixed-point closure.
ElementSet generated_ideal(const FiniteCbckAlgebra& algebra, const ElementSet& s);

/// Shortest s_1..s_n from S with (..((x*s_1)*s_2)..)*s_n = 0, ties broken
/// lexicographically on element indices. Empty for x = 0; nullopt when x is
/// not in the ideal generated by S.
std::optional<std::vector<Element>> membership_witness(const FiniteCbckAlgebra& algebra, Element x,
                                                       const ElementSet& s);

struct IdealLattice {
  /// Sorted by (cardinality, members); front is {0}, back is A.
  std::vector<ElementSet> ideals;
  /// Order = inclusion, meet = intersection, join = generated ideal of the union.
  /// Lattice element i is ideals[i].
  FiniteDistLattice lattice;
  std::vector<bool> prime;
  /// Maximal among the proper ideals.
  std::vector<bool> maximal;

  std::optional<std::size_t> index_of(const ElementSet& ideal) const;
  std::vector<ElementSet> primes() const;
};

/// All ideals, found by enumerating down-sets of the derived order and
/// keeping those closed under the ideal implication. Throws GuardError when
/// |A| > element_guard or the lattice would exceed kMaxIdealCount.
IdealLattice all_ideals(const FiniteCbckAlgebra& algebra,
                        std::size_t element_guard = kDefaultIdealGuard);

/// Proper, and x ^ y in I forces x in I or y in I. Throws PreconditionError
/// if `ideal` is not an ideal.
bool is_prime(const FiniteCbckAlgebra& algebra, const ElementSet& ideal);
std::vector<ElementSet> prime_ideals(const FiniteCbckAlgebra& algebra,
                                     std::size_t element_guard = kDefaultIdealGuard);

struct IrreducibilityReport {
  /// Proper, and I = J n K forces I = J or I = K.
  bool irreducible = false;
  /// Proper, and J n K within I forces J within I or K within I.
  bool meet_prime = false;
};

/// Evaluates both definitions against the full ideal list.
IrreducibilityReport irreducible_and_meetprime_check(const IdealLattice& lattice,
                                                     const ElementSet& ideal);

/// {a : a ^ s = 0 for every s in S}.
ElementSet annihilator(const FiniteCbckAlgebra& algebra, const ElementSet& s);

struct InvolutoryReport {
  bool holds = true;
  /// (I, I**) for every ideal, in IdealLattice order.
  std::vector<std::pair<ElementSet, ElementSet>> per_ideal;
};

InvolutoryReport is_involutory(const FiniteCbckAlgebra& algebra,
                               std::size_t element_guard = kDefaultIdealGuard);

/// The one-element algebra has a single ideal and is reported as trivial,
/// never as simple.
enum class Simplicity { trivial, simple, not_simple };

Simplicity simplicity(const FiniteCbckAlgebra& algebra,
                      std::size_t element_guard = kDefaultIdealGuard);
bool is_simple(const FiniteCbckAlgebra& algebra, std::size_t element_guard = kDefaultIdealGuard);

/// For chains: every x and every y != 0 admit n with x*y^n = 0. Throws
/// PreconditionError when the algebra is not a chain.
bool chain_simplicity_criterion(const FiniteCbckAlgebra& algebra);

/// Classes of x ~ y iff x*y, y*x in I, each sorted, ordered by least member.
/// Throws InternalError if the relation is not an equivalence.
std::vector<ElementSet> congruence_from_ideal(const FiniteCbckAlgebra& algebra,
                                              const ElementSet& ideal);

}  // namespace bck
