#pragma once

// Test corpora: named finite algebras, exhaustive tree enumeration and seeded
// random generators.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/constructions.hpp"
#include "bck/ideals.hpp"
#include "bck/tree_algebra.hpp"

namespace bck {

using Rng = std::mt19937_64;

struct NamedAlgebra {
  std::string name;
  FiniteCbckAlgebra algebra;
  /// Nonempty when the algebra was built as a union of these blocks.
  std::vector<FiniteCbckAlgebra> union_components;
};

/// Chains, unions and products with at most max_size elements, in a fixed
/// order.
std::vector<NamedAlgebra> finite_corpus(std::size_t max_size = 12);

/// Every rooted tree on 1..max_vertices vertices written with parent[i] < i.
/// With up_to_isomorphism only one tree per shape is kept.
std::vector<RootedTree> all_rooted_trees(std::size_t max_vertices, bool up_to_isomorphism = false);

/// Canonical string of the unlabeled shape.
std::string tree_shape(const RootedTree& tree);

RootedTree random_tree(Rng& rng, std::size_t max_vertices);

/// Support of at most max_support vertices with values in [-max_abs, max_abs];
/// values that would break the invariant are replaced by their absolute value.
TreeElement random_tree_element(Rng& rng, const RootedTree& tree, std::size_t max_support = 6,
                                std::int64_t max_abs = 9);

/// 2 to 4 blocks drawn from small chains and products, total size at most
/// max_size.
std::vector<NamedAlgebra> random_union_components(Rng& rng, std::size_t max_size = 12);

/// "C1+C2+C1xC1"
std::string join_names(const std::vector<NamedAlgebra>& parts, const std::string& sep);
std::vector<FiniteCbckAlgebra> algebras_of(const std::vector<NamedAlgebra>& parts);

/// The primes of a union read off blockwise: one block replaced by one of its
/// primes, every other block kept whole. Sorted like IdealLattice.
std::vector<ElementSet> primes_of_union_blockwise(const CbckUnion& u,
                                                  std::size_t element_guard = kDefaultIdealGuard);

/// Primes by brute force: every subset that is an ideal and satisfies the
/// prime condition pairwise. Independent of the ideal lattice code.
std::vector<ElementSet> brute_force_primes(const FiniteCbckAlgebra& algebra);

}  // namespace bck
