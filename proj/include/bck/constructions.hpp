#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "bck/algebra.hpp"

namespace bck {

/// The one-element algebra {0}.
FiniteCbckAlgebra trivial_algebra();

/// C_k on {0, ..., k} with x*y = max(x - y, 0); index i encodes i/k.
FiniteCbckAlgebra standard_chain(std::size_t k);

/// Where an element of a cBCK-union came from.
struct Provenance {
  static constexpr std::size_t kSharedZero = std::numeric_limits<std::size_t>::max();
  /// Block index, or kSharedZero for the identified zero.
  std::size_t component = kSharedZero;
  /// Index of the element inside its block.
  Element original = 0;
};

struct CbckUnion {
  FiniteCbckAlgebra algebra;
  std::vector<FiniteCbckAlgebra> components;
  /// One entry per element of `algebra`.
  std::vector<Provenance> provenance;

  /// Index in the union of element `original` of block `component`.
  Element embed(std::size_t component, Element original) const;
  /// Nonzero elements of one block, in ascending order.
  std::vector<Element> block(std::size_t component) const;
  /// The block embedding as a homomorphism A_component -> union.
  BckHomomorphism embedding(std::size_t component) const;
};

/// Blocks glued at a shared 0: within a block the block operation, across
/// blocks x*y = x. Numbering is 0, then block 0's nonzero elements, then
/// block 1's, and so on. Throws PreconditionError for an empty list.
CbckUnion cbck_union(std::span<const FiniteCbckAlgebra> components);

/// Componentwise operation. Tuples are numbered in mixed radix with the last
/// component varying fastest, so the all-zero tuple is index 0.
FiniteCbckAlgebra direct_product(std::span<const FiniteCbckAlgebra> components);

}  // namespace bck
