#pragma once

// Finite posets and distributive lattices: meet-irreducibles, the Birkhoff
// construction, isomorphism search and the lattice families used as targets
// of id(-) and K(-).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bck/errors.hpp"

namespace bck {

class FiniteSpace;

/// Isomorphism searches refuse structures larger than this.
inline constexpr std::size_t kIsoGuard = std::size_t{1} << 12;

class FinitePoset {
 public:
  FinitePoset() = default;
  /// Validates reflexivity, antisymmetry and transitivity; throws StructureError.
  explicit FinitePoset(std::vector<std::vector<bool>> leq);

  /// Flat row-major relation. With validate=false the caller vouches for the
  /// partial-order laws (used when the order comes from set inclusion).
  static FinitePoset from_relation(std::size_t n, std::vector<std::uint8_t> rel,
                                   bool validate = true);
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return rel_[a * n_ + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  /// Order dual, materialized as the transposed relation.
  FinitePoset dual() const;
  /// Cover pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::vector<std::vector<bool>> matrix() const;
  bool is_antichain() const;
  bool is_chain() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> rel_;
};

class FiniteDistLattice {
 public:
  FiniteDistLattice() = default;
  /// Flat row-major tables of size n*n. The constructor checks that meet and
  /// join are the glb and lub of the given order on every pair it can check
  /// in O(n^2) (bounds, commutativity, idempotence, absorption). Full
  /// distributivity is O(n^3) and lives in is_distributive().
  FiniteDistLattice(std::size_t n, std::vector<std::uint8_t> leq, std::vector<std::uint32_t> meet,
                    std::vector<std::uint32_t> join);

  /// Computes meet and join tables from an order by brute force. Throws
  /// StructureError if some pair has no glb or lub.
  static FiniteDistLattice from_order(const FinitePoset& order);

  std::size_t size() const { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  FinitePoset order() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Associativity, glb/lub property of the tables against the order: O(n^3).
bool satisfies_lattice_laws(const FiniteDistLattice& lattice);
/// a ^ (b v c) = (a ^ b) v (a ^ c) on all triples.
bool is_distributive(const FiniteDistLattice& lattice);

struct MeetIrreducibles {
  FinitePoset poset;
  /// Lattice element behind each poset point.
  std::vector<std::size_t> elements;
};

/// Elements m != top such that m = a ^ b forces m = a or m = b, with the
/// inherited order.
MeetIrreducibles meet_irreducibles(const FiniteDistLattice& lattice);
/// Dual notion, used for isomorphism invariants.
std::vector<bool> join_irreducible_flags(const FiniteDistLattice& lattice);

/// The lattice of down-sets of `poset` under inclusion. Its meet-irreducibles
/// are the complements of principal up-sets, which are order-isomorphic to
/// `poset`. Throws GuardError past `guard` lattice elements.
FiniteDistLattice lattice_from_poset(const FinitePoset& poset, std::size_t guard = kIsoGuard);

/// An order isomorphism L1 -> L2 if one exists (order isomorphisms of lattices
/// are lattice isomorphisms).
std::optional<std::vector<std::size_t>> lattice_iso(const FiniteDistLattice& a,
                                                    const FiniteDistLattice& b,
                                                    std::size_t guard = kIsoGuard);
std::optional<std::vector<std::size_t>> poset_iso(const FinitePoset& a, const FinitePoset& b,
                                                  std::size_t guard = kIsoGuard);

FiniteDistLattice boolean_lattice(std::size_t n);
/// B_n with a new top adjoined above the Boolean top.
FiniteDistLattice boolean_plus_top(std::size_t n);
/// n-element chain 0 < 1 < ... < n-1. n >= 1.
FiniteDistLattice chain_lattice(std::size_t n);
/// Divisors of n under divisibility; n >= 1.
FiniteDistLattice divisor_lattice(std::uint64_t n);
/// Componentwise order with mixed-radix numbering (last factor fastest).
FiniteDistLattice lattice_product(std::span<const FiniteDistLattice> factors);
/// The free bounded distributive lattice on two generators:
/// 0 < x^y < x, y < xvy < 1.
FiniteDistLattice free_distributive_lattice_2();

/// Compact opens of a finite space (every open, since the family is finite)
/// under inclusion, intersection and union. Throws StructureError when the
/// family is not closed under both operations.
FiniteDistLattice compact_open_lattice(const FiniteSpace& space);

}  // namespace bck
