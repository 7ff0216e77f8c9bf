#pragma once

// The algebra A^T of a finite rooted tree, handled symbolically.
//
// A root-based path is identified with its terminal vertex, so the ideal of
// elements vanishing on a set of paths is stored as an antichain of vertices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bck/duality.hpp"
#include "bck/errors.hpp"

namespace bck {

using Vertex = std::size_t;

inline constexpr std::size_t kMaxTreeVertices = 64;

class RootedTree {
 public:
  /// parents[0] must be empty (the root); every other vertex must reach the
  /// root. Throws StructureError otherwise, GuardError past 64 vertices.
  explicit RootedTree(std::vector<std::optional<Vertex>> parents,
                      std::vector<std::string> names = {});

  /// T_n: a root with n leaf children.
  static RootedTree star(std::size_t n);
  /// ch_n: n vertices on a single path from the root.
  static RootedTree chain(std::size_t n);
  /// The five-vertex tree H: lambda -> alpha, beta; beta -> gamma, delta.
  static RootedTree h_tree();

  std::size_t size() const { return parent_.size(); }
  std::optional<Vertex> parent(Vertex v) const { return parent_.at(v); }
  const std::vector<std::optional<Vertex>>& parents() const { return parent_; }
  const std::vector<Vertex>& children(Vertex v) const { return children_.at(v); }
  std::size_t depth(Vertex v) const { return depth_.at(v); }
  const std::string& name(Vertex v) const { return names_.at(v); }

  /// a <=_T b: a lies on the root path [lambda, b].
  bool ancestor_or_equal(Vertex a, Vertex b) const { return (up_[b] >> a) & 1U; }
  /// Bitmask of the vertices on [lambda, v].
  std::uint64_t path_mask(Vertex v) const { return up_.at(v); }
  /// Vertices of [lambda, v], root first.
  std::vector<Vertex> path(Vertex v) const;
  Vertex lca(Vertex a, Vertex b) const;
  std::vector<Vertex> leaves() const;
  /// Vertices in a root-first order (parents before children).
  const std::vector<Vertex>& preorder() const { return preorder_; }
  /// (V(T), <=_T) as a poset.
  FinitePoset ancestor_poset() const;

  bool operator==(const RootedTree& other) const { return parent_ == other.parent_; }

 private:
  std::vector<std::optional<Vertex>> parent_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> depth_;
  std::vector<std::uint64_t> up_;
  std::vector<Vertex> preorder_;
};

/// A finitely supported integer labelling whose first nonzero entry along
/// every root path is positive. Zero entries are never stored.
class TreeElement {
 public:
  using Support = std::map<Vertex, std::int64_t>;

  TreeElement() = default;
  /// Throws StructureError for an out-of-range vertex or a violated invariant.
  TreeElement(const RootedTree& tree, Support support);

  const Support& support() const { return support_; }
  std::int64_t at(Vertex v) const;
  bool is_zero() const { return support_.empty(); }
  std::string to_string() const;

  bool operator==(const TreeElement& other) const = default;

 private:
  Support support_;
};

bool satisfies_tree_invariant(const RootedTree& tree, const TreeElement::Support& support);

/// Zero everywhere except `value` at v; value must be positive.
TreeElement indicator(const RootedTree& tree, Vertex v, std::int64_t value = 1);

enum class LexOrder { less, equal, greater };

/// Lexicographic comparison of u and v restricted to [lambda, terminal],
/// read root first.
LexOrder compare_lex(const RootedTree& tree, const TreeElement& u, const TreeElement& v,
                     Vertex terminal);

/// (u*v)_a = u_a - v_a when u >_lex v on [lambda, a], else 0. Throws
/// InternalError if the result leaves A^T.
TreeElement tree_op(const RootedTree& tree, const TreeElement& u, const TreeElement& v);

/// Pathwise lexicographic minimum, computed without tree_op.
TreeElement tree_meet(const RootedTree& tree, const TreeElement& u, const TreeElement& v);

inline bool tree_leq(const RootedTree& tree, const TreeElement& u, const TreeElement& v) {
  return tree_op(tree, u, v).is_zero();
}

/// u vanishes on the whole path [lambda, terminal].
bool vanishes_on(const RootedTree& tree, const TreeElement& u, Vertex terminal);

/// I(R) for a canonical antichain R; the empty antichain is I(empty) = A^T.
class PathIdeal {
 public:
  /// The whole algebra.
  PathIdeal() = default;

  bool is_whole() const { return antichain_.empty(); }
  /// Sorted ascending.
  const std::vector<Vertex>& antichain() const { return antichain_; }
  std::string to_string(const RootedTree& tree) const;

  auto operator<=>(const PathIdeal& other) const = default;

 private:
  friend PathIdeal canonical_antichain(const RootedTree&, const std::vector<Vertex>&);
  std::vector<Vertex> antichain_;
};

/// The <=_T-maximal vertices of the input; ancestors are redundant because
/// vanishing on a path implies vanishing on its prefixes.
PathIdeal canonical_antichain(const RootedTree& tree, const std::vector<Vertex>& vertices);

/// {0} = I(all leaves).
PathIdeal zero_ideal(const RootedTree& tree);

bool ideal_membership(const RootedTree& tree, const PathIdeal& ideal, const TreeElement& u);

/// I(R1) within I(R2): R2 = empty, or every vertex of R2 is an ancestor-or-equal
/// of some vertex of R1.
bool ideal_leq(const RootedTree& tree, const PathIdeal& r1, const PathIdeal& r2);
/// I(R1) n I(R2) = I(R1 u R2).
PathIdeal ideal_meet(const RootedTree& tree, const PathIdeal& r1, const PathIdeal& r2);
/// I(R1) v I(R2) = I({lca(a, b)}); A^T absorbs.
PathIdeal ideal_join(const RootedTree& tree, const PathIdeal& r1, const PathIdeal& r2);

/// I(p) is prime exactly for single paths.
inline bool is_tree_prime(const PathIdeal& ideal) { return ideal.antichain().size() == 1; }

/// The ideal generated by a finite set: I(vertices on whose paths every
/// member of S vanishes).
PathIdeal tree_generated_ideal(const RootedTree& tree, const std::vector<TreeElement>& s);

/// An element u with (u] = I(R): value 1 on each minimal vertex outside the
/// down-closure of R. Every ideal of A^T is principal, so this always exists.
TreeElement principal_generator(const RootedTree& tree, const PathIdeal& ideal);

/// A sequence s_1..s_n drawn from S with u*s_1*...*s_n = 0, or nullopt when u
/// is not in the ideal generated by S. The sequence is built by clearing the
/// subtree below each minimal nonzero vertex in turn and is checked by
/// evaluation before it is returned.
std::optional<std::vector<TreeElement>> tree_membership_witness(const RootedTree& tree,
                                                                const TreeElement& u,
                                                                const std::vector<TreeElement>& s);

struct JoinWitness {
  TreeElement v;
  TreeElement w;
};

/// For u in I(lca(p, q)), elements v in I(p) and w in I(q) with (u*v)*w = 0.
/// v is u with the branch below lca(p, q) toward p cleared; w is u*v with the
/// branch toward q cleared. Throws PreconditionError if u is outside I(lca).
JoinWitness join_witness(const RootedTree& tree, const TreeElement& u, Vertex p, Vertex q);

struct TreeIdealLattice {
  /// Ordered by inclusion-compatible rank: {0} first, A^T last.
  std::vector<PathIdeal> ideals;
  FiniteDistLattice lattice;
  std::vector<bool> prime;

  std::optional<std::size_t> index_of(const PathIdeal& ideal) const;
};

/// Every ideal of A^T: one per antichain of T, the empty one being A^T.
TreeIdealLattice tree_ideal_lattice(const RootedTree& tree, std::size_t guard = kIsoGuard);

/// The prime ideals I(v), indexed by vertex, ordered by inclusion.
FinitePoset tree_prime_ideals(const RootedTree& tree);

}  // namespace bck
