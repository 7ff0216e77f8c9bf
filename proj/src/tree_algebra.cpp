#include "bck/tree_algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace bck {

// ---- RootedTree ------------------------------------------------------------

RootedTree::RootedTree(std::vector<std::optional<Vertex>> parents, std::vector<std::string> names)
    : parent_(std::move(parents)), names_(std::move(names)) {
  const std::size_t m = parent_.size();
  if (m == 0) throw StructureError("a rooted tree needs at least the root");
  if (m > kMaxTreeVertices)
    throw GuardError("trees are limited to " + std::to_string(kMaxTreeVertices) + " vertices");
  if (parent_[0]) throw StructureError("vertex 0 is the root and must not have a parent");
  if (!names_.empty() && names_.size() != m) throw StructureError("one name per vertex expected");
  if (names_.empty())
    for (Vertex v = 0; v < m; ++v) names_.push_back("v" + std::to_string(v));

  children_.assign(m, {});
  for (Vertex v = 1; v < m; ++v) {
    if (!parent_[v]) throw StructureError("vertex " + std::to_string(v) + " has no parent");
    if (*parent_[v] >= m || *parent_[v] == v)
      throw StructureError("vertex " + std::to_string(v) + " has an invalid parent");
    children_[*parent_[v]].push_back(v);
  }

  up_.assign(m, 0);
  depth_.assign(m, 0);
  up_[0] = 1;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    preorder_.push_back(v);
    const auto& kids = children_[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      up_[*it] = up_[v] | (std::uint64_t{1} << *it);
      depth_[*it] = depth_[v] + 1;
      stack.push_back(*it);
    }
  }
  if (preorder_.size() != m) throw StructureError("parent array contains a cycle");
}

RootedTree RootedTree::star(std::size_t n) {
  std::vector<std::optional<Vertex>> parents{std::nullopt};
  std::vector<std::string> names{"lambda"};
  for (std::size_t i = 1; i <= n; ++i) {
    parents.emplace_back(0);
    names.push_back("alpha" + std::to_string(i));
  }
  return RootedTree(std::move(parents), std::move(names));
}

RootedTree RootedTree::chain(std::size_t n) {
  if (n == 0) throw PreconditionError("a chain tree needs at least one vertex");
  std::vector<std::optional<Vertex>> parents{std::nullopt};
  std::vector<std::string> names{"lambda"};
  for (std::size_t i = 1; i < n; ++i) {
    parents.emplace_back(i - 1);
    names.push_back("v" + std::to_string(i));
  }
  return RootedTree(std::move(parents), std::move(names));
}

RootedTree RootedTree::h_tree() {
  return RootedTree({std::nullopt, 0, 0, 2, 2}, {"lambda", "alpha", "beta", "gamma", "delta"});
}

std::vector<Vertex> RootedTree::path(Vertex v) const {
  std::vector<Vertex> out;
  for (std::optional<Vertex> cur = v; cur; cur = parent_[*cur]) out.push_back(*cur);
  std::reverse(out.begin(), out.end());
  return out;
}

Vertex RootedTree::lca(Vertex a, Vertex b) const {
  while (depth_.at(a) > depth_.at(b)) a = *parent_[a];
  while (depth_[b] > depth_[a]) b = *parent_[b];
  while (a != b) {
    a = *parent_[a];
    b = *parent_[b];
  }
  return a;
}

std::vector<Vertex> RootedTree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v)
    if (children_[v].empty()) out.push_back(v);
  return out;
}

FinitePoset RootedTree::ancestor_poset() const {
  const std::size_t m = size();
  std::vector<std::uint8_t> rel(m * m);
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = 0; b < m; ++b) rel[a * m + b] = ancestor_or_equal(a, b);
  return FinitePoset::from_relation(m, std::move(rel), false);
}

// ---- elements --------------------------------------------------------------

bool satisfies_tree_invariant(const RootedTree& tree, const TreeElement::Support& support) {
  const std::size_t m = tree.size();
  // nonzero_above[v]: some vertex on [lambda, v] carries a nonzero entry.
  std::vector<bool> nonzero_above(m, false);
  for (Vertex v : tree.preorder()) {
    const auto it = support.find(v);
    const std::int64_t value = it == support.end() ? 0 : it->second;
    const bool inherited = v != 0 && nonzero_above[*tree.parent(v)];
    if (!inherited && value < 0) return false;
    nonzero_above[v] = inherited || value != 0;
  }
  return true;
}

TreeElement::TreeElement(const RootedTree& tree, Support support) {
  for (const auto& [v, value] : support) {
    if (v >= tree.size())
      throw StructureError("vertex " + std::to_string(v) + " is not in the tree");
    if (value != 0) support_.emplace(v, value);
  }
  if (!satisfies_tree_invariant(tree, support_))
    throw StructureError("labelling " + to_string() +
                         " has a negative first nonzero entry on some root path");
}

std::int64_t TreeElement::at(Vertex v) const {
  const auto it = support_.find(v);
  return it == support_.end() ? 0 : it->second;
}

std::string TreeElement::to_string() const {
  std::string out = "{";
  for (const auto& [v, value] : support_) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v) + ":" + std::to_string(value);
  }
  return out + "}";
}

TreeElement indicator(const RootedTree& tree, Vertex v, std::int64_t value) {
  if (value <= 0) throw PreconditionError("indicator values must be positive");
  return TreeElement(tree, {{v, value}});
}

LexOrder compare_lex(const RootedTree& tree, const TreeElement& u, const TreeElement& v,
                     Vertex terminal) {
  for (Vertex a : tree.path(terminal)) {
    const std::int64_t x = u.at(a);
    const std::int64_t y = v.at(a);
    if (x != y) return x < y ? LexOrder::less : LexOrder::greater;
  }
  return LexOrder::equal;
}

namespace {

/// state[a] = comparison of u and v on [lambda, a], for every vertex.
std::vector<LexOrder> path_comparisons(const RootedTree& tree, const TreeElement& u,
                                       const TreeElement& v) {
  std::vector<LexOrder> state(tree.size(), LexOrder::equal);
  for (Vertex a : tree.preorder()) {
    const LexOrder above = a == 0 ? LexOrder::equal : state[*tree.parent(a)];
    if (above != LexOrder::equal) {
      state[a] = above;
      continue;
    }
    const std::int64_t x = u.at(a);
    const std::int64_t y = v.at(a);
    state[a] = x == y ? LexOrder::equal : (x < y ? LexOrder::less : LexOrder::greater);
  }
  return state;
}

}  // namespace

TreeElement tree_op(const RootedTree& tree, const TreeElement& u, const TreeElement& v) {
  const auto state = path_comparisons(tree, u, v);
  TreeElement::Support out;
  for (Vertex a = 0; a < tree.size(); ++a)
    if (state[a] == LexOrder::greater && u.at(a) != v.at(a)) out.emplace(a, u.at(a) - v.at(a));
  if (!satisfies_tree_invariant(tree, out))
    throw InternalError("tree operation left the algebra for u=" + u.to_string() +
                        ", v=" + v.to_string());
  return TreeElement(tree, std::move(out));
}

TreeElement tree_meet(const RootedTree& tree, const TreeElement& u, const TreeElement& v) {
  const auto state = path_comparisons(tree, u, v);
  TreeElement::Support out;
  for (Vertex a = 0; a < tree.size(); ++a) {
    const std::int64_t value = state[a] == LexOrder::greater ? v.at(a) : u.at(a);
    if (value != 0) out.emplace(a, value);
  }
  return TreeElement(tree, std::move(out));
}

bool vanishes_on(const RootedTree& tree, const TreeElement& u, Vertex terminal) {
  const std::uint64_t path = tree.path_mask(terminal);
  for (const auto& [v, value] : u.support())
    if ((path >> v) & 1U) return false;
  return true;
}

// ---- path ideals -----------------------------------------------------------

std::string PathIdeal::to_string(const RootedTree& tree) const {
  if (is_whole()) return "A";
  std::string out = "I(";
  for (std::size_t i = 0; i < antichain_.size(); ++i)
    out += (i ? "," : "") + tree.name(antichain_[i]);
  return out + ")";
}

PathIdeal canonical_antichain(const RootedTree& tree, const std::vector<Vertex>& vertices) {
  std::set<Vertex> unique;
  for (Vertex v : vertices) {
    if (v >= tree.size()) throw StructureError("vertex " + std::to_string(v) + " is not in the tree");
    unique.insert(v);
  }
  PathIdeal out;
  for (Vertex v : unique) {
    bool maximal = true;
    for (Vertex w : unique)
      if (w != v && tree.ancestor_or_equal(v, w)) maximal = false;
    if (maximal) out.antichain_.push_back(v);
  }
  return out;
}

PathIdeal zero_ideal(const RootedTree& tree) { return canonical_antichain(tree, tree.leaves()); }

bool ideal_membership(const RootedTree& tree, const PathIdeal& ideal, const TreeElement& u) {
  for (Vertex a : ideal.antichain())
    if (!vanishes_on(tree, u, a)) return false;
  return true;
}

bool ideal_leq(const RootedTree& tree, const PathIdeal& r1, const PathIdeal& r2) {
  if (r2.is_whole()) return true;
  if (r1.is_whole()) return false;
  for (Vertex b : r2.antichain()) {
    bool covered = false;
    for (Vertex a : r1.antichain()) covered = covered || tree.ancestor_or_equal(b, a);
    if (!covered) return false;
  }
  return true;
}

PathIdeal ideal_meet(const RootedTree& tree, const PathIdeal& r1, const PathIdeal& r2) {
  std::vector<Vertex> all = r1.antichain();
  all.insert(all.end(), r2.antichain().begin(), r2.antichain().end());
  return canonical_antichain(tree, all);
}

PathIdeal ideal_join(const RootedTree& tree, const PathIdeal& r1, const PathIdeal& r2) {
  if (r1.is_whole() || r2.is_whole()) return PathIdeal{};
  std::vector<Vertex> meets;
  for (Vertex a : r1.antichain())
    for (Vertex b : r2.antichain()) meets.push_back(tree.lca(a, b));
  return canonical_antichain(tree, meets);
}

PathIdeal tree_generated_ideal(const RootedTree& tree, const std::vector<TreeElement>& s) {
  std::vector<Vertex> silent;
  for (Vertex v = 0; v < tree.size(); ++v) {
    bool all_vanish = true;
    for (const auto& e : s) all_vanish = all_vanish && vanishes_on(tree, e, v);
    if (all_vanish) silent.push_back(v);
  }
  return canonical_antichain(tree, silent);
}

TreeElement principal_generator(const RootedTree& tree, const PathIdeal& ideal) {
  std::uint64_t closed = 0;
  for (Vertex a : ideal.antichain()) closed |= tree.path_mask(a);
  TreeElement::Support support;
  for (Vertex v = 0; v < tree.size(); ++v) {
    if ((closed >> v) & 1U) continue;
    if (v == 0 || ((closed >> *tree.parent(v)) & 1U)) support.emplace(v, 1);
  }
  TreeElement u(tree, std::move(support));
  if (tree_generated_ideal(tree, {u}) != ideal)
    throw InternalError("principal generator does not generate " + ideal.to_string(tree));
  return u;
}

std::optional<std::vector<TreeElement>> tree_membership_witness(const RootedTree& tree,
                                                                const TreeElement& u,
                                                                const std::vector<TreeElement>& s) {
  std::vector<TreeElement> sequence;
  TreeElement current = u;
  // Each round clears the subtree below a minimal nonzero vertex, and
  // x*y never becomes nonzero on a path where x vanishes, so at most
  // |V(T)| rounds are needed.
  for (std::size_t round = 0; !current.is_zero(); ++round) {
    if (round > tree.size()) throw InternalError("membership witness search did not settle");
    Vertex alpha = 0;
    for (const auto& [v, value] : current.support()) {
      if (v == 0 || vanishes_on(tree, current, *tree.parent(v))) {
        alpha = v;
        break;
      }
    }
    const TreeElement* chosen = nullptr;
    for (const auto& g : s) {
      if (!vanishes_on(tree, g, alpha)) {
        chosen = &g;
        break;
      }
    }
    if (!chosen) return std::nullopt;

    // Once the value at alpha drops below the chosen generator's, one more
    // step clears the subtree; each earlier step lowers it by at least 1.
    const std::int64_t bound = current.at(alpha) + 2;
    std::int64_t steps = 0;
    while (!vanishes_on(tree, current, alpha)) {
      if (++steps > bound) throw InternalError("generator failed to clear a subtree");
      current = tree_op(tree, current, *chosen);
      sequence.push_back(*chosen);
    }
  }

  TreeElement check = u;
  for (const auto& g : sequence) check = tree_op(tree, check, g);
  if (!check.is_zero()) throw InternalError("tree membership witness does not reduce to 0");
  return sequence;
}

JoinWitness join_witness(const RootedTree& tree, const TreeElement& u, Vertex p, Vertex q) {
  if (p >= tree.size() || q >= tree.size()) throw StructureError("path vertex is not in the tree");
  const Vertex c = tree.lca(p, q);
  if (!vanishes_on(tree, u, c))
    throw PreconditionError("u must vanish on the path to lca(p, q)");

  // The child of c on the way to t, or nothing if t = c.
  auto branch = [&](Vertex t) -> std::optional<Vertex> {
    if (t == c) return std::nullopt;
    const auto path = tree.path(t);
    return path[tree.depth(c) + 1];
  };
  auto clear_below = [&](const TreeElement& e, std::optional<Vertex> top) {
    if (!top) return e;
    TreeElement::Support kept;
    for (const auto& [v, value] : e.support())
      if (!tree.ancestor_or_equal(*top, v)) kept.emplace(v, value);
    return TreeElement(tree, std::move(kept));
  };

  JoinWitness out;
  out.v = clear_below(u, branch(p));
  out.w = clear_below(tree_op(tree, u, out.v), branch(q));
  if (!vanishes_on(tree, out.v, p) || !vanishes_on(tree, out.w, q) ||
      !tree_op(tree, tree_op(tree, u, out.v), out.w).is_zero())
    throw InternalError("join witness failed verification");
  return out;
}

// ---- lattice of ideals -----------------------------------------------------

std::optional<std::size_t> TreeIdealLattice::index_of(const PathIdeal& ideal) const {
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i] == ideal) return i;
  return std::nullopt;
}

TreeIdealLattice tree_ideal_lattice(const RootedTree& tree, std::size_t guard) {
  const std::size_t m = tree.size();
  // Antichains correspond to their down-closures: enumerate down-closed
  // vertex sets (parents before children) and take maximal elements.
  std::vector<std::uint64_t> closed;
  const auto& order = tree.preorder();
  auto extend = [&](auto&& self, std::size_t i, std::uint64_t current) -> void {
    if (i == m) {
      if (closed.size() >= guard)
        throw GuardError("tree has more than " + std::to_string(guard) + " ideals");
      closed.push_back(current);
      return;
    }
    const Vertex v = order[i];
    self(self, i + 1, current);
    if (v == 0 || ((current >> *tree.parent(v)) & 1U))
      self(self, i + 1, current | (std::uint64_t{1} << v));
  };
  extend(extend, 0, 0);
  std::sort(closed.begin(), closed.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });

  TreeIdealLattice out;
  for (std::uint64_t d : closed) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < m; ++v)
      if ((d >> v) & 1U) members.push_back(v);
    out.ideals.push_back(canonical_antichain(tree, members));
    out.prime.push_back(is_tree_prime(out.ideals.back()));
  }

  const std::size_t k = out.ideals.size();
  std::map<PathIdeal, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(out.ideals[i], i);
  std::vector<std::uint8_t> leq(k * k);
  std::vector<std::uint32_t> meet(k * k);
  std::vector<std::uint32_t> join(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& a = out.ideals[i];
      const auto& b = out.ideals[j];
      leq[i * k + j] = ideal_leq(tree, a, b);
      meet[i * k + j] = static_cast<std::uint32_t>(index.at(ideal_meet(tree, a, b)));
      join[i * k + j] = static_cast<std::uint32_t>(index.at(ideal_join(tree, a, b)));
    }
  }
  out.lattice = FiniteDistLattice(k, std::move(leq), std::move(meet), std::move(join));
  return out;
}

FinitePoset tree_prime_ideals(const RootedTree& tree) {
  const std::size_t m = tree.size();
  std::vector<std::uint8_t> rel(m * m);
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = 0; b < m; ++b)
      rel[a * m + b] = ideal_leq(tree, canonical_antichain(tree, {a}), canonical_antichain(tree, {b}));
  return FinitePoset::from_relation(m, std::move(rel));
}

}  // namespace bck
