#include <doctest.h>

#include <algorithm>
#include <random>

#include "bck/corpus.hpp"
#include "bck/errors.hpp"
#include "bck/tree_algebra.hpp"

using namespace bck;

namespace {

// Reference evaluations built from explicit path vectors.

std::vector<std::int64_t> path_vector(const RootedTree& t, const TreeElement& u, Vertex a) {
  std::vector<std::int64_t> out;
  for (Vertex v : t.path(a)) {
    auto it = u.support().find(v);
    out.push_back(it == u.support().end() ? 0 : it->second);
  }
  return out;
}

bool valid_support(const RootedTree& t, const TreeElement::Support& s) {
  for (Vertex a = 0; a < t.size(); ++a)
    for (Vertex v : t.path(a)) {
      auto it = s.find(v);
      if (it == s.end() || it->second == 0) continue;
      if (it->second < 0) return false;
      break;
    }
  return true;
}

TreeElement ref_op(const RootedTree& t, const TreeElement& u, const TreeElement& v) {
  TreeElement::Support s;
  for (Vertex a = 0; a < t.size(); ++a) {
    const auto pu = path_vector(t, u, a), pv = path_vector(t, v, a);
    if (pv < pu && pu.back() != pv.back()) s[a] = pu.back() - pv.back();
  }
  return TreeElement(t, s);
}

TreeElement ref_meet(const RootedTree& t, const TreeElement& u, const TreeElement& v) {
  TreeElement::Support s;
  for (Vertex a = 0; a < t.size(); ++a) {
    const auto m = std::min(path_vector(t, u, a), path_vector(t, v, a));
    if (m.back() != 0) s[a] = m.back();
  }
  return TreeElement(t, s);
}

bool ref_leq(const RootedTree& t, const TreeElement& u, const TreeElement& v) {
  for (Vertex a = 0; a < t.size(); ++a)
    if (path_vector(t, v, a) < path_vector(t, u, a)) return false;
  return true;
}

bool ref_member(const RootedTree& t, const std::vector<Vertex>& antichain, const TreeElement& u) {
  for (Vertex a : antichain)
    for (std::int64_t x : path_vector(t, u, a))
      if (x != 0) return false;
  return true;
}

/// Every valid element with entries in {-1, 0, 1}. Indicators are among them,
/// so membership over this set separates distinct ideals.
std::vector<TreeElement> small_elements(const RootedTree& t) {
  std::vector<TreeElement> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < t.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    TreeElement::Support s;
    std::size_t c = code;
    for (Vertex v = 0; v < t.size(); ++v, c /= 3)
      if (c % 3 != 0) s[v] = c % 3 == 1 ? 1 : -1;
    const bool ok = valid_support(t, s);
    REQUIRE(satisfies_tree_invariant(t, s) == ok);
    if (ok) out.emplace_back(t, s);
  }
  return out;
}

std::vector<std::vector<Vertex>> all_antichains(const RootedTree& t) {
  std::vector<std::vector<Vertex>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << t.size()); ++m) {
    std::vector<Vertex> vs;
    bool anti = true;
    for (Vertex a = 0; a < t.size(); ++a) {
      if (!((m >> a) & 1U)) continue;
      for (Vertex b : vs) anti = anti && !t.ancestor_or_equal(a, b) && !t.ancestor_or_equal(b, a);
      vs.push_back(a);
    }
    if (anti) out.push_back(vs);
  }
  return out;
}

Vertex named(const RootedTree& t, const std::string& name) {
  for (Vertex v = 0; v < t.size(); ++v)
    if (t.name(v) == name) return v;
  FAIL("no vertex " << name);
  return 0;
}

PathIdeal ideal_of(const RootedTree& t, std::initializer_list<const char*> names) {
  std::vector<Vertex> vs;
  for (const char* n : names) vs.push_back(named(t, n));
  return canonical_antichain(t, vs);
}

TreeElement elem(const RootedTree& t, std::initializer_list<std::pair<const char*, std::int64_t>> entries) {
  TreeElement::Support s;
  for (const auto& [n, x] : entries) s[named(t, n)] = x;
  return TreeElement(t, s);
}

}  // namespace

TEST_CASE("rooted tree construction") {
  const RootedTree h = RootedTree::h_tree();
  CHECK(h.size() == 5);
  CHECK(h.lca(named(h, "gamma"), named(h, "delta")) == named(h, "beta"));
  CHECK(h.lca(named(h, "gamma"), named(h, "alpha")) == 0);
  CHECK(h.leaves().size() == 3);
  CHECK(RootedTree::chain(4).leaves().size() == 1);
  CHECK(RootedTree::star(3).leaves().size() == 3);
  CHECK_THROWS_AS(RootedTree({0, 0}), StructureError);
  CHECK_THROWS_AS(RootedTree({std::nullopt, 2, 1}), StructureError);
  CHECK_THROWS_AS(RootedTree({std::nullopt, std::nullopt}), StructureError);
  CHECK_THROWS_AS(RootedTree({std::nullopt, 5}), StructureError);
  CHECK_THROWS_AS(RootedTree(std::vector<std::optional<Vertex>>(65, 0)), GuardError);
}

TEST_CASE("element invariant") {
  const RootedTree t2 = RootedTree::star(2);
  CHECK_NOTHROW(elem(t2, {{"lambda", 1}, {"alpha1", -3}}));
  CHECK_THROWS_AS(elem(t2, {{"alpha1", -1}}), StructureError);
  CHECK_THROWS_AS(TreeElement(t2, {{7, 1}}), StructureError);
  CHECK(TreeElement(t2, {{1, 0}}).is_zero());
  CHECK_THROWS_AS(indicator(t2, 1, 0), PreconditionError);
  for (const RootedTree& t : all_rooted_trees(5)) small_elements(t);
}

TEST_CASE("lexicographic comparison along a path") {
  const RootedTree h = RootedTree::h_tree();
  const Vertex delta = named(h, "delta");
  CHECK(compare_lex(h, elem(h, {{"beta", 2}, {"delta", -1}}), elem(h, {{"beta", 1}, {"delta", 5}}), delta) ==
        LexOrder::greater);
  CHECK(compare_lex(h, TreeElement(), elem(h, {{"beta", 1}}), delta) == LexOrder::less);
  CHECK(compare_lex(h, elem(h, {{"beta", 2}}), elem(h, {{"beta", 2}, {"alpha", 4}}), named(h, "beta")) ==
        LexOrder::equal);

  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const RootedTree t = random_tree(rng, 8);
    const TreeElement u = random_tree_element(rng, t), v = random_tree_element(rng, t);
    for (Vertex a = 0; a < t.size(); ++a) {
      const auto pu = path_vector(t, u, a), pv = path_vector(t, v, a);
      const LexOrder expected = pu < pv ? LexOrder::less : pu == pv ? LexOrder::equal : LexOrder::greater;
      REQUIRE(compare_lex(t, u, v, a) == expected);
    }
  }
}

TEST_CASE("tree operation") {
  const RootedTree t2 = RootedTree::star(2);
  const TreeElement u = elem(t2, {{"lambda", 1}});
  const TreeElement v = elem(t2, {{"alpha1", 3}});
  const TreeElement r = tree_op(t2, u, v);
  CHECK(r == elem(t2, {{"lambda", 1}, {"alpha1", -3}}));
  CHECK(tree_leq(t2, r, u));
  CHECK(tree_op(t2, u, u).is_zero());
  CHECK(tree_op(t2, u, TreeElement()) == u);

  Rng rng(12);
  for (int i = 0; i < 3000; ++i) {
    const RootedTree t = random_tree(rng, 8);
    const TreeElement a = random_tree_element(rng, t), b = random_tree_element(rng, t);
    const TreeElement ab = tree_op(t, a, b);
    REQUIRE(ab == ref_op(t, a, b));
    REQUIRE(tree_leq(t, a, b) == ref_leq(t, a, b));
    REQUIRE(ref_leq(t, ab, a));
  }
}

TEST_CASE("exhaustive axioms on small elements") {
  for (const RootedTree& t : all_rooted_trees(3)) {
    const auto els = small_elements(t);
    for (const auto& x : els) {
      CHECK(tree_op(t, x, x).is_zero());
      CHECK(tree_op(t, x, TreeElement()) == x);
      for (const auto& y : els) {
        const TreeElement xy = tree_op(t, x, y);
        CHECK(tree_op(t, x, xy) == tree_op(t, y, tree_op(t, y, x)));
        for (const auto& z : els) CHECK(tree_op(t, xy, z) == tree_op(t, tree_op(t, x, z), y));
      }
    }
  }
}

TEST_CASE("meet") {
  const RootedTree t2 = RootedTree::star(2);
  CHECK(tree_meet(t2, elem(t2, {{"alpha1", 2}}), elem(t2, {{"alpha2", 5}})).is_zero());
  Rng rng(13);
  for (int i = 0; i < 3000; ++i) {
    const RootedTree t = random_tree(rng, 8);
    const TreeElement u = random_tree_element(rng, t), v = random_tree_element(rng, t);
    const TreeElement m = tree_meet(t, u, v);
    REQUIRE(m == ref_meet(t, u, v));
    REQUIRE(m == tree_op(t, u, tree_op(t, u, v)));
    REQUIRE(m == tree_op(t, v, tree_op(t, v, u)));
    REQUIRE(tree_meet(t, u, TreeElement()).is_zero());
    REQUIRE(tree_meet(t, u, u) == u);
  }
}

TEST_CASE("membership and canonical antichains") {
  const RootedTree t2 = RootedTree::star(2);
  CHECK(ideal_membership(t2, ideal_of(t2, {"alpha1"}), elem(t2, {{"alpha2", 4}})));
  CHECK(ideal_of(t2, {"lambda", "alpha1"}) == ideal_of(t2, {"alpha1"}));
  CHECK(canonical_antichain(t2, {}).is_whole());
  CHECK(ideal_of(t2, {"alpha1", "alpha2"}).antichain().size() == 2);
  CHECK(zero_ideal(t2) == ideal_of(t2, {"alpha1", "alpha2"}));

  for (const RootedTree& t : all_rooted_trees(5)) {
    const auto els = small_elements(t);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << t.size()); ++m) {
      std::vector<Vertex> vs;
      for (Vertex a = 0; a < t.size(); ++a)
        if ((m >> a) & 1U) vs.push_back(a);
      const PathIdeal c = canonical_antichain(t, vs);
      for (Vertex a : c.antichain())
        for (Vertex b : c.antichain()) CHECK((a == b || !t.ancestor_or_equal(a, b)));
      for (const auto& u : els) {
        CHECK(ideal_membership(t, c, u) == ref_member(t, vs, u));
        if (c == zero_ideal(t)) CHECK(ideal_membership(t, c, u) == u.is_zero());
        if (c.is_whole()) CHECK(ideal_membership(t, c, u));
      }
    }
  }
}

TEST_CASE("ideal order, meet and join agree with membership") {
  const RootedTree t2 = RootedTree::star(2);
  CHECK(ideal_leq(t2, ideal_of(t2, {"alpha1"}), ideal_of(t2, {"lambda"})));
  CHECK(ideal_join(t2, ideal_of(t2, {"alpha1"}), ideal_of(t2, {"alpha2"})) == ideal_of(t2, {"lambda"}));
  const RootedTree h = RootedTree::h_tree();
  CHECK(ideal_meet(h, ideal_of(h, {"gamma"}), ideal_of(h, {"delta"})) == ideal_of(h, {"gamma", "delta"}));

  for (const RootedTree& t : all_rooted_trees(5)) {
    const auto els = small_elements(t);
    const auto antichains = all_antichains(t);
    std::vector<std::vector<bool>> members;
    for (const auto& r : antichains) {
      std::vector<bool> row;
      for (const auto& u : els) row.push_back(ref_member(t, r, u));
      members.push_back(row);
    }
    auto subset = [&](std::size_t i, std::size_t j) {
      for (std::size_t k = 0; k < els.size(); ++k)
        if (members[i][k] && !members[j][k]) return false;
      return true;
    };
    auto index = [&](const PathIdeal& p) {
      const auto it = std::find(antichains.begin(), antichains.end(), p.antichain());
      REQUIRE(it != antichains.end());
      return static_cast<std::size_t>(it - antichains.begin());
    };
    for (std::size_t i = 0; i < antichains.size(); ++i) {
      const PathIdeal ri = canonical_antichain(t, antichains[i]);
      CHECK(ideal_leq(t, zero_ideal(t), ri));
      CHECK(ideal_leq(t, ri, PathIdeal()));
      CHECK(ideal_meet(t, ri, PathIdeal()) == ri);
      for (std::size_t j = 0; j < antichains.size(); ++j) {
        const PathIdeal rj = canonical_antichain(t, antichains[j]);
        CHECK(ideal_leq(t, ri, rj) == subset(i, j));
        const std::size_t m = index(ideal_meet(t, ri, rj));
        const std::size_t jn = index(ideal_join(t, ri, rj));
        // Greatest lower and least upper bounds among all ideals.
        CHECK(subset(m, i));
        CHECK(subset(m, j));
        CHECK(subset(i, jn));
        CHECK(subset(j, jn));
        for (std::size_t k = 0; k < antichains.size(); ++k) {
          if (subset(k, i) && subset(k, j)) CHECK(subset(k, m));
          if (subset(i, k) && subset(j, k)) CHECK(subset(jn, k));
        }
      }
    }
  }
}

TEST_CASE("lattice laws on all trees with at most six vertices") {
  for (const RootedTree& t : all_rooted_trees(6)) {
    std::vector<PathIdeal> ideals;
    for (const auto& r : all_antichains(t)) ideals.push_back(canonical_antichain(t, r));
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        REQUIRE(ideal_meet(t, a, ideal_join(t, a, b)) == a);
        REQUIRE(ideal_join(t, a, ideal_meet(t, a, b)) == a);
        for (const auto& c : ideals)
          REQUIRE(ideal_meet(t, a, ideal_join(t, b, c)) ==
                  ideal_join(t, ideal_meet(t, a, b), ideal_meet(t, a, c)));
      }
  }
}

TEST_CASE("closure of I(R) under the ideal rule") {
  Rng rng(14);
  for (int i = 0; i < 3000; ++i) {
    const RootedTree t = random_tree(rng, 8);
    std::vector<Vertex> vs;
    for (int k = 0; k < 2; ++k) vs.push_back(std::uniform_int_distribution<Vertex>(0, t.size() - 1)(rng));
    const PathIdeal r = canonical_antichain(t, vs);
    // Bias v and u*v toward the ideal by meeting with a principal generator.
    const TreeElement g = principal_generator(t, r);
    const TreeElement u = random_tree_element(rng, t);
    const TreeElement v = i % 2 ? tree_meet(t, random_tree_element(rng, t), g) : random_tree_element(rng, t);
    if (ideal_membership(t, r, tree_op(t, u, v)) && ideal_membership(t, r, v)) REQUIRE(ideal_membership(t, r, u));
  }
}

TEST_CASE("generated ideals and principal generators") {
  for (const RootedTree& t : all_rooted_trees(5)) {
    const auto antichains = all_antichains(t);
    for (const auto& r : antichains) {
      const PathIdeal p = canonical_antichain(t, r);
      const TreeElement g = principal_generator(t, p);
      CHECK(ideal_membership(t, p, g));
      CHECK(tree_generated_ideal(t, {g}) == p);
    }
  }
  Rng rng(15);
  for (int i = 0; i < 2000; ++i) {
    const RootedTree t = random_tree(rng, 7);
    std::vector<TreeElement> s;
    const int n = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int k = 0; k < n; ++k) s.push_back(random_tree_element(rng, t, 3));
    // Least ideal containing S, searched over all antichains.
    std::optional<PathIdeal> least;
    for (const auto& r : all_antichains(t)) {
      bool contains = true;
      for (const auto& x : s) contains = contains && ref_member(t, r, x);
      const PathIdeal c = canonical_antichain(t, r);
      if (contains && (!least || ideal_leq(t, c, *least))) least = c;
    }
    REQUIRE(least.has_value());
    REQUIRE(tree_generated_ideal(t, s) == *least);
  }
}

TEST_CASE("membership witnesses") {
  Rng rng(16);
  int found = 0;
  for (int i = 0; i < 3000; ++i) {
    const RootedTree t = random_tree(rng, 7);
    std::vector<TreeElement> s;
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < n; ++k) s.push_back(random_tree_element(rng, t, 4));
    const TreeElement u = i % 2 ? tree_meet(t, random_tree_element(rng, t), s[0]) : random_tree_element(rng, t);
    const auto w = tree_membership_witness(t, u, s);
    const bool member = ideal_membership(t, tree_generated_ideal(t, s), u);
    REQUIRE(w.has_value() == member);
    if (!w) continue;
    ++found;
    TreeElement acc = u;
    for (const auto& x : *w) {
      REQUIRE(std::find(s.begin(), s.end(), x) != s.end());
      acc = tree_op(t, acc, x);
    }
    REQUIRE(acc.is_zero());
  }
  CHECK(found > 500);
}

TEST_CASE("join witnesses") {
  const RootedTree t2 = RootedTree::star(2);
  const Vertex a1 = named(t2, "alpha1"), a2 = named(t2, "alpha2");
  const JoinWitness z = join_witness(t2, TreeElement(), a1, a2);
  CHECK(z.v.is_zero());
  CHECK(z.w.is_zero());
  const TreeElement u = elem(t2, {{"alpha1", 1}, {"alpha2", 1}});
  const JoinWitness jw = join_witness(t2, u, a1, a2);
  CHECK(jw.v == elem(t2, {{"alpha2", 1}}));
  CHECK(jw.w == elem(t2, {{"alpha1", 1}}));
  CHECK(tree_op(t2, tree_op(t2, u, jw.v), jw.w).is_zero());
  CHECK_THROWS_AS(join_witness(t2, elem(t2, {{"lambda", 1}}), a1, a2), PreconditionError);

  const RootedTree h = RootedTree::h_tree();
  const TreeElement uh = elem(h, {{"alpha", 2}});
  const JoinWitness hw = join_witness(h, uh, named(h, "beta"), named(h, "alpha"));
  CHECK(hw.v == uh);
  CHECK(hw.w.is_zero());

  Rng rng(17);
  for (int i = 0; i < 3000; ++i) {
    const RootedTree t = random_tree(rng, 8);
    std::uniform_int_distribution<Vertex> pick(0, t.size() - 1);
    const Vertex p = pick(rng), q = pick(rng);
    const PathIdeal l = canonical_antichain(t, {t.lca(p, q)});
    const TreeElement x = tree_meet(t, random_tree_element(rng, t), principal_generator(t, l));
    REQUIRE(ideal_membership(t, l, x));
    const JoinWitness w = join_witness(t, x, p, q);
    REQUIRE(ideal_membership(t, canonical_antichain(t, {p}), w.v));
    REQUIRE(ideal_membership(t, canonical_antichain(t, {q}), w.w));
    REQUIRE(tree_op(t, tree_op(t, x, w.v), w.w).is_zero());
  }
}

TEST_CASE("ideal lattices of small trees") {
  CHECK(tree_ideal_lattice(RootedTree::star(2)).ideals.size() == 5);
  CHECK(tree_ideal_lattice(RootedTree::star(3)).ideals.size() == 9);
  CHECK(tree_ideal_lattice(RootedTree::h_tree()).ideals.size() == 11);
  for (const RootedTree& t : all_rooted_trees(7)) {
    const TreeIdealLattice l = tree_ideal_lattice(t);
    REQUIRE(l.ideals.size() == all_antichains(t).size());
    REQUIRE(l.ideals.front() == zero_ideal(t));
    REQUIRE(l.ideals.back().is_whole());
    for (std::size_t i = 0; i < l.ideals.size(); ++i) {
      REQUIRE(l.index_of(l.ideals[i]) == std::optional<std::size_t>(i));
      REQUIRE(l.prime[i] == (l.ideals[i].antichain().size() == 1));
      for (std::size_t j = 0; j < l.ideals.size(); ++j)
        REQUIRE(l.lattice.leq(i, j) == ideal_leq(t, l.ideals[i], l.ideals[j]));
    }
  }
}

TEST_CASE("prime ideals are the single paths") {
  const auto count = [](const RootedTree& t) { return tree_prime_ideals(t).size(); };
  CHECK(count(RootedTree::star(2)) == 3);
  CHECK(count(RootedTree::h_tree()) == 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    const FinitePoset p = tree_prime_ideals(RootedTree::chain(n));
    CHECK(p.size() == n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK((p.leq(i, j) || p.leq(j, i)));
  }

  Rng rng(18);
  for (const RootedTree& t : all_rooted_trees(5)) {
    const auto els = small_elements(t);
    for (const auto& r : all_antichains(t)) {
      const PathIdeal ideal = canonical_antichain(t, r);
      if (ideal.is_whole()) continue;
      if (is_tree_prime(ideal)) {
        for (int k = 0; k < 400; ++k) {
          const TreeElement& u = els[std::uniform_int_distribution<std::size_t>(0, els.size() - 1)(rng)];
          const TreeElement& v = els[std::uniform_int_distribution<std::size_t>(0, els.size() - 1)(rng)];
          if (ideal_membership(t, ideal, tree_meet(t, u, v)))
            CHECK((ideal_membership(t, ideal, u) || ideal_membership(t, ideal, v)));
        }
      } else {
        // Indicators at two incomparable vertices of R refute primality.
        const Vertex a = ideal.antichain()[0], b = ideal.antichain()[1];
        const TreeElement u = indicator(t, a), v = indicator(t, b);
        CHECK(ideal_membership(t, ideal, tree_meet(t, u, v)));
        CHECK_FALSE(ideal_membership(t, ideal, u));
        CHECK_FALSE(ideal_membership(t, ideal, v));
      }
    }
  }
}
