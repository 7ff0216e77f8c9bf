#include <doctest.h>

#include "bck/algebra.hpp"
#include "bck/constructions.hpp"
#include "bck/corpus.hpp"
#include "bck/errors.hpp"
#include "oracles.hpp"

using namespace bck;

namespace {

const bck::Table kBroken = {{0, 0, 0}, {1, 0, 0}, {2, 2, 0}};

FiniteCbckAlgebra two_atoms() {
  return cbck_union(std::vector<FiniteCbckAlgebra>{standard_chain(1), standard_chain(1)}).algebra;
}

}  // namespace

TEST_CASE("C_2 truncated difference satisfies all four axioms") {
  const AxiomReport r = check_axioms(oracle::chain_table(2));
  CHECK(r.all_hold());
  for (const auto& result : r.results) CHECK_FALSE(result.witness.has_value());
}

TEST_CASE("one-element table passes") {
  CHECK(check_axioms({{0}}).all_hold());
  CHECK_NOTHROW(FiniteCbckAlgebra(bck::Table{{0}}));
}

TEST_CASE("broken table fails cBCK2 only") {
  const AxiomReport r = check_axioms(kBroken);
  CHECK_FALSE(r.all_hold());
  CHECK(r[Axiom::cbck1].holds);
  CHECK(r[Axiom::cbck3].holds);
  CHECK(r[Axiom::cbck4].holds);
  REQUIRE_FALSE(r[Axiom::cbck2].holds);
  REQUIRE(r[Axiom::cbck2].witness.has_value());
  const Element x = (*r[Axiom::cbck2].witness)[0];
  const Element y = (*r[Axiom::cbck2].witness)[1];
  // Either order of the pair {1,2} refutes the law, which is symmetric.
  CHECK(((x == 1 && y == 2) || (x == 2 && y == 1)));
  CHECK(kBroken[x][kBroken[x][y]] != kBroken[y][kBroken[y][x]]);
  CHECK_THROWS_AS(FiniteCbckAlgebra{kBroken}, AxiomError);
}

TEST_CASE("malformed tables are structural errors") {
  CHECK_THROWS_AS(check_axioms({{0, 0}, {1}}), StructureError);
  CHECK_THROWS_AS(check_axioms({{0, 5}, {1, 0}}), StructureError);
  CHECK_THROWS_AS(check_axioms({}), StructureError);
}

TEST_CASE("axiom checker agrees with direct evaluation on 6561 three-element tables") {
  // Eight entries range over {0,1,2} and t[2][2] stays 0. x0 = x and 0y = 0
  // are left free so cBCK4 failures show up too.
  for (int code = 0; code < 81 * 81; ++code) {
    bck::Table t(3, std::vector<Element>(3));
    int c = code;
    for (Element x = 0; x < 3; ++x)
      for (Element y = 0; y < 3; ++y) {
        if (x * 3 + y >= 8) {
          t[x][y] = 0;
          continue;
        }
        t[x][y] = static_cast<Element>(c % 3);
        c /= 3;
      }
    bool ok[4] = {true, true, true, true};
    for (Element x = 0; x < 3; ++x) {
      ok[2] = ok[2] && t[x][x] == 0;
      ok[3] = ok[3] && t[x][0] == x;
      for (Element y = 0; y < 3; ++y) {
        ok[1] = ok[1] && t[x][t[x][y]] == t[y][t[y][x]];
        for (Element z = 0; z < 3; ++z) ok[0] = ok[0] && t[t[x][y]][z] == t[t[x][z]][y];
      }
    }
    const AxiomReport r = check_axioms(t);
    for (int k = 0; k < 4; ++k) REQUIRE(r.results[k].holds == ok[k]);
  }
}

TEST_CASE("derived order") {
  const auto c2 = standard_chain(2);
  CHECK(c2.leq(1, 2));
  CHECK_FALSE(c2.leq(2, 1));
  for (const auto& entry : finite_corpus()) {
    const auto& a = entry.algebra;
    for (Element x = 0; x < a.size(); ++x) {
      CHECK(a.leq(0, x));
      CHECK(a.leq(x, x));
      for (Element y = 0; y < a.size(); ++y) {
        if (a.leq(x, y) && a.leq(y, x)) CHECK(x == y);
        for (Element z = 0; z < a.size(); ++z)
          if (a.leq(x, y) && a.leq(y, z)) CHECK(a.leq(x, z));
      }
    }
  }
}

TEST_CASE("meet") {
  CHECK(standard_chain(3).meet(2, 3) == 2);
  const auto u = two_atoms();
  CHECK(u.meet(1, 2) == 0);
  for (const auto& entry : finite_corpus()) {
    const auto& a = entry.algebra;
    for (Element x = 0; x < a.size(); ++x) {
      CHECK(a.meet(x, 0) == 0);
      CHECK(a.meet(x, x) == x);
      for (Element y = 0; y < a.size(); ++y) {
        const Element m = a.meet(x, y);
        CHECK(m == a.meet(y, x));
        CHECK(m == a.op(x, a.op(x, y)));
        // Greatest lower bound, checked against every element.
        CHECK(a.leq(m, x));
        CHECK(a.leq(m, y));
        for (Element z = 0; z < a.size(); ++z) {
          if (a.leq(z, x) && a.leq(z, y)) CHECK(a.leq(z, m));
          CHECK(a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z)));
        }
      }
    }
  }
}

TEST_CASE("monotonicity in each argument") {
  for (const auto& entry : finite_corpus()) {
    const auto& a = entry.algebra;
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        CHECK(a.leq(a.op(x, y), x));
        CHECK((a.op(x, y) == x) == (a.meet(x, y) == 0));
        if (!a.leq(x, y)) continue;
        for (Element z = 0; z < a.size(); ++z) {
          CHECK(a.leq(a.op(x, z), a.op(y, z)));
          CHECK(a.leq(a.op(z, y), a.op(z, x)));
        }
      }
  }
}

TEST_CASE("the reversed monotonicity statement has a counterexample in C_2") {
  const auto c2 = standard_chain(2);
  // 0 <= 2, yet 2*0 = 2 is not below 2*2 = 0.
  CHECK(c2.leq(0, 2));
  CHECK_FALSE(c2.leq(c2.op(2, 0), c2.op(2, 2)));
}

TEST_CASE("top element") {
  for (std::size_t k = 1; k <= 6; ++k) CHECK(standard_chain(k).top() == std::optional<Element>(k));
  CHECK(trivial_algebra().top() == std::optional<Element>(0));
  CHECK_FALSE(two_atoms().top().has_value());
  for (const auto& entry : finite_corpus()) {
    const auto& a = entry.algebra;
    std::optional<Element> expected;
    for (Element t = 0; t < a.size(); ++t) {
      bool top = true;
      for (Element y = 0; y < a.size(); ++y) top = top && a.op(y, t) == 0;
      if (top) expected = t;
    }
    CHECK(a.top() == expected);
  }
}

TEST_CASE("bounded join") {
  const auto c2 = standard_chain(2);
  CHECK(c2.join(1, 2) == 2);
  CHECK_THROWS_AS(two_atoms().join(1, 2), PreconditionError);
  for (const auto& entry : finite_corpus()) {
    const auto& a = entry.algebra;
    if (!a.is_bounded()) continue;
    const Element one = *a.top();
    for (Element x = 0; x < a.size(); ++x) {
      CHECK(a.join(x, 0) == x);
      CHECK(a.join(x, one) == one);
      for (Element y = 0; y < a.size(); ++y) {
        const Element j = a.join(x, y);
        CHECK(a.leq(x, j));
        CHECK(a.leq(y, j));
        for (Element z = 0; z < a.size(); ++z) {
          if (a.leq(x, z) && a.leq(y, z)) CHECK(a.leq(j, z));
          CHECK(a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z)));
        }
      }
    }
  }
}

TEST_CASE("powers") {
  const auto c3 = standard_chain(3);
  CHECK(c3.power(3, 1, 3) == 0);
  CHECK(c3.power(3, 1, 2) == 1);
  for (const auto& entry : finite_corpus()) {
    const auto& a = entry.algebra;
    for (Element x = 0; x < a.size(); ++x) {
      for (std::size_t n = 0; n < 4; ++n) CHECK(a.power(x, 0, n) == x);
      for (Element y = 0; y < a.size(); ++y) {
        CHECK(a.power(x, y, 0) == x);
        Element expected = x;
        for (std::size_t n = 1; n <= a.size() + 1; ++n) {
          const Element next = a.op(expected, y);
          CHECK(a.leq(next, expected));
          expected = next;
          CHECK(a.power(x, y, n) == expected);
        }
      }
    }
  }
}

TEST_CASE("E_n identities") {
  const EnReport c1 = satisfies_En(standard_chain(1), 1);
  CHECK(c1.holds);
  REQUIRE(c1.implicative.has_value());
  CHECK(*c1.implicative);

  const EnReport c3 = satisfies_En(standard_chain(3), 1);
  CHECK_FALSE(c3.holds);
  REQUIRE(c3.witness.has_value());
  const auto [x, y] = *c3.witness;
  const auto a = standard_chain(3);
  CHECK(a.power(x, y, 1) != a.power(x, y, 2));
  CHECK(satisfies_En(a, 3).holds);

  for (const auto& entry : finite_corpus()) {
    CHECK(satisfies_En(entry.algebra, entry.algebra.size()).holds);
    CHECK(satisfies_dcc(entry.algebra));
  }
}

TEST_CASE("directed and chain") {
  for (std::size_t k = 1; k <= 5; ++k) {
    CHECK(is_chain(standard_chain(k)));
    CHECK(is_directed(standard_chain(k)));
  }
  CHECK_FALSE(is_directed(two_atoms()));
  CHECK_FALSE(is_chain(two_atoms()));
  for (const auto& entry : finite_corpus()) {
    const auto& a = entry.algebra;
    bool directed = true, chain = true;
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        chain = chain && (a.leq(x, y) || a.leq(y, x));
        bool bound = false;
        for (Element z = 0; z < a.size(); ++z) bound = bound || (a.leq(x, z) && a.leq(y, z));
        directed = directed && bound;
      }
    CHECK(is_directed(a) == directed);
    CHECK(is_chain(a) == chain);
    if (a.is_bounded()) CHECK(directed);
    if (directed)
      for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < a.size(); ++y) CHECK(a.meet(a.op(x, y), a.op(y, x)) == 0);
  }
}

TEST_CASE("homomorphisms") {
  const auto c2 = standard_chain(2);
  const auto c1 = standard_chain(1);
  CHECK(check_homomorphism({c2, c2, {0, 1, 2}}).holds);
  CHECK(check_homomorphism({c2, c2, {0, 0, 0}}).holds);
  const HomomorphismCheck bad = check_homomorphism({c2, c1, {0, 1, 1}});
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == std::pair<Element, Element>{2, 1});
  CHECK_THROWS_AS(check_homomorphism({c2, c1, {0, 1}}), StructureError);
  CHECK_THROWS_AS(check_homomorphism({c2, c1, {0, 1, 3}}), StructureError);
}
