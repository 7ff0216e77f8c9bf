#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bck/commands.hpp"
#include "bck/corpus.hpp"
#include "bck/dot.hpp"
#include "bck/errors.hpp"
#include "bck/io.hpp"
#include "bck/spectra.hpp"

using namespace bck;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

const char* kT2 = R"({"kind":"tree","parents":[null,0,0]})";
const char* kBroken = R"({"kind":"table","table":[[0,0,0],[1,0,0],[2,2,0]]})";

}  // namespace

TEST_CASE("algebra JSON round trip") {
  for (const auto& entry : finite_corpus()) {
    const Json j = to_json(entry.algebra);
    CHECK(j["kind"] == "table");
    CHECK(parse_algebra(j).table() == entry.algebra.table());
    CHECK(parse_algebra(Json::parse(j.dump())).table() == entry.algebra.table());
  }
  const Json nested = Json::parse(
      R"({"kind":"union","components":[{"kind":"chain","k":2},{"kind":"product","components":[{"kind":"chain","k":1},{"kind":"trivial"}]}]})");
  const auto expected = cbck_union(std::vector{standard_chain(2), direct_product(std::vector{standard_chain(1), trivial_algebra()})});
  CHECK(parse_algebra(nested).table() == expected.algebra.table());
}

TEST_CASE("algebra parse errors") {
  CHECK_THROWS_AS(parse_algebra(Json::parse(R"({"k":3})")), ParseError);
  CHECK_THROWS_AS(parse_algebra(Json::parse(R"({"kind":"nope"})")), ParseError);
  CHECK_THROWS_AS(parse_algebra(Json::parse(R"({"kind":"chain","k":-1})")), ParseError);
  CHECK_THROWS_AS(parse_algebra(Json::parse(R"({"kind":"chain","k":"3"})")), ParseError);
  CHECK_THROWS_AS(parse_algebra(Json::parse(R"({"kind":"union","components":[]})")), ParseError);
  CHECK_THROWS_AS(parse_algebra(Json::parse(R"({"kind":"table","table":[[0,0],[1]]})")), StructureError);
  CHECK_THROWS_AS(parse_algebra(Json::parse(R"({"kind":"table","size":3,"table":[[0,0],[1,0]]})")), StructureError);
  CHECK_THROWS_AS(parse_algebra(Json::parse(kBroken)), AxiomError);
  CHECK_THROWS_AS(parse_algebra(Json::parse("[1,2]")), ParseError);
}

TEST_CASE("homomorphism parsing") {
  const BckHomomorphism h =
      parse_homomorphism(Json::parse(R"({"source":{"kind":"chain","k":2},"target":{"kind":"chain","k":2},"map":[0,1,2]})"));
  CHECK(check_homomorphism(h).holds);
  CHECK_THROWS_AS(parse_homomorphism(Json::parse(R"({"source":{"kind":"chain","k":2},"map":[0]})")), ParseError);
}

TEST_CASE("tree, element and ideal JSON") {
  for (const RootedTree& t : all_rooted_trees(5)) {
    const RootedTree back = parse_tree(to_json(t));
    CHECK(back == t);
    for (Vertex v = 0; v < t.size(); ++v) CHECK(back.name(v) == t.name(v));
  }
  const RootedTree h = RootedTree::h_tree();
  CHECK(parse_tree(to_json(h)).name(2) == "beta");
  CHECK_THROWS_AS(parse_tree(Json::parse(R"({"kind":"tree","parents":[0,0]})")), StructureError);
  CHECK_THROWS_AS(parse_tree(Json::parse(R"({"kind":"tree"})")), ParseError);

  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const RootedTree t = random_tree(rng, 8);
    const TreeElement u = random_tree_element(rng, t);
    CHECK(parse_tree_element(t, Json::parse(to_json(u).dump())) == u);
    const PathIdeal p = tree_generated_ideal(t, {u});
    CHECK(parse_path_ideal(t, to_json(p)) == p);
  }
  const RootedTree t2 = RootedTree::star(2);
  CHECK(to_json(PathIdeal())["antichain"].is_null());
  CHECK(parse_path_ideal(t2, Json::parse(R"({"antichain":[]})")).is_whole());
  CHECK(parse_path_ideal(t2, Json::parse(R"({"antichain":[0,1]})")) == canonical_antichain(t2, {1}));
  CHECK_THROWS_AS(parse_tree_element(t2, Json::parse(R"({"support":{"x":1}})")), ParseError);
  CHECK_THROWS_AS(parse_tree_element(t2, Json::parse(R"({"support":{"1":-1}})")), StructureError);
}

TEST_CASE("poset, lattice and space JSON") {
  const FinitePoset p = RootedTree::h_tree().ancestor_poset();
  const FinitePoset pb = parse_poset(to_json(p));
  CHECK(pb.matrix() == p.matrix());
  const FiniteDistLattice l = boolean_plus_top(3);
  const FiniteDistLattice lb = parse_lattice(to_json(l));
  CHECK(lb.size() == l.size());
  CHECK(lb.order().matrix() == l.order().matrix());
  CHECK(lb.top() == l.top());
  CHECK_THROWS_AS(parse_poset(Json::parse(R"({"kind":"poset","leq":[[1,1],[1,1]]})")), StructureError);
  CHECK_THROWS_AS(parse_lattice(Json::parse(R"({"kind":"lattice","leq":[[1,0],[0,1]]})")), StructureError);

  const FiniteSpace s = tree_spectrum(RootedTree::h_tree()).space;
  const FiniteSpace sb = parse_space(to_json(s));
  CHECK(sb.labels() == s.labels());
  CHECK(sb.opens() == s.opens());
  CHECK(sb.basis() == s.basis());
  CHECK(to_json(sb).dump() == to_json(s).dump());
}

TEST_CASE("DOT Hasse diagrams") {
  const std::string dot = hasse_dot(FinitePoset::chain(3), {"a", "b", "c"}, {true, false, false});
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(count_of(dot, "->") == 2);
  CHECK(count_of(dot, "color=red") == 2);
  CHECK(dot.find("\"a\"") != std::string::npos);
  // Covers only: the relation a < c is not drawn.
  CHECK(count_of(hasse_dot(boolean_lattice(2).order(), {"0", "1", "2", "3"}), "->") == 4);
}

TEST_CASE("CLI exit codes") {
  const Run ok = run({"check", "--spec", R"({"kind":"chain","k":3})"});
  CHECK(ok.code == cli::kOk);
  const Json report = Json::parse(ok.out);
  CHECK(report["passed"] == true);
  CHECK(report["simple"] == true);
  CHECK(run({"check", "--spec", R"({"kind":"table","table":[[0]]})"}).code == cli::kOk);

  const Run broken = run({"check", "--spec", kBroken});
  CHECK(broken.code == cli::kMathFailure);
  const Json witness = Json::parse(broken.out)["axioms"]["cBCK2"]["witness"];
  CHECK(witness.size() == 2);

  CHECK(run({"check", "--spec", "{bad"}).code == cli::kParseFailure);
  CHECK(run({"check", "--spec", R"({"kind":"nope"})"}).code == cli::kParseFailure);
  CHECK(run({"check"}).code == cli::kParseFailure);
  CHECK(run({"check", "--input", "/nonexistent/input.json"}).code == cli::kParseFailure);
  CHECK(run({"check", "--spec", R"({"kind":"chain","k":3})", "--format", "dot"}).code == cli::kParseFailure);
  CHECK(run({"check", "--spec", R"({"kind":"chain","k":3})", "--format", "svg"}).code == cli::kParseFailure);
  CHECK(run({}).code == cli::kParseFailure);
  CHECK(run({"frobnicate"}).code == cli::kParseFailure);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"verify", "nosuch"}).code == cli::kParseFailure);

  CHECK(run({"check", "--spec", R"({"kind":"chain","k":25})"}).code == cli::kGuardExceeded);
  CHECK(run({"spectrum", "--spec", R"({"kind":"chain","k":3})", "--guard", "2"}).code == cli::kGuardExceeded);
}

TEST_CASE("CLI reads input files") {
  const std::string path = "bck_io_cli_input.json";
  {
    std::ofstream f(path);
    f << R"({"kind":"union","components":[{"kind":"chain","k":1},{"kind":"chain","k":1}]})";
  }
  const Run r = run({"spectrum", "--input", path});
  std::remove(path.c_str());
  CHECK(r.code == cli::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["points"].size() == 2);
  CHECK(j["opens"].size() == 4);
  CHECK(j["checks"]["hausdorff"] == true);
}

TEST_CASE("CLI spectrum, ideals, tree and duality") {
  const Run t2 = run({"spectrum", "--spec", kT2});
  REQUIRE(t2.code == cli::kOk);
  const Json s = Json::parse(t2.out);
  CHECK(s["points"].size() == 3);
  CHECK(s["opens"].size() == 5);
  for (const char* key : {"T0", "quasi_sober", "multiplicative_basis", "spectral", "noetherian"})
    CHECK(s["checks"][key] == true);
  CHECK(s["checks"]["priestley"] == false);
  const Json c2 = Json::parse(run({"spectrum", "--spec", R"({"kind":"chain","k":2})"}).out);
  CHECK(c2["points"].size() == 1);

  const Run dot = run({"ideals", "--spec", kT2, "--format", "dot"});
  REQUIRE(dot.code == cli::kOk);
  CHECK(dot.out.find("rankdir=BT") != std::string::npos);
  CHECK(count_of(dot.out, "color=red") == 2 * 3);
  CHECK(count_of(dot.out, "->") == 5);
  const Json ideals = Json::parse(run({"ideals", "--spec", R"({"kind":"chain","k":4})"}).out);
  CHECK(ideals["count"] == 2);

  const Run arith = run({"tree", "--spec",
                         R"({"tree":{"kind":"tree","parents":[null,0,0]},"u":{"support":{"0":1}},"v":{"support":{"1":3}}})"});
  REQUIRE(arith.code == cli::kOk);
  const Json a = Json::parse(arith.out);
  CHECK(a["u*v"] == Json::parse(R"({"support":{"0":1,"1":-3}})"));
  CHECK(a["v<=u"] == true);
  const Json tr = Json::parse(run({"tree", "--spec", kT2}).out);
  CHECK(tr["ideal_count"] == 5);
  CHECK(tr["prime_count"] == 3);
  CHECK(tr["finitely_generated"] == true);

  const Json d = Json::parse(run({"duality", "--spec", R"({"kind":"tree","parents":[null,0,1,1]})"}).out);
  CHECK(d["kx_isomorphic_to_ideals"] == true);
  CHECK(d["mi_isomorphic_to_spectrum"] == true);
  const Run poset = run({"duality", "--spec", R"({"kind":"poset","leq":[[1,0],[0,1]]})"});
  CHECK(poset.code == cli::kOk);
  CHECK(Json::parse(poset.out)["lattice"]["size"] == 4);
  // N5 is a lattice but not distributive.
  const Run n5 = run({"duality", "--spec",
                      R"({"kind":"lattice","leq":[[1,1,1,1,1],[0,1,0,1,1],[0,0,1,0,1],[0,0,0,1,1],[0,0,0,0,1]]})"});
  CHECK(n5.code == cli::kMathFailure);
  CHECK(Json::parse(n5.out)["distributive"] == false);
  CHECK(run({"duality", "--spec", R"({"kind":"lattice","leq":[[1,0],[0,1]]})"}).code == cli::kParseFailure);
  const Run mdot = run({"duality", "--spec", R"({"kind":"chain","k":1})", "--format", "dot"});
  CHECK(count_of(mdot.out, "color=red") == 2);
}

TEST_CASE("CLI output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"spectrum", "--spec", R"({"kind":"union","components":[{"kind":"chain","k":2},{"kind":"chain","k":1}]})"},
      {"ideals", "--spec", R"({"kind":"product","components":[{"kind":"chain","k":1},{"kind":"chain","k":2}]})"},
      {"tree", "--spec", R"({"kind":"tree","parents":[null,0,0,2,2]})"},
      {"verify", "axioms-random", "--seed", "5"},
      {"verify", "union-homeo", "--seed", "9"}};
  for (const auto& c : commands) {
    const Run first = run(c), second = run(c);
    CHECK(first.code == cli::kOk);
    CHECK(first.out == second.out);
  }
  CHECK(run({"verify", "union-homeo", "--seed", "9"}).out != run({"verify", "union-homeo", "--seed", "10"}).out);
}

TEST_CASE("CLI verify") {
  const Run figures = run({"verify", "figures"});
  CHECK(figures.code == cli::kOk);
  const Json j = Json::parse(figures.out);
  CHECK(j["passed"] == true);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "figures");
  CHECK(!j["suites"][0]["checks"].empty());
  CHECK(run({"verify", "culmination"}).code == cli::kOk);
}
