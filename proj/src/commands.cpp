#include "bck/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bck/corpus.hpp"
#include "bck/dot.hpp"
#include "bck/errors.hpp"
#include "bck/ideals.hpp"
#include "bck/io.hpp"
#include "bck/spectra.hpp"
#include "bck/suites.hpp"

namespace bck::cli {

namespace {

struct Options {
  std::string input;
  std::string spec;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t guard = kDefaultIdealGuard;
  std::string suite;
};

constexpr std::size_t kTreeSampleTriples = 1000;

Json load_input(const Options& opt) {
  std::string text = opt.spec;
  if (text.empty()) {
    if (opt.input.empty()) throw ParseError("no input: pass --input <path> or --spec <json>");
    std::ifstream file(opt.input);
    if (!file) throw ParseError("cannot read " + opt.input);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

bool want_dot(const Options& opt) { return opt.format == "dot"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json axioms_json(const AxiomReport& report) {
  Json out = Json::object();
  for (const AxiomResult& r : report.results) {
    Json entry{{"holds", r.holds}};
    if (r.witness) {
      const std::size_t arity = r.axiom == Axiom::cbck1 ? 3 : r.axiom == Axiom::cbck2 ? 2 : 1;
      entry["witness"] = std::vector<Element>(r.witness->begin(), r.witness->begin() + arity);
    }
    out[to_string(r.axiom)] = entry;
  }
  return out;
}

Json covers_json(const FinitePoset& p) {
  Json out = Json::array();
  for (auto [a, b] : p.covers()) out.push_back({a, b});
  return out;
}

std::string simplicity_name(Simplicity s) {
  switch (s) {
    case Simplicity::trivial: return "trivial";
    case Simplicity::simple: return "simple";
    case Simplicity::not_simple: return "not_simple";
  }
  return "";
}

std::vector<std::string> set_labels(const std::vector<ElementSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(s.to_string());
  return out;
}

std::vector<std::string> ideal_labels(const RootedTree& tree, const std::vector<PathIdeal>& ideals) {
  std::vector<std::string> out;
  for (const auto& i : ideals) out.push_back(figure_label(tree, i));
  return out;
}

// ---- check ------------------------------------------------------------------

int check_tree(const RootedTree& tree, const Options& opt, std::ostream& out) {
  Rng rng(opt.seed);
  std::size_t failures[4] = {0, 0, 0, 0};
  const TreeElement zero;
  for (std::size_t i = 0; i < kTreeSampleTriples; ++i) {
    const TreeElement u = random_tree_element(rng, tree);
    const TreeElement v = random_tree_element(rng, tree);
    const TreeElement w = random_tree_element(rng, tree);
    auto op = [&](const TreeElement& a, const TreeElement& b) { return tree_op(tree, a, b); };
    failures[0] += op(op(u, v), w) != op(op(u, w), v);
    failures[1] += op(u, op(u, v)) != op(v, op(v, u));
    failures[2] += !op(u, u).is_zero();
    failures[3] += op(u, zero) != u;
  }
  Json axioms = Json::object();
  bool passed = true;
  for (int k = 0; k < 4; ++k) {
    axioms["cbck" + std::to_string(k + 1)] = {{"holds", failures[k] == 0}, {"failures", failures[k]}};
    passed = passed && failures[k] == 0;
  }
  const TreeIdealLattice lat = tree_ideal_lattice(tree);
  std::size_t primes = 0;
  for (bool p : lat.prime) primes += p;
  emit(out, {{"kind", "tree"},
             {"vertices", tree.size()},
             {"sampled_triples", kTreeSampleTriples},
             {"seed", opt.seed},
             {"axioms", axioms},
             {"passed", passed},
             {"ideal_count", lat.ideals.size()},
             {"prime_count", primes},
             {"simple", lat.ideals.size() == 2}});
  return passed ? kOk : kMathFailure;
}

int cmd_check(const Options& opt, std::ostream& out) {
  if (want_dot(opt)) throw ParseError("check reports JSON only");
  const Json j = load_input(opt);
  std::optional<AlgebraInput> parsed;
  try {
    parsed = parse_input(j);
  } catch (const AxiomError& e) {
    emit(out, {{"passed", false}, {"axioms", axioms_json(e.report())}, {"error", e.what()}});
    return kMathFailure;
  }
  if (const auto* tree = std::get_if<RootedTree>(&*parsed)) return check_tree(*tree, opt, out);

  const FiniteCbckAlgebra& a = std::get<FiniteCbckAlgebra>(*parsed);
  const AxiomReport report = check_axioms(a.table());
  const IdealLattice lat = all_ideals(a, opt.guard);
  const Simplicity s = simplicity(a, opt.guard);
  const auto top = a.top();
  emit(out, {{"passed", report.all_hold()},
             {"size", a.size()},
             {"axioms", axioms_json(report)},
             {"bounded", a.is_bounded()},
             {"top", top ? Json(*top) : Json(nullptr)},
             {"directed", is_directed(a)},
             {"chain", is_chain(a)},
             {"dcc", satisfies_dcc(a)},
             {"simplicity", simplicity_name(s)},
             {"simple", s == Simplicity::simple},
             {"involutory", is_involutory(a, opt.guard).holds},
             {"ideal_count", lat.ideals.size()},
             {"prime_count", lat.primes().size()}});
  return report.all_hold() ? kOk : kMathFailure;
}

// ---- spectrum ---------------------------------------------------------------

int report_space(const FiniteSpace& space, const Options& opt, std::ostream& out) {
  const FinitePoset order = specialization_order(space);
  if (want_dot(opt)) {
    out << hasse_dot(order, space.labels(), {}, "spectrum");
    return kOk;
  }
  const bool t0 = check_T0(space);
  const bool sober = check_quasi_sober(space);
  const bool basis = check_multiplicative_basis(space);
  Json report = to_json(space);
  report["checks"] = {{"T0", t0},
                      {"quasi_sober", sober},
                      {"multiplicative_basis", basis},
                      {"generalized_spectral", check_generalized_spectral(space)},
                      {"spectral", check_spectral(space)},
                      {"priestley", check_priestley(space, order)},
                      {"hausdorff", check_hausdorff(space)},
                      {"noetherian", check_noetherian(space)}};
  report["specialization_covers"] = covers_json(order);
  report["closed_points"] = point_set_json(closed_points(space));
  emit(out, report);
  return t0 && sober && basis ? kOk : kMathFailure;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
  const AlgebraInput in = parse_input(load_input(opt));
  if (const auto* tree = std::get_if<RootedTree>(&in)) return report_space(tree_spectrum(*tree).space, opt, out);
  return report_space(spectrum(std::get<FiniteCbckAlgebra>(in), opt.guard).space, opt, out);
}

// ---- ideals -----------------------------------------------------------------

int cmd_ideals(const Options& opt, std::ostream& out) {
  const AlgebraInput in = parse_input(load_input(opt));
  if (const auto* tree = std::get_if<RootedTree>(&in)) {
    const TreeIdealLattice lat = tree_ideal_lattice(*tree);
    const auto labels = ideal_labels(*tree, lat.ideals);
    if (want_dot(opt)) {
      out << hasse_dot(lat.lattice.order(), labels, lat.prime, "ideals");
      return kOk;
    }
    Json ideals = Json::array();
    for (std::size_t i = 0; i < lat.ideals.size(); ++i)
      ideals.push_back({{"label", labels[i]},
                        {"antichain", to_json(lat.ideals[i])["antichain"]},
                        {"prime", static_cast<bool>(lat.prime[i])}});
    emit(out, {{"count", lat.ideals.size()}, {"ideals", ideals}, {"covers", covers_json(lat.lattice.order())}});
    return kOk;
  }

  const IdealLattice lat = all_ideals(std::get<FiniteCbckAlgebra>(in), opt.guard);
  const auto labels = set_labels(lat.ideals);
  if (want_dot(opt)) {
    out << hasse_dot(lat.lattice.order(), labels, lat.prime, "ideals");
    return kOk;
  }
  Json ideals = Json::array();
  for (std::size_t i = 0; i < lat.ideals.size(); ++i)
    ideals.push_back({{"members", to_json(lat.ideals[i])},
                      {"prime", static_cast<bool>(lat.prime[i])},
                      {"maximal", static_cast<bool>(lat.maximal[i])}});
  emit(out, {{"count", lat.ideals.size()}, {"ideals", ideals}, {"covers", covers_json(lat.lattice.order())}});
  return kOk;
}

// ---- tree -------------------------------------------------------------------

int cmd_tree(const Options& opt, std::ostream& out) {
  const Json j = load_input(opt);
  if (j.is_object() && j.contains("tree")) {
    const RootedTree tree = parse_tree(j["tree"]);
    if (!j.contains("u") || !j.contains("v")) throw ParseError("expected operands \"u\" and \"v\"");
    if (want_dot(opt)) throw ParseError("element arithmetic reports JSON only");
    const TreeElement u = parse_tree_element(tree, j["u"]);
    const TreeElement v = parse_tree_element(tree, j["v"]);
    emit(out, {{"u*v", to_json(tree_op(tree, u, v))},
               {"v*u", to_json(tree_op(tree, v, u))},
               {"meet", to_json(tree_meet(tree, u, v))},
               {"u<=v", tree_leq(tree, u, v)},
               {"v<=u", tree_leq(tree, v, u)}});
    return kOk;
  }

  const RootedTree tree = parse_tree(j);
  if (want_dot(opt)) {
    std::vector<std::string> names;
    for (Vertex v = 0; v < tree.size(); ++v) names.push_back(tree.name(v));
    out << hasse_dot(tree.ancestor_poset(), names, {}, "tree");
    return kOk;
  }
  const TreeIdealLattice lat = tree_ideal_lattice(tree);
  Json principal = Json::array();
  for (const PathIdeal& ideal : lat.ideals)
    principal.push_back({{"ideal", figure_label(tree, ideal)}, {"generator", to_json(principal_generator(tree, ideal))}});
  const TreeCompactFgReport fg = check_compact_iff_fg(tree);
  Json generators = Json::array();
  for (const auto& g : fg.generators) generators.push_back(to_json(g));
  std::size_t primes = 0;
  for (bool p : lat.prime) primes += p;
  emit(out, {{"tree", to_json(tree)},
             {"leaves", tree.leaves()},
             {"ideal_count", lat.ideals.size()},
             {"prime_count", primes},
             {"principal_generators", principal},
             {"compact", fg.compact},
             {"finitely_generated", fg.finitely_generated},
             {"generators", generators}});
  return fg.compact == fg.finitely_generated ? kOk : kMathFailure;
}

// ---- duality ----------------------------------------------------------------

int emit_lattice(const FiniteDistLattice& l, Json report, const Options& opt, std::ostream& out, bool ok) {
  const MeetIrreducibles mi = meet_irreducibles(l);
  if (want_dot(opt)) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < l.size(); ++i) labels.push_back(std::to_string(i));
    std::vector<bool> marked(l.size(), false);
    for (std::size_t e : mi.elements) marked[e] = true;
    out << hasse_dot(l.order(), labels, marked, "lattice");
    return ok ? kOk : kMathFailure;
  }
  report["lattice"] = to_json(l);
  report["meet_irreducibles"] = mi.elements;
  emit(out, report);
  return ok ? kOk : kMathFailure;
}

int cmd_duality(const Options& opt, std::ostream& out) {
  const Json j = load_input(opt);
  const std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";

  if (kind == "poset") {
    const FinitePoset p = parse_poset(j);
    const FiniteDistLattice l = lattice_from_poset(p);
    const bool ok = poset_iso(meet_irreducibles(l).poset, p).has_value();
    return emit_lattice(l, {{"mi_isomorphic_to_input", ok}}, opt, out, ok);
  }
  if (kind == "lattice") {
    const FiniteDistLattice l = parse_lattice(j);
    const bool distributive = is_distributive(l);
    const bool roundtrip = lattice_iso(lattice_from_poset(meet_irreducibles(l).poset), l).has_value();
    return emit_lattice(l, {{"distributive", distributive}, {"birkhoff_roundtrip", roundtrip}}, opt, out,
                        distributive && roundtrip);
  }

  const AlgebraInput in = parse_input(j);
  FiniteSpace space;
  FiniteDistLattice ideals;
  if (const auto* tree = std::get_if<RootedTree>(&in)) {
    TreeSpectrum spec = tree_spectrum(*tree);
    space = std::move(spec.space);
    ideals = spec.ideals.lattice;
  } else {
    AlgebraSpectrum spec = spectrum(std::get<FiniteCbckAlgebra>(in), opt.guard);
    space = std::move(spec.space);
    ideals = spec.ideals.lattice;
  }
  const FiniteDistLattice k = compact_open_lattice(space);
  const bool kx_ok = lattice_iso(k, ideals).has_value();
  const bool mi_ok = poset_iso(meet_irreducibles(k).poset, specialization_order(space)).has_value();
  const bool noetherian = check_noetherian(space);
  return emit_lattice(k,
                      {{"kx_isomorphic_to_ideals", kx_ok},
                       {"mi_isomorphic_to_spectrum", mi_ok},
                       {"noetherian", noetherian}},
                      opt, out, kx_ok && mi_ok && noetherian);
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const Options& opt, std::ostream& out) {
  if (want_dot(opt)) throw ParseError("verify reports JSON only");
  std::vector<std::string> names;
  if (opt.suite == "all")
    names = suite_names();
  else
    names = {opt.suite};
  Json suites = Json::array();
  bool passed = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, opt.seed);
    passed = passed && r.passed();
    suites.push_back(to_json(r));
  }
  emit(out, {{"passed", passed}, {"seed", opt.seed}, {"suites", suites}});
  return passed ? kOk : kMathFailure;
}

void add_common(CLI::App* sub, Options& opt, bool needs_input) {
  if (needs_input) {
    sub->add_option("--input,-i", opt.input, "JSON file describing the input");
    sub->add_option("--spec", opt.spec, "inline JSON instead of --input");
  }
  sub->add_option("--format,-f", opt.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  sub->add_option("--seed", opt.seed, "seed for randomized work");
  sub->add_option("--guard", opt.guard, "largest finite algebra to enumerate");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cBCK-algebras: ideals, spectra and duality", "bck"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const Command commands[] = {
      {"check", "axioms and ideal-theoretic properties", cmd_check},
      {"spectrum", "prime spectrum and its topological checks", cmd_spectrum},
      {"ideals", "ideal lattice with primes marked", cmd_ideals},
      {"tree", "tree algebra report, or u*v for {\"tree\",\"u\",\"v\"}", cmd_tree},
      {"duality", "Birkhoff duality and KX", cmd_duality},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, opt, true);
    subs.emplace_back(sub, c.fn);
  }
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, opt, false);
  verify->add_option("suite", opt.suite, "suite name, or all")->required();
  subs.emplace_back(verify, cmd_verify);

  std::vector<std::string> argv_store{"bck"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseFailure;
  }

  try {
    for (auto [sub, fn] : subs)
      if (sub->parsed()) return fn(opt, out);
  } catch (const AxiomError& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  }
  return kParseFailure;
}

}  // namespace bck::cli
