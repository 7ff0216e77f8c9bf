#include "bck/suites.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bck/corpus.hpp"
#include "bck/dot.hpp"
#include "bck/duality.hpp"
#include "bck/errors.hpp"
#include "bck/ideals.hpp"
#include "bck/spectra.hpp"

namespace bck {

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

std::string count_detail(std::size_t failures, std::size_t total, const std::string& first) {
  std::string s = std::to_string(failures) + " failures in " + std::to_string(total) + " instances";
  if (failures > 0) s += "; first: " + first;
  return s;
}

// Tallies one law over many instances and reports it as a single check.
struct Tally {
  std::size_t total = 0;
  std::size_t failures = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total;
    if (ok) return;
    if (failures++ == 0) first = describe();
  }
  void report(SuiteResult& r, const std::string& name) const {
    r.expect(name, failures == 0 && total > 0, count_detail(failures, total, first));
  }
};

std::string tree_string(const RootedTree& tree) {
  std::string s = "[";
  for (Vertex v = 0; v < tree.size(); ++v) {
    if (v) s += ",";
    s += tree.parent(v) ? std::to_string(*tree.parent(v)) : "null";
  }
  return s + "]";
}

FiniteDistLattice kx(const FiniteCbckAlgebra& a) { return compact_open_lattice(spectrum(a).space); }
FiniteDistLattice kx(const RootedTree& t) { return compact_open_lattice(tree_spectrum(t).space); }

bool iso(const FiniteDistLattice& a, const FiniteDistLattice& b) { return lattice_iso(a, b).has_value(); }

FiniteCbckAlgebra union_of_c1(std::size_t n) {
  if (n == 0) return trivial_algebra();
  return cbck_union(std::vector<FiniteCbckAlgebra>(n, standard_chain(1))).algebra;
}

// ---- figures ----------------------------------------------------------------

struct FigureCase {
  std::string name;
  RootedTree tree;
  std::size_t ideal_count;
  std::set<std::string> primes;
  EdgeSet edges;
};

std::vector<FigureCase> figure_cases() {
  std::vector<FigureCase> out;
  out.push_back({"T_2",
                 RootedTree::star(2),
                 5,
                 {"I(alpha1)", "I(alpha2)", "I(lambda)"},
                 {{"{0}", "I(alpha1)"},
                  {"{0}", "I(alpha2)"},
                  {"I(alpha1)", "I(lambda)"},
                  {"I(alpha2)", "I(lambda)"},
                  {"I(lambda)", "A"}}});
  out.push_back({"T_3",
                 RootedTree::star(3),
                 9,
                 {"I(alpha1)", "I(alpha2)", "I(alpha3)", "I(lambda)"},
                 {{"{0}", "I(alpha1,alpha2)"},
                  {"{0}", "I(alpha1,alpha3)"},
                  {"{0}", "I(alpha2,alpha3)"},
                  {"I(alpha1,alpha2)", "I(alpha1)"},
                  {"I(alpha1,alpha3)", "I(alpha1)"},
                  {"I(alpha1,alpha2)", "I(alpha2)"},
                  {"I(alpha2,alpha3)", "I(alpha2)"},
                  {"I(alpha1,alpha3)", "I(alpha3)"},
                  {"I(alpha2,alpha3)", "I(alpha3)"},
                  {"I(alpha1)", "I(lambda)"},
                  {"I(alpha2)", "I(lambda)"},
                  {"I(alpha3)", "I(lambda)"},
                  {"I(lambda)", "A"}}});
  out.push_back({"H",
                 RootedTree::h_tree(),
                 11,
                 {"I(alpha)", "I(beta)", "I(gamma)", "I(delta)", "I(lambda)"},
                 {{"{0}", "I(alpha,gamma)"},
                  {"{0}", "I(alpha,delta)"},
                  {"{0}", "I(gamma,delta)"},
                  {"I(alpha,gamma)", "I(alpha,beta)"},
                  {"I(alpha,delta)", "I(alpha,beta)"},
                  {"I(alpha,gamma)", "I(gamma)"},
                  {"I(gamma,delta)", "I(gamma)"},
                  {"I(alpha,delta)", "I(delta)"},
                  {"I(gamma,delta)", "I(delta)"},
                  {"I(alpha,beta)", "I(beta)"},
                  {"I(gamma)", "I(beta)"},
                  {"I(delta)", "I(beta)"},
                  {"I(alpha,beta)", "I(alpha)"},
                  {"I(beta)", "I(lambda)"},
                  {"I(alpha)", "I(lambda)"},
                  {"I(lambda)", "A"}}});
  return out;
}

std::string edges_string(const EdgeSet& edges) {
  std::string s;
  for (const auto& [a, b] : edges) s += (s.empty() ? "" : " ") + a + "<" + b;
  return s;
}

void suite_figures(SuiteResult& r) {
  for (const FigureCase& fc : figure_cases()) {
    const TreeIdealLattice lat = tree_ideal_lattice(fc.tree);
    std::set<std::string> primes;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < lat.ideals.size(); ++i) {
      labels.push_back(figure_label(fc.tree, lat.ideals[i]));
      if (lat.prime[i]) primes.insert(labels.back());
    }
    const auto edge_list = ideal_hasse_edges(fc.tree);
    const EdgeSet edges(edge_list.begin(), edge_list.end());

    r.expect(fc.name + ": ideal count", lat.ideals.size() == fc.ideal_count,
             std::to_string(lat.ideals.size()) + " ideals, expected " + std::to_string(fc.ideal_count));
    r.expect(fc.name + ": prime ideals", primes == fc.primes,
             std::to_string(primes.size()) + " primes, expected " + std::to_string(fc.primes.size()));
    r.expect(fc.name + ": labeled Hasse diagram", edges == fc.edges, edges_string(edges));

    const FinitePoset x = tree_prime_ideals(fc.tree);
    r.expect(fc.name + ": primes ordered as the dual tree",
             x.size() == fc.primes.size() && poset_iso(x, fc.tree.ancestor_poset().dual()).has_value());

    const std::string dot = hasse_dot(lat.lattice.order(), labels, lat.prime, fc.name);
    std::size_t red = 0;
    for (std::size_t pos = dot.find("color=red"); pos != std::string::npos;
         pos = dot.find("color=red", pos + 1))
      ++red;
    r.expect(fc.name + ": DOT marks the primes", red == 2 * fc.primes.size(),
             std::to_string(red / 2) + " red nodes");
  }
}

// ---- B-bar ------------------------------------------------------------------

void suite_bbar(SuiteResult& r) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const TreeIdealLattice lat = tree_ideal_lattice(RootedTree::star(n));
    const FiniteDistLattice target = boolean_plus_top(n);
    r.expect("Id(A^T_" + std::to_string(n) + ") is B-bar_" + std::to_string(n),
             lat.lattice.size() == target.size() && iso(lat.lattice, target),
             std::to_string(lat.lattice.size()) + " elements");
  }
}

// ---- anti-isomorphism -------------------------------------------------------

void suite_anti_iso(SuiteResult& r) {
  const auto trees = all_rooted_trees(7);
  r.expect("labeled trees up to 7 vertices with parent[i] < i", trees.size() == 874,
           std::to_string(trees.size()) + " trees");
  r.expect("tree shapes up to 7 vertices", all_rooted_trees(7, true).size() == 85);

  Tally dual, mi;
  for (const RootedTree& t : trees) {
    const FinitePoset x = tree_prime_ideals(t);
    dual.record(poset_iso(x, t.ancestor_poset().dual()).has_value(),
                [&] { return tree_string(t); });

    const TreeIdealLattice lat = tree_ideal_lattice(t);
    const MeetIrreducibles m = meet_irreducibles(lat.lattice);
    std::vector<bool> flags(lat.ideals.size(), false);
    for (std::size_t e : m.elements) flags[e] = true;
    mi.record(flags == lat.prime && poset_iso(m.poset, x).has_value(), [&] { return tree_string(t); });
  }
  dual.report(r, "X(A^T) is anti-isomorphic to T, every tree up to 7 vertices");
  mi.report(r, "primes are the meet-irreducible ideals, every tree up to 7 vertices");
}

// ---- primes of unions -------------------------------------------------------

void suite_unions_primes(SuiteResult& r) {
  const std::vector<FiniteCbckAlgebra> chains = {standard_chain(1), standard_chain(2),
                                                 standard_chain(3)};
  std::size_t cases = 0;
  for (std::size_t blocks = 2; blocks <= 3; ++blocks) {
    std::vector<std::size_t> pick(blocks, 0);
    for (;;) {
      std::vector<FiniteCbckAlgebra> components;
      std::string name = "U(";
      for (std::size_t i = 0; i < blocks; ++i) {
        components.push_back(chains[pick[i]]);
        name += (i ? ",C" : "C") + std::to_string(pick[i] + 1);
      }
      name += ")";
      const CbckUnion u = cbck_union(components);
      const auto brute = brute_force_primes(u.algebra);
      const auto blockwise = primes_of_union_blockwise(u);
      const auto library = prime_ideals(u.algebra);
      ++cases;
      r.expect(name + ": brute-force primes equal the blockwise ones",
               brute == blockwise && library == brute, std::to_string(brute.size()) + " primes");

      // Ordered selections, so every arrangement of blocks is covered.
      std::size_t i = blocks;
      while (i > 0 && pick[i - 1] == chains.size() - 1) pick[--i] = 0;
      if (i == 0) break;
      ++pick[i - 1];
    }
  }
  r.expect("union cases examined", cases == 9 + 27, std::to_string(cases));
}

// ---- spectral ---------------------------------------------------------------

void suite_spectral(SuiteResult& r) {
  Tally t0, sober, basis, spectral;
  for (const NamedAlgebra& a : finite_corpus()) {
    const FiniteSpace s = spectrum(a.algebra).space;
    t0.record(check_T0(s), [&] { return a.name; });
    sober.record(check_quasi_sober(s), [&] { return a.name; });
    basis.record(check_multiplicative_basis(s), [&] { return a.name; });
    spectral.record(check_spectral(s), [&] { return a.name; });
  }
  for (const RootedTree& t : all_rooted_trees(7)) {
    const FiniteSpace s = tree_spectrum(t).space;
    t0.record(check_T0(s), [&] { return tree_string(t); });
    sober.record(check_quasi_sober(s), [&] { return tree_string(t); });
    basis.record(check_multiplicative_basis(s), [&] { return tree_string(t); });
    spectral.record(check_spectral(s), [&] { return tree_string(t); });
  }
  t0.report(r, "T0");
  sober.report(r, "quasi-sober");
  basis.report(r, "compact opens form a multiplicative basis");
  spectral.report(r, "compact, hence spectral");
}

// ---- Priestley --------------------------------------------------------------

void suite_priestley(SuiteResult& r) {
  Tally priestley, antichain, oracle, involutory, clopen, hausdorff;
  for (const NamedAlgebra& a : finite_corpus()) {
    const AlgebraSpectrum spec = spectrum(a.algebra);
    const FinitePoset order = specialization_order(spec.space);
    auto name = [&] { return a.name; };
    priestley.record(check_priestley(spec.space, order), name);
    antichain.record(order.is_antichain(), name);
    hausdorff.record(check_hausdorff(spec.space), name);

    bool incomparable = true;
    const auto primes = brute_force_primes(a.algebra);
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = 0; j < primes.size(); ++j)
        if (i != j && primes[i].subset_of(primes[j])) incomparable = false;
    oracle.record(incomparable, name);

    involutory.record(is_involutory(a.algebra).holds, name);
    bool all = true;
    for (const ElementSet& ideal : spec.ideals.ideals)
      all = all && clopen_upset_check(spec, a.algebra, ideal);
    clopen.record(all, name);
  }
  priestley.report(r, "spectrum is a Priestley space");
  antichain.report(r, "specialization order is an antichain");
  oracle.report(r, "brute-force primes are pairwise incomparable");
  hausdorff.report(r, "spectrum is Hausdorff");
  involutory.report(r, "algebra is involutory");
  clopen.report(r, "sigma(I) is a clopen up-set for every ideal");
}

// ---- sigma and K o X --------------------------------------------------------

void suite_sigma_kx(SuiteResult& r) {
  Tally direct, bijective, homomorphic, kx_iso, noetherian;
  for (const NamedAlgebra& a : finite_corpus()) {
    const AlgebraSpectrum spec = spectrum(a.algebra);
    const auto& ideals = spec.ideals.ideals;
    const auto& lat = spec.ideals.lattice;
    auto name = [&] { return a.name; };

    const auto primes = brute_force_primes(a.algebra);
    bool same = spec.space.size() == primes.size();
    for (std::size_t i = 0; i < ideals.size() && same; ++i) {
      PointSet expected = 0;
      for (std::size_t p = 0; p < spec.space.size(); ++p)
        if (!ideals[i].subset_of(spec.prime(p))) expected |= PointSet{1} << p;
      same = spec.sigma_of_ideal[i] == expected;
    }
    direct.record(same, name);

    std::vector<PointSet> image = spec.sigma_of_ideal;
    sort_point_sets(image);
    image.erase(std::unique(image.begin(), image.end()), image.end());
    bijective.record(image.size() == ideals.size() && image == spec.space.opens(), name);

    bool hom = true;
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        const PointSet si = spec.sigma_of_ideal[i], sj = spec.sigma_of_ideal[j];
        hom = hom && spec.sigma_of_ideal[lat.meet(i, j)] == (si & sj) &&
              spec.sigma_of_ideal[lat.join(i, j)] == (si | sj);
      }
    homomorphic.record(hom, name);
    kx_iso.record(iso(compact_open_lattice(spec.space), lat), name);
    noetherian.record(check_noetherian(spec.space), name);
  }
  for (const RootedTree& t : all_rooted_trees(7)) {
    const TreeSpectrum spec = tree_spectrum(t);
    const auto& ideals = spec.ideals.ideals;
    const auto& lat = spec.ideals.lattice;
    auto name = [&] { return tree_string(t); };

    bool same = true;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      PointSet expected = 0;
      for (Vertex v = 0; v < t.size(); ++v)
        if (!ideal_leq(t, ideals[i], canonical_antichain(t, {v}))) expected |= PointSet{1} << v;
      same = same && spec.sigma_of_ideal[i] == expected;
    }
    direct.record(same, name);

    std::vector<PointSet> image = spec.sigma_of_ideal;
    sort_point_sets(image);
    image.erase(std::unique(image.begin(), image.end()), image.end());
    bijective.record(image.size() == ideals.size() && image == spec.space.opens(), name);

    bool hom = true;
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        const PointSet si = spec.sigma_of_ideal[i], sj = spec.sigma_of_ideal[j];
        hom = hom && spec.sigma_of_ideal[lat.meet(i, j)] == (si & sj) &&
              spec.sigma_of_ideal[lat.join(i, j)] == (si | sj);
      }
    homomorphic.record(hom, name);
    kx_iso.record(iso(compact_open_lattice(spec.space), lat), name);
    noetherian.record(check_noetherian(spec.space), name);
  }
  direct.report(r, "sigma(I) equals the primes not containing I");
  bijective.report(r, "sigma is a bijection onto the opens");
  homomorphic.report(r, "sigma preserves meets and joins");
  kx_iso.report(r, "KX(A) is isomorphic to Id(A)");
  noetherian.report(r, "spectrum is Noetherian");
}

// ---- Boolean unions ---------------------------------------------------------

void suite_boolean_unions(SuiteResult& r) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const FiniteSpace s = spectrum(union_of_c1(n)).space;
    const FiniteDistLattice k = compact_open_lattice(s);
    const std::string tag = "union of " + std::to_string(n) + " copies of C1";
    r.expect(tag + ": discrete on " + std::to_string(n) + " points",
             s.size() == n && s.opens().size() == (std::size_t{1} << n) && check_hausdorff(s));
    r.expect(tag + ": KX is B_" + std::to_string(n), iso(k, boolean_lattice(n)),
             std::to_string(k.size()) + " elements");
  }
}

// ---- union homeomorphism ----------------------------------------------------

void suite_union_homeo(SuiteResult& r) {
  Rng rng(r.seed);
  for (int i = 0; i < 20; ++i) {
    const auto parts = random_union_components(rng);
    const auto components = algebras_of(parts);
    const std::string name = "U(" + join_names(parts, ",") + ")";
    r.expect(name + ": X(U) is the disjoint union of the X(A_j)", check_union_homeo(components));

    std::vector<FiniteDistLattice> factors;
    for (const auto& c : components) factors.push_back(kx(c));
    const FiniteDistLattice lhs = kx(cbck_union(components).algebra);
    r.expect(name + ": KX(U) is the product of the KX(A_j)", iso(lhs, lattice_product(factors)),
             std::to_string(lhs.size()) + " elements");
  }
}

// ---- randomized axioms ------------------------------------------------------

constexpr std::size_t kFuzzInstances = 10000;

void fuzz_trees(SuiteResult& r, Rng& rng) {
  Tally c1, c2, c3, c4, meet_comm, meet_formula, meet_lower, iso_law, anti_law, below, iseki;
  for (std::size_t i = 0; i < kFuzzInstances; ++i) {
    const RootedTree t = random_tree(rng, 8);
    const TreeElement u = random_tree_element(rng, t);
    const TreeElement v = random_tree_element(rng, t);
    const TreeElement w = random_tree_element(rng, t);
    const TreeElement zero;
    auto op = [&](const TreeElement& a, const TreeElement& b) { return tree_op(t, a, b); };
    auto describe = [&] {
      return "tree " + tree_string(t) + " u=" + u.to_string() + " v=" + v.to_string() +
             " w=" + w.to_string();
    };

    c1.record(op(op(u, v), w) == op(op(u, w), v), describe);
    c2.record(op(u, op(u, v)) == op(v, op(v, u)), describe);
    c3.record(op(u, u).is_zero(), describe);
    c4.record(op(u, zero) == u, describe);

    const TreeElement m = tree_meet(t, u, v);
    meet_comm.record(m == tree_meet(t, v, u), describe);
    meet_formula.record(m == op(v, op(v, u)), describe);
    meet_lower.record(tree_leq(t, m, u) && tree_leq(t, m, v), describe);

    // m <= u, so m*w <= u*w and w*u <= w*m.
    iso_law.record(tree_leq(t, op(m, w), op(u, w)), describe);
    anti_law.record(tree_leq(t, op(w, u), op(w, m)), describe);
    below.record(tree_leq(t, op(u, v), u), describe);

    // Half the targets are forced into the ideal generated by S.
    std::vector<TreeElement> s{v};
    if (i % 3 == 0) s.push_back(w);
    const TreeElement x = (i % 2 == 0) ? tree_meet(t, u, v) : u;
    const bool member = ideal_membership(t, tree_generated_ideal(t, s), x);
    const auto witness = tree_membership_witness(t, x, s);
    bool ok = member == witness.has_value();
    if (ok && witness) {
      TreeElement acc = x;
      for (const TreeElement& si : *witness) {
        ok = ok && std::find(s.begin(), s.end(), si) != s.end();
        acc = op(acc, si);
      }
      ok = ok && acc.is_zero();
    }
    iseki.record(ok, describe);
  }
  c1.report(r, "tree algebras: (uv)w = (uw)v");
  c2.report(r, "tree algebras: u(uv) = v(vu)");
  c3.report(r, "tree algebras: uu = 0");
  c4.report(r, "tree algebras: u0 = u");
  meet_comm.report(r, "tree algebras: meet is commutative");
  meet_formula.report(r, "tree algebras: pathwise meet equals v(vu)");
  meet_lower.report(r, "tree algebras: meet is a lower bound");
  iso_law.report(r, "tree algebras: x <= y implies xz <= yz");
  anti_law.report(r, "tree algebras: x <= y implies zy <= zx");
  below.report(r, "tree algebras: uv <= u");
  iseki.report(r, "tree algebras: witness exists iff member of the generated ideal");
}

void fuzz_finite(SuiteResult& r, Rng& rng) {
  const auto corpus = finite_corpus();
  std::vector<IdealLattice> lattices;
  for (const auto& a : corpus) lattices.push_back(all_ideals(a.algebra));

  Tally c1, c2, c3, c4, meet_comm, iso_law, anti_law, iseki;
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  for (std::size_t i = 0; i < kFuzzInstances; ++i) {
    const std::size_t which = pick(rng);
    const FiniteCbckAlgebra& a = corpus[which].algebra;
    std::uniform_int_distribution<Element> elem(0, a.size() - 1);
    const Element x = elem(rng), y = elem(rng), z = elem(rng);
    auto describe = [&] {
      return corpus[which].name + " x=" + std::to_string(x) + " y=" + std::to_string(y) +
             " z=" + std::to_string(z);
    };

    c1.record(a.op(a.op(x, y), z) == a.op(a.op(x, z), y), describe);
    c2.record(a.op(x, a.op(x, y)) == a.op(y, a.op(y, x)), describe);
    c3.record(a.op(x, x) == 0, describe);
    c4.record(a.op(x, 0) == x, describe);
    meet_comm.record(a.meet(x, y) == a.meet(y, x), describe);
    const Element m = a.meet(x, y);
    iso_law.record(a.leq(a.op(m, z), a.op(x, z)), describe);
    anti_law.record(a.leq(a.op(z, x), a.op(z, m)), describe);

    ElementSet s(a.size());
    s.insert(y);
    if (i % 2 == 0) s.insert(z);
    const bool member = generated_ideal(a, s).contains(x);
    const auto witness = membership_witness(a, x, s);
    bool ok = member == witness.has_value();
    if (ok && witness) {
      Element acc = x;
      for (Element si : *witness) {
        ok = ok && s.contains(si);
        acc = a.op(acc, si);
      }
      ok = ok && acc == 0;
    }
    // The generated ideal is the least ideal of the lattice containing S.
    std::size_t least = lattices[which].ideals.size();
    for (std::size_t k = 0; k < lattices[which].ideals.size(); ++k)
      if (s.subset_of(lattices[which].ideals[k])) {
        least = k;
        break;
      }
    ok = ok && least < lattices[which].ideals.size() &&
         lattices[which].ideals[least] == generated_ideal(a, s);
    iseki.record(ok, describe);
  }
  c1.report(r, "finite algebras: (xy)z = (xz)y");
  c2.report(r, "finite algebras: x(xy) = y(yx)");
  c3.report(r, "finite algebras: xx = 0");
  c4.report(r, "finite algebras: x0 = x");
  meet_comm.report(r, "finite algebras: meet is commutative");
  iso_law.report(r, "finite algebras: x <= y implies xz <= yz");
  anti_law.report(r, "finite algebras: x <= y implies zy <= zx");
  iseki.report(r, "finite algebras: witness exists iff member of the generated ideal");
}

void suite_axioms_random(SuiteResult& r) {
  Rng rng(r.seed);
  fuzz_trees(r, rng);
  fuzz_finite(r, rng);
}

// ---- negative control -------------------------------------------------------

void suite_negative_f2(SuiteResult& r) {
  const FiniteDistLattice f2 = free_distributive_lattice_2();
  const MeetIrreducibles mi = meet_irreducibles(f2);
  r.expect("F_2 has 6 elements and 4 meet-irreducibles", f2.size() == 6 && mi.elements.size() == 4);

  // In a dual tree every element has at most one upper cover; in MI(F_2) the
  // bottom is covered by both x and y.
  std::vector<std::size_t> upper(mi.poset.size(), 0);
  for (auto [a, b] : mi.poset.covers()) ++upper[a];
  const std::size_t most = *std::max_element(upper.begin(), upper.end());
  r.expect("MI(F_2) has an element with two upper covers", most == 2,
           "at most " + std::to_string(most) + " upper covers");
  bool matched = false;
  for (const RootedTree& t : all_rooted_trees(4))
    if (t.size() == 4 && poset_iso(mi.poset, t.ancestor_poset().dual())) matched = true;
  r.expect("MI(F_2) is not the dual of any 4-vertex tree", !matched);

  const auto trees = all_rooted_trees(6);
  std::size_t hits = 0;
  std::string first;
  for (const RootedTree& t : trees) {
    if (iso(tree_ideal_lattice(t).lattice, f2)) {
      if (hits++ == 0) first = tree_string(t);
    }
  }
  r.expect("no tree up to 6 vertices has Id(A^T) isomorphic to F_2", hits == 0 && trees.size() == 154,
           std::to_string(trees.size()) + " trees, " + std::to_string(hits) + " hits" +
               (hits ? ", first " + first : ""));
}

// ---- culmination ------------------------------------------------------------

void suite_culmination(SuiteResult& r) {
  // (1) MI(D) dual to a tree.
  Tally tree_case, mi_shape, noetherian;
  for (const RootedTree& t : all_rooted_trees(7, true)) {
    const FinitePoset dual = t.ancestor_poset().dual();
    const FiniteDistLattice d = lattice_from_poset(dual);
    auto name = [&] { return tree_string(t); };
    mi_shape.record(poset_iso(meet_irreducibles(d).poset, dual).has_value(), name);
    const TreeSpectrum spec = tree_spectrum(t);
    noetherian.record(check_noetherian(spec.space), name);
    tree_case.record(iso(compact_open_lattice(spec.space), d), name);
  }
  mi_shape.report(r, "D built from the dual tree has MI(D) equal to that dual");
  noetherian.report(r, "X(A^T) is Noetherian");
  tree_case.report(r, "D is KX(A^T) whenever MI(D) is a dual tree");

  // (2) finite chains.
  for (std::size_t n = 2; n <= 8; ++n)
    r.expect("chain of " + std::to_string(n) + " is KX(A^ch_" + std::to_string(n - 1) + ")",
             iso(kx(RootedTree::chain(n - 1)), chain_lattice(n)));

  // (4) finite subdirectly irreducible distributive p-algebras.
  for (std::size_t n = 1; n <= 5; ++n)
    r.expect("B-bar_" + std::to_string(n) + " is KX(A^T_" + std::to_string(n) + ")",
             iso(kx(RootedTree::star(n)), boolean_plus_top(n)));

  // (5) finite Boolean algebras.
  for (std::size_t n = 0; n <= 4; ++n)
    r.expect("B_" + std::to_string(n) + " is KX of the union of " + std::to_string(n) + " copies of C1",
             iso(kx(union_of_c1(n)), boolean_lattice(n)));

  // Products: K of a disjoint union of spectra is the product of the parts.
  Tally divisors;
  for (std::uint64_t n = 2; n <= 60; ++n) {
    std::vector<FiniteSpace> spaces;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p <= rest; ++p) {
      std::size_t e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e > 0) spaces.push_back(tree_spectrum(RootedTree::chain(e)).space);
    }
    divisors.record(iso(compact_open_lattice(disjoint_union_space(spaces)), divisor_lattice(n)),
                    [&] { return std::to_string(n); });
  }
  divisors.report(r, "divisor lattice D(n) is K of a disjoint union of chain spectra, n <= 60");

  const std::vector<FiniteSpace> mixed = {tree_spectrum(RootedTree::star(2)).space,
                                          tree_spectrum(RootedTree::chain(2)).space,
                                          spectrum(union_of_c1(2)).space};
  const std::vector<FiniteDistLattice> factors = {boolean_plus_top(2), chain_lattice(3),
                                                  boolean_lattice(2)};
  r.expect("B-bar_2 x 3 x B_2 is K of the matching disjoint union",
           iso(compact_open_lattice(disjoint_union_space(mixed)), lattice_product(factors)));
}

using SuiteFn = void (*)(SuiteResult&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"figures", suite_figures},
      {"bbar", suite_bbar},
      {"anti-iso", suite_anti_iso},
      {"unions-primes", suite_unions_primes},
      {"spectral", suite_spectral},
      {"priestley", suite_priestley},
      {"sigma-kx", suite_sigma_kx},
      {"boolean-unions", suite_boolean_unions},
      {"union-homeo", suite_union_homeo},
      {"axioms-random", suite_axioms_random},
      {"negative-f2", suite_negative_f2},
      {"culmination", suite_culmination},
  };
  return suites;
}

}  // namespace

bool SuiteResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SuiteResult::expect(std::string check, bool ok, std::string detail) {
  checks.push_back({std::move(check), ok, std::move(detail)});
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown suite \"" + name + "\"");
  SuiteResult result{name, seed, {}};
  try {
    it->second(result);
  } catch (const GuardError&) {
    throw;
  } catch (const Error& e) {
    result.expect("suite ran to completion", false, e.what());
  }
  return result;
}

nlohmann::json to_json(const SuiteResult& result) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : result.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", result.name}, {"seed", result.seed}, {"passed", result.passed()}, {"checks", checks}};
}

std::string figure_label(const RootedTree& tree, const PathIdeal& ideal) {
  if (ideal == zero_ideal(tree)) return "{0}";
  return ideal.to_string(tree);
}

std::vector<std::pair<std::string, std::string>> ideal_hasse_edges(const RootedTree& tree) {
  const TreeIdealLattice lat = tree_ideal_lattice(tree);
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : lat.lattice.order().covers())
    out.emplace_back(figure_label(tree, lat.ideals[a]), figure_label(tree, lat.ideals[b]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bck
