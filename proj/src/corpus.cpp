#include "bck/corpus.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bck/errors.hpp"

namespace bck {

namespace {

NamedAlgebra chain_entry(std::size_t k) {
  return {"C" + std::to_string(k), standard_chain(k), {}};
}

NamedAlgebra product_entry(const std::vector<NamedAlgebra>& parts) {
  return {join_names(parts, "x"), direct_product(algebras_of(parts)), {}};
}

NamedAlgebra union_entry(const std::vector<NamedAlgebra>& parts) {
  auto components = algebras_of(parts);
  return {"U(" + join_names(parts, ",") + ")", cbck_union(components).algebra, components};
}

std::size_t union_size(const std::vector<NamedAlgebra>& parts) {
  std::size_t n = 1;
  for (const auto& p : parts) n += p.algebra.size() - 1;
  return n;
}

// Multisets of chain lengths 1..3 with the given number of blocks.
void chain_multisets(std::size_t blocks, std::size_t min_k, std::vector<std::size_t>& current,
                     std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == blocks) {
    out.push_back(current);
    return;
  }
  for (std::size_t k = min_k; k <= 3; ++k) {
    current.push_back(k);
    chain_multisets(blocks, k, current, out);
    current.pop_back();
  }
}

std::vector<ElementSet> sorted_sets(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return sets;
}

}  // namespace

std::string join_names(const std::vector<NamedAlgebra>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i].name;
  }
  return out;
}

std::vector<FiniteCbckAlgebra> algebras_of(const std::vector<NamedAlgebra>& parts) {
  std::vector<FiniteCbckAlgebra> out;
  for (const auto& p : parts) out.push_back(p.algebra);
  return out;
}

std::vector<NamedAlgebra> finite_corpus(std::size_t max_size) {
  std::vector<NamedAlgebra> corpus;
  auto add = [&](NamedAlgebra entry) {
    if (entry.algebra.size() <= max_size) corpus.push_back(std::move(entry));
  };

  corpus.push_back({"trivial", trivial_algebra(), {}});
  for (std::size_t k = 1; k + 1 <= max_size; ++k) add(chain_entry(k));

  for (std::size_t blocks = 2; blocks <= 4; ++blocks) {
    std::vector<std::vector<std::size_t>> shapes;
    std::vector<std::size_t> current;
    chain_multisets(blocks, 1, current, shapes);
    for (const auto& shape : shapes) {
      std::vector<NamedAlgebra> parts;
      for (std::size_t k : shape) parts.push_back(chain_entry(k));
      if (union_size(parts) <= max_size) add(union_entry(parts));
    }
  }

  const std::vector<std::vector<std::size_t>> products = {
      {1, 1}, {1, 2}, {2, 2}, {1, 3}, {1, 1, 1}, {1, 4}, {2, 3}, {1, 5}, {1, 1, 2}};
  for (const auto& shape : products) {
    std::vector<NamedAlgebra> parts;
    for (std::size_t k : shape) parts.push_back(chain_entry(k));
    add(product_entry(parts));
  }

  const NamedAlgebra c1 = chain_entry(1);
  const NamedAlgebra c2 = chain_entry(2);
  const NamedAlgebra c1c1 = product_entry({c1, c1});
  const NamedAlgebra c1c2 = product_entry({c1, c2});
  const NamedAlgebra u11 = union_entry({c1, c1});
  add(union_entry({c1, c1c1}));
  add(union_entry({c2, c1c1}));
  add(union_entry({c1c1, c1c1}));
  add(union_entry({c1, c1c2}));
  add(union_entry({c1, c1, c1c1}));
  add(product_entry({u11, c1}));
  add(product_entry({u11, c2}));
  add(product_entry({u11, u11}));
  return corpus;
}

std::vector<RootedTree> all_rooted_trees(std::size_t max_vertices, bool up_to_isomorphism) {
  std::vector<RootedTree> out;
  std::set<std::string> seen;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::optional<Vertex>> parents(n);
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == n) {
        RootedTree tree(parents);
        if (!up_to_isomorphism || seen.insert(tree_shape(tree)).second) out.push_back(std::move(tree));
        return;
      }
      for (Vertex p = 0; p < i; ++p) {
        parents[i] = p;
        fill(i + 1);
      }
    };
    fill(1);
  }
  return out;
}

std::string tree_shape(const RootedTree& tree) {
  std::function<std::string(Vertex)> shape = [&](Vertex v) {
    std::vector<std::string> parts;
    for (Vertex c : tree.children(v)) parts.push_back(shape(c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  return shape(0);
}

RootedTree random_tree(Rng& rng, std::size_t max_vertices) {
  if (max_vertices == 0) throw PreconditionError("a tree needs at least one vertex");
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::vector<std::optional<Vertex>> parents(n);
  for (std::size_t i = 1; i < n; ++i) parents[i] = std::uniform_int_distribution<Vertex>(0, i - 1)(rng);
  return RootedTree(std::move(parents));
}

TreeElement random_tree_element(Rng& rng, const RootedTree& tree, std::size_t max_support,
                                std::int64_t max_abs) {
  const std::size_t n = tree.size();
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(max_support, n))(rng);
  std::vector<Vertex> vertices(n);
  for (Vertex v = 0; v < n; ++v) vertices[v] = v;
  std::shuffle(vertices.begin(), vertices.end(), rng);

  std::uniform_int_distribution<std::int64_t> value(1, max_abs);
  std::bernoulli_distribution negative(0.5);
  TreeElement::Support support;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t x = value(rng);
    support[vertices[i]] = negative(rng) ? -x : x;
  }
  // A value is the first nonzero entry on its paths iff no proper ancestor
  // carries one.
  for (auto& [v, x] : support) {
    bool first = true;
    for (auto p = tree.parent(v); p; p = tree.parent(*p))
      if (support.count(*p)) first = false;
    if (first) x = std::abs(x);
  }
  return TreeElement(tree, std::move(support));
}

std::vector<NamedAlgebra> random_union_components(Rng& rng, std::size_t max_size) {
  const NamedAlgebra c1 = chain_entry(1);
  const NamedAlgebra c2 = chain_entry(2);
  const std::vector<NamedAlgebra> pool = {c1, c2, chain_entry(3), product_entry({c1, c1}),
                                          product_entry({c1, c2})};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (;;) {
    const std::size_t blocks = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    std::vector<NamedAlgebra> parts;
    for (std::size_t i = 0; i < blocks; ++i) parts.push_back(pool[pick(rng)]);
    if (union_size(parts) <= max_size) return parts;
  }
}

std::vector<ElementSet> primes_of_union_blockwise(const CbckUnion& u, std::size_t element_guard) {
  const std::size_t n = u.algebra.size();
  std::vector<ElementSet> out;
  for (std::size_t mu = 0; mu < u.components.size(); ++mu) {
    ElementSet others(n);
    for (std::size_t c = 0; c < u.components.size(); ++c)
      if (c != mu)
        for (Element x : u.block(c)) others.insert(x);
    for (const ElementSet& q : prime_ideals(u.components[mu], element_guard)) {
      ElementSet p = others;
      for (Element x : q.members()) p.insert(u.embed(mu, x));
      out.push_back(p);
    }
  }
  return sorted_sets(std::move(out));
}

std::vector<ElementSet> brute_force_primes(const FiniteCbckAlgebra& algebra) {
  const std::size_t n = algebra.size();
  if (n > 20) throw GuardError("brute-force prime search is limited to 20 elements");
  std::vector<ElementSet> out;
  // Subsets containing 0 and missing at least one element.
  for (std::uint64_t rest = 0; rest + 1 < (std::uint64_t{1} << (n - 1)); ++rest) {
    const ElementSet s = ElementSet::from_mask(n, (rest << 1) | 1U);
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y) {
        if (s.contains(y) && s.contains(algebra.op(x, y)) && !s.contains(x)) ok = false;
        if (s.contains(algebra.op(y, algebra.op(y, x))) && !s.contains(x) && !s.contains(y)) ok = false;
      }
    if (ok) out.push_back(s);
  }
  return sorted_sets(std::move(out));
}

}  // namespace bck
