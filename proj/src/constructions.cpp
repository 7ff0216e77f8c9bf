#include "bck/constructions.hpp"

#include <string>

namespace bck {

FiniteCbckAlgebra trivial_algebra() { return FiniteCbckAlgebra(Table{{0}}); }

FiniteCbckAlgebra standard_chain(std::size_t k) {
  if (k == 0) throw PreconditionError("standard_chain needs k >= 1; use trivial_algebra for {0}");
  const std::size_t n = k + 1;
  if (n > kMaxTableSize) throw GuardError("chain C_" + std::to_string(k) + " is too large");
  Table t(n, std::vector<Element>(n, 0));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[x][y] = x > y ? x - y : 0;
  return FiniteCbckAlgebra(std::move(t));
}

Element CbckUnion::embed(std::size_t component, Element original) const {
  if (component >= components.size()) throw StructureError("no such union block");
  if (original >= components[component].size()) throw StructureError("no such block element");
  if (original == 0) return 0;
  for (Element x = 1; x < provenance.size(); ++x)
    if (provenance[x].component == component && provenance[x].original == original) return x;
  throw InternalError("union provenance table is incomplete");
}

std::vector<Element> CbckUnion::block(std::size_t component) const {
  std::vector<Element> out;
  for (Element x = 1; x < provenance.size(); ++x)
    if (provenance[x].component == component) out.push_back(x);
  return out;
}

BckHomomorphism CbckUnion::embedding(std::size_t component) const {
  const auto& source = components.at(component);
  std::vector<Element> map(source.size());
  for (Element x = 0; x < source.size(); ++x) map[x] = embed(component, x);
  return BckHomomorphism{source, algebra, std::move(map)};
}

CbckUnion cbck_union(std::span<const FiniteCbckAlgebra> components) {
  if (components.empty()) throw PreconditionError("cbck_union needs at least one component");

  std::vector<Provenance> prov{Provenance{}};
  std::vector<std::vector<Element>> index_in_union(components.size());
  for (std::size_t c = 0; c < components.size(); ++c) {
    index_in_union[c].assign(components[c].size(), 0);
    for (Element x = 1; x < components[c].size(); ++x) {
      index_in_union[c][x] = prov.size();
      prov.push_back(Provenance{c, x});
    }
  }

  const std::size_t n = prov.size();
  if (n > kMaxTableSize) throw GuardError("union has too many elements");

  // The zero belongs to every block; its row and column follow from cbck3/4.
  Table t(n, std::vector<Element>(n, 0));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y == 0) {
        t[x][y] = x;
      } else if (x == 0) {
        t[x][y] = 0;
      } else if (prov[x].component == prov[y].component) {
        const auto& block = components[prov[x].component];
        t[x][y] = index_in_union[prov[x].component][block.op(prov[x].original, prov[y].original)];
      } else {
        t[x][y] = x;
      }
    }
  }
  return CbckUnion{FiniteCbckAlgebra(std::move(t)),
                   std::vector<FiniteCbckAlgebra>(components.begin(), components.end()),
                   std::move(prov)};
}

FiniteCbckAlgebra direct_product(std::span<const FiniteCbckAlgebra> components) {
  if (components.empty()) throw PreconditionError("direct_product needs at least one component");
  std::size_t n = 1;
  for (const auto& c : components) {
    n *= c.size();
    if (n > kMaxTableSize) throw GuardError("product has too many elements");
  }
  const std::size_t k = components.size();

  auto decode = [&](Element idx) {
    std::vector<Element> digits(k);
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = idx % components[i].size();
      idx /= components[i].size();
    }
    return digits;
  };
  auto encode = [&](const std::vector<Element>& digits) {
    Element idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * components[i].size() + digits[i];
    return idx;
  };

  Table t(n, std::vector<Element>(n, 0));
  for (Element x = 0; x < n; ++x) {
    const auto dx = decode(x);
    for (Element y = 0; y < n; ++y) {
      const auto dy = decode(y);
      std::vector<Element> dz(k);
      for (std::size_t i = 0; i < k; ++i) dz[i] = components[i].op(dx[i], dy[i]);
      t[x][y] = encode(dz);
    }
  }
  return FiniteCbckAlgebra(std::move(t));
}

}  // namespace bck
