#include "bck/algebra.hpp"

#include <string>

namespace bck {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::cbck1: return "cBCK1";
    case Axiom::cbck2: return "cBCK2";
    case Axiom::cbck3: return "cBCK3";
    case Axiom::cbck4: return "cBCK4";
  }
  return "?";
}

bool AxiomReport::all_hold() const {
  for (const auto& r : results)
    if (!r.holds) return false;
  return true;
}

namespace {

void validate_shape(const Table& table) {
  const std::size_t n = table.size();
  if (n == 0) throw StructureError("operation table is empty");
  if (n > kMaxTableSize)
    throw GuardError("table of size " + std::to_string(n) + " exceeds the supported bound " +
                     std::to_string(kMaxTableSize));
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n)
      throw StructureError("row " + std::to_string(x) + " has length " +
                           std::to_string(table[x].size()) + ", expected " + std::to_string(n));
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] >= n)
        throw StructureError("entry [" + std::to_string(x) + "][" + std::to_string(y) +
                             "] = " + std::to_string(table[x][y]) + " is out of range");
  }
}

}  // namespace

AxiomReport check_axioms(const Table& t) {
  validate_shape(t);
  const std::size_t n = t.size();
  AxiomReport report;
  for (std::size_t i = 0; i < 4; ++i) report.results[i].axiom = static_cast<Axiom>(i);

  auto fail = [&](Axiom a, Element x, Element y, Element z) {
    auto& r = report.results[static_cast<std::size_t>(a)];
    if (r.holds) {
      r.holds = false;
      r.witness = std::array<Element, 3>{x, y, z};
    }
  };

  for (Element x = 0; x < n; ++x) {
    if (t[x][x] != 0) fail(Axiom::cbck3, x, 0, 0);
    if (t[x][0] != x) fail(Axiom::cbck4, x, 0, 0);
    for (Element y = 0; y < n; ++y) {
      if (t[x][t[x][y]] != t[y][t[y][x]]) fail(Axiom::cbck2, x, y, 0);
      for (Element z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[t[x][z]][y]) fail(Axiom::cbck1, x, y, z);
    }
  }
  return report;
}

FiniteCbckAlgebra::FiniteCbckAlgebra(Table table) : table_(std::move(table)) {
  const AxiomReport report = check_axioms(table_);
  if (!report.all_hold()) {
    std::string failing;
    for (const auto& r : report.results)
      if (!r.holds) failing += (failing.empty() ? "" : ", ") + to_string(r.axiom);
    throw AxiomError("table violates " + failing, report);
  }
  size_ = table_.size();
  cells_.reserve(size_ * size_);
  for (const auto& row : table_) cells_.insert(cells_.end(), row.begin(), row.end());

  for (Element candidate = 0; candidate < size_ && !top_; ++candidate) {
    bool bounds_all = true;
    for (Element y = 0; y < size_ && bounds_all; ++y) bounds_all = cells_[y * size_ + candidate] == 0;
    if (bounds_all) top_ = candidate;
  }
}

void FiniteCbckAlgebra::check_index(Element x) const {
  if (x >= size_)
    throw StructureError("element " + std::to_string(x) + " is not in an algebra of size " +
                         std::to_string(size_));
}

Element FiniteCbckAlgebra::join(Element x, Element y) const {
  if (!top_) throw PreconditionError("join requires a bounded algebra");
  const Element one = *top_;
  return op(one, meet(op(one, x), op(one, y)));
}

Element FiniteCbckAlgebra::power(Element x, Element y, std::size_t n) const {
  Element r = x;
  check_index(y);
  for (std::size_t i = 0; i < n; ++i) r = op(r, y);
  return r;
}

std::vector<Element> FiniteCbckAlgebra::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size_; ++x) {
    bool maximal = true;
    for (Element y = 0; y < size_ && maximal; ++y)
      if (y != x && leq(x, y)) maximal = false;
    if (maximal) out.push_back(x);
  }
  return out;
}

EnReport satisfies_En(const FiniteCbckAlgebra& a, std::size_t n) {
  if (n == 0) throw PreconditionError("(E_n) is defined for n >= 1");
  EnReport report;
  const std::size_t size = a.size();
  for (Element x = 0; x < size && report.holds; ++x) {
    for (Element y = 0; y < size; ++y) {
      const Element lhs = a.power(x, y, n);
      if (lhs != a.op(lhs, y)) {
        report.holds = false;
        report.witness = std::pair{x, y};
        break;
      }
    }
  }
  if (n == 1) {
    bool implicative = true;
    for (Element x = 0; x < size && implicative; ++x)
      for (Element y = 0; y < size && implicative; ++y) implicative = a.op(x, a.op(y, x)) == x;
    report.implicative = implicative;
  }
  return report;
}

bool is_directed(const FiniteCbckAlgebra& a) {
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      bool bounded = false;
      for (Element z = 0; z < n && !bounded; ++z) bounded = a.leq(x, z) && a.leq(y, z);
      if (!bounded) return false;
    }
  }
  return true;
}

bool is_chain(const FiniteCbckAlgebra& a) {
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
  return true;
}

bool satisfies_dcc(const FiniteCbckAlgebra& a) {
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element settled = a.power(x, y, n);
      if (a.op(settled, y) != settled) return false;
    }
  }
  return true;
}

HomomorphismCheck check_homomorphism(const BckHomomorphism& h) {
  const std::size_t n = h.source.size();
  if (h.map.size() != n)
    throw StructureError("homomorphism map has length " + std::to_string(h.map.size()) +
                         " but the source has " + std::to_string(n) + " elements");
  for (Element img : h.map)
    if (img >= h.target.size())
      throw StructureError("homomorphism image " + std::to_string(img) + " is outside the target");

  HomomorphismCheck result;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (h.map[h.source.op(x, y)] != h.target.op(h.map[x], h.map[y])) {
        result.holds = false;
        result.witness = std::pair{x, y};
        return result;
      }
    }
  }
  return result;
}

}  // namespace bck
