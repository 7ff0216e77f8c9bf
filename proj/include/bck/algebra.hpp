#pragma once

// Finite commutative BCK-algebras given by their operation table.
//
// Elements are indices 0..n-1 and the constant 0 is always index 0. The
// derived order is x <= y iff x*y = 0 and the meet is y*(y*x). Everything in
// this header is a pure function of the table.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bck/element_set.hpp"
#include "bck/errors.hpp"

namespace bck {

using Table = std::vector<std::vector<Element>>;

/// Documented upper bound for exhaustive O(n^3) axiom checking.
inline constexpr std::size_t kMaxTableSize = 512;

enum class Axiom { cbck1, cbck2, cbck3, cbck4 };

std::string to_string(Axiom axiom);

struct AxiomResult {
  Axiom axiom;
  bool holds = true;
  /// First counterexample in lexicographic order. For the two-variable
  /// axioms only the first two entries are meaningful (and one for cbck3/4).
  std::optional<std::array<Element, 3>> witness;
};

struct AxiomReport {
  std::array<AxiomResult, 4> results{};
  bool all_hold() const;
  const AxiomResult& operator[](Axiom a) const { return results[static_cast<std::size_t>(a)]; }
};

/// Checks (xy)z = (xz)y, x(xy) = y(yx), xx = 0 and x0 = x exhaustively.
/// Throws StructureError for a non-square table or an out-of-range entry.
AxiomReport check_axioms(const Table& table);

/// Thrown when a table is well-formed but violates an axiom.
class AxiomError : public Error {
 public:
  AxiomError(const std::string& what, AxiomReport report)
      : Error(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

class FiniteCbckAlgebra {
 public:
  /// Validates shape and all four axioms; throws StructureError / AxiomError.
  explicit FiniteCbckAlgebra(Table table);

  std::size_t size() const { return size_; }
  const Table& table() const { return table_; }

  Element op(Element x, Element y) const {
    check_index(x);
    check_index(y);
    return cells_[x * size_ + y];
  }

  bool leq(Element x, Element y) const { return op(x, y) == 0; }

  /// y*(y*x); by cbck2 also x*(x*y).
  Element meet(Element x, Element y) const { return op(y, op(y, x)); }

  /// The top element, if the algebra is bounded.
  std::optional<Element> top() const { return top_; }
  bool is_bounded() const { return top_.has_value(); }

  /// 1*((1*x) ^ (1*y)). Throws PreconditionError when unbounded.
  Element join(Element x, Element y) const;

  /// x*y^n: y applied n times on the right.
  Element power(Element x, Element y, std::size_t n) const;

  /// Elements that are maximal in the derived order.
  std::vector<Element> maximal_elements() const;

  bool operator==(const FiniteCbckAlgebra& other) const { return table_ == other.table_; }

 private:
  void check_index(Element x) const;

  std::size_t size_ = 0;
  Table table_;
  std::vector<Element> cells_;
  std::optional<Element> top_;
};

struct EnReport {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
  /// Set only for n = 1: whether x*(y*x) = x holds for all pairs.
  std::optional<bool> implicative;
};

/// Whether x*y^n = x*y^(n+1) for all x, y.
EnReport satisfies_En(const FiniteCbckAlgebra& algebra, std::size_t n);

bool is_directed(const FiniteCbckAlgebra& algebra);
bool is_chain(const FiniteCbckAlgebra& algebra);

/// Every sequence x, x*y, x*y^2, ... is constant from step |A| on.
bool satisfies_dcc(const FiniteCbckAlgebra& algebra);

struct BckHomomorphism {
  FiniteCbckAlgebra source;
  FiniteCbckAlgebra target;
  std::vector<Element> map;
};

struct HomomorphismCheck {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
};

/// h(x*y) = h(x)*h(y) on all pairs. Throws StructureError on a size mismatch
/// or an out-of-range image.
HomomorphismCheck check_homomorphism(const BckHomomorphism& h);

}  // namespace bck
