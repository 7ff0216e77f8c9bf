#include "bck/space.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "bck/errors.hpp"

namespace bck {

void sort_point_sets(std::vector<PointSet>& family) {
  std::sort(family.begin(), family.end(), [](PointSet a, PointSet b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

FiniteSpace::FiniteSpace(std::vector<std::string> labels, std::vector<PointSet> opens,
                         std::vector<PointSet> basis)
    : labels_(std::move(labels)), opens_(std::move(opens)), basis_(std::move(basis)) {
  if (labels_.size() > kMaxSpacePoints)
    throw GuardError("spaces are limited to " + std::to_string(kMaxSpacePoints) + " points");
  sort_point_sets(opens_);
  sort_point_sets(basis_);
  const PointSet all = all_points();
  for (PointSet u : opens_)
    if ((u & ~all) != 0) throw StructureError("open set mentions a point outside the space");
  if (opens_.empty() || opens_.front() != 0) throw StructureError("the empty set must be open");
  for (PointSet u : opens_) {
    for (PointSet v : opens_) {
      if (!is_open(u | v)) throw StructureError("open sets are not closed under union");
      if (!is_open(u & v)) throw StructureError("open sets are not closed under intersection");
    }
  }
  for (PointSet b : basis_)
    if (!is_open(b)) throw StructureError("basis element is not open");
  for (PointSet u : opens_) {
    PointSet covered = 0;
    for (PointSet b : basis_)
      if ((b & ~u) == 0) covered |= b;
    if (covered != u) throw StructureError("basis does not generate every open set");
  }
}

FiniteSpace FiniteSpace::generated_by(std::vector<std::string> labels,
                                      std::vector<PointSet> basis) {
  std::set<PointSet> opens{0};
  for (PointSet b : basis) {
    std::vector<PointSet> next;
    for (PointSet u : opens) next.push_back(u | b);
    opens.insert(next.begin(), next.end());
  }
  return FiniteSpace(std::move(labels), {opens.begin(), opens.end()}, std::move(basis));
}

PointSet FiniteSpace::all_points() const {
  return labels_.size() == 64 ? ~PointSet{0} : ((PointSet{1} << labels_.size()) - 1);
}

bool FiniteSpace::is_open(PointSet s) const {
  auto less = [](PointSet a, PointSet b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  };
  return std::binary_search(opens_.begin(), opens_.end(), s, less);
}

PointSet FiniteSpace::closure(PointSet s) const {
  const PointSet all = all_points();
  PointSet result = all;
  for (PointSet u : opens_)
    if ((u & s) == 0) result &= all & ~u;
  return result;
}

}  // namespace bck
