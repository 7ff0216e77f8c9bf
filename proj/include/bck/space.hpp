#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bck {

/// Subset of the points of a FiniteSpace, bit i = point i.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxSpacePoints = 64;

/// A finite set of points with an explicit family of open sets.
///
/// The family must contain the empty set and be closed under pairwise union
/// and intersection; the basis must generate every open by unions. The whole
/// point set need not be open.
class FiniteSpace {
 public:
  FiniteSpace() = default;
  /// Throws StructureError on an invalid family, GuardError past 64 points.
  FiniteSpace(std::vector<std::string> labels, std::vector<PointSet> opens,
              std::vector<PointSet> basis);

  /// Opens = all unions of the given basis elements (plus the empty set).
  static FiniteSpace generated_by(std::vector<std::string> labels, std::vector<PointSet> basis);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Sorted by (cardinality, mask), deduplicated.
  const std::vector<PointSet>& opens() const { return opens_; }
  const std::vector<PointSet>& basis() const { return basis_; }
  PointSet all_points() const;
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(all_points() & ~s); }
  /// Smallest closed set containing s.
  PointSet closure(PointSet s) const;

 private:
  std::vector<std::string> labels_;
  std::vector<PointSet> opens_;
  std::vector<PointSet> basis_;
};

/// Sorted (cardinality, mask) order used for every family of point sets.
void sort_point_sets(std::vector<PointSet>& family);

}  // namespace bck
