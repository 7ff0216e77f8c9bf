#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bck {

using Element = std::size_t;

/// Subset of {0, ..., universe-1}, stored as a packed bitset.
///
/// Ordering is lexicographic on the member list read low-to-high, which
/// gives deterministic sort orders for reports.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<Element> members);
  ElementSet(std::size_t universe, const std::vector<Element>& members);

  static ElementSet full(std::size_t universe);
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  bool contains(Element x) const;
  void insert(Element x);
  void erase(Element x);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == universe_; }

  std::vector<Element> members() const;
  /// Only valid for universes of at most 64 elements.
  std::uint64_t to_mask() const;

  bool subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  ElementSet complement() const;

  bool operator==(const ElementSet& other) const = default;
  std::strong_ordering operator<=>(const ElementSet& other) const;

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  void check(Element x) const;
  void require_same_universe(const ElementSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bck
