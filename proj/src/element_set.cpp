#include "bck/element_set.hpp"

#include <algorithm>
#include <bit>

#include "bck/errors.hpp"

namespace bck {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t universe) {
  return (universe + kWordBits - 1) / kWordBits;
}
}  // namespace

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members)
    : ElementSet(universe) {
  for (Element x : members) insert(x);
}

ElementSet::ElementSet(std::size_t universe, const std::vector<Element>& members)
    : ElementSet(universe) {
  for (Element x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (Element x = 0; x < universe; ++x) s.insert(x);
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) throw StructureError("mask conversion needs a universe of at most 64");
  ElementSet s(universe);
  if (universe > 0) {
    const std::uint64_t keep = universe == kWordBits ? ~0ULL : ((1ULL << universe) - 1);
    s.words_[0] = mask & keep;
  }
  return s;
}

void ElementSet::check(Element x) const {
  if (x >= universe_) {
    throw StructureError("element " + std::to_string(x) + " outside universe of size " +
                         std::to_string(universe_));
  }
}

void ElementSet::require_same_universe(const ElementSet& other) const {
  if (universe_ != other.universe_) throw StructureError("element sets over different universes");
}

bool ElementSet::contains(Element x) const {
  if (x >= universe_) return false;
  return (words_[x / kWordBits] >> (x % kWordBits)) & 1ULL;
}

void ElementSet::insert(Element x) {
  check(x);
  words_[x / kWordBits] |= 1ULL << (x % kWordBits);
}

void ElementSet::erase(Element x) {
  check(x);
  words_[x / kWordBits] &= ~(1ULL << (x % kWordBits));
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  for (Element x = 0; x < universe_; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::uint64_t ElementSet::to_mask() const {
  if (universe_ > kWordBits) throw StructureError("mask conversion needs a universe of at most 64");
  return words_.empty() ? 0 : words_[0];
}

bool ElementSet::subset_of(const ElementSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  require_same_universe(other);
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  require_same_universe(other);
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  return out;
}

ElementSet ElementSet::complement() const {
  ElementSet out = full(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  const auto a = members();
  const auto b = other.members();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Element x : members()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

}  // namespace bck
