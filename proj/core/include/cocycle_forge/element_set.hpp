#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cocycle_forge {

/// Group elements are indices into the multiplication table; 0 is the identity.
using Element = std::size_t;

/// Largest group order the library handles. Sets are fixed-width bitsets of
/// this many bits so that set algebra never allocates.
inline constexpr std::size_t kMaxOrder = 256;

/// A set of group elements, stored as a bitset keyed to index order.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> xs) {
    for (Element x : xs) insert(x);
  }
  template <typename Range>
  static ElementSet from_range(const Range& xs) {
    ElementSet s;
    for (auto x : xs) s.insert(static_cast<Element>(x));
    return s;
  }
  /// {0, ..., n-1}
  static ElementSet first_n(std::size_t n) {
    ElementSet s;
    for (Element x = 0; x < n; ++x) s.insert(x);
    return s;
  }

  bool contains(Element x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Least member; kMaxOrder when empty.
  Element min() const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] != 0) return i * 64 + static_cast<Element>(std::countr_zero(words_[i]));
    return kMaxOrder;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) noexcept { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Canonical order: by size, then by the sorted member list.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b);

  std::vector<Element> members() const {
    std::vector<Element> out;
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        fn(i * 64 + bit);
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) h = (h ^ w) * 1099511628211ull;
    return h;
  }

 private:
  static constexpr std::size_t kWords = kMaxOrder / 64;
  std::array<std::uint64_t, kWords> words_{};
};

/// "{3,4,5}" using raw indices.
std::string to_string(const ElementSet& s);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace cocycle_forge
