#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mi {

/// Set of element ids drawn from a fixed ground set {0, ..., n-1}.
/// Packed bitmask with a cached popcount, so size() is O(1) and the
/// add/remove churn in solver inner loops stays cheap.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(int universe_size);
  ElementSet(int universe_size, std::initializer_list<int> elems);

  int universe_size() const { return n_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int v) const;
  void add(int v);
  void remove(int v);
  void clear();

  // Bulk ops require matching universes.
  ElementSet& operator|=(const ElementSet& o);
  ElementSet& operator-=(const ElementSet& o);
  ElementSet& operator&=(const ElementSet& o);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  bool operator==(const ElementSet& o) const { return n_ == o.n_ && words_ == o.words_; }

  bool is_subset_of(const ElementSet& o) const;
  std::vector<int> to_vector() const;  // ascending ids
  std::string to_string() const;       // "{0,2,5}"

  /// Visits members in ascending id order.
  template <typename Fn>
  void for_each(Fn fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

private:
  void check_index(int v) const;

  int n_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mi
