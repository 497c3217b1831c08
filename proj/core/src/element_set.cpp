#include "mi/element_set.hpp"

#include <stdexcept>

namespace mi {

ElementSet::ElementSet(int universe_size)
    : n_(universe_size), words_(static_cast<std::size_t>((universe_size + 63) / 64), 0) {
  if (universe_size < 0) throw std::invalid_argument("negative universe size");
}

ElementSet::ElementSet(int universe_size, std::initializer_list<int> elems)
    : ElementSet(universe_size) {
  for (int v : elems) add(v);
}

void ElementSet::check_index(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("element id outside universe");
}

bool ElementSet::contains(int v) const {
  check_index(v);
  return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
}

void ElementSet::add(int v) {
  check_index(v);
  std::uint64_t& word = words_[static_cast<std::size_t>(v) / 64];
  const std::uint64_t bit = 1ull << (v % 64);
  if (!(word & bit)) {
    word |= bit;
    ++count_;
  }
}

void ElementSet::remove(int v) {
  check_index(v);
  std::uint64_t& word = words_[static_cast<std::size_t>(v) / 64];
  const std::uint64_t bit = 1ull << (v % 64);
  if (word & bit) {
    word &= ~bit;
    --count_;
  }
}

void ElementSet::clear() {
  words_.assign(words_.size(), 0);
  count_ = 0;
}

namespace {
void require_same_universe(int a, int b) {
  if (a != b) throw std::invalid_argument("element sets over different universes");
}
}  // namespace

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  require_same_universe(n_, o.n_);
  count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= o.words_[w];
    count_ += std::popcount(words_[w]);
  }
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& o) {
  require_same_universe(n_, o.n_);
  count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= ~o.words_[w];
    count_ += std::popcount(words_[w]);
  }
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  require_same_universe(n_, o.n_);
  count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= o.words_[w];
    count_ += std::popcount(words_[w]);
  }
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  require_same_universe(n_, o.n_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~o.words_[w]) return false;
  }
  return true;
}

std::vector<int> ElementSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count_));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  });
  out += '}';
  return out;
}

}  // namespace mi
