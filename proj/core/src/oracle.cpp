#include "mi/oracle.hpp"

#include <bit>
#include <vector>

namespace mi {

namespace {
template <typename Oracle>
int rank_impl(Oracle& oracle, const ElementSet& x) {
  ElementSet grown(x.universe_size());
  int r = 0;
  x.for_each([&](int v) {
    grown.add(v);
    if (oracle.independent(grown)) {
      ++r;
    } else {
      grown.remove(v);
    }
  });
  return r;
}
}  // namespace

int rank(CountingOracle& oracle, const ElementSet& x) { return rank_impl(oracle, x); }
int rank(const IndependenceOracle& oracle, const ElementSet& x) {
  return rank_impl(oracle, x);
}

bool checked_matroid_axioms(const IndependenceOracle& oracle) {
  const int n = oracle.ground_size();
  if (n > 12)
    throw ContractError("checked_matroid_axioms refuses ground sets larger than 12");

  const unsigned limit = 1u << n;
  std::vector<char> ind(limit);
  {
    ElementSet probe(n);
    for (unsigned mask = 0; mask < limit; ++mask) {
      probe.clear();
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) probe.add(v);
      ind[mask] = oracle.independent(probe) ? 1 : 0;
    }
  }

  if (!ind[0]) return false;

  // Downward closure: every one-element deletion of an independent set stays
  // independent (single steps imply the full closure).
  for (unsigned mask = 0; mask < limit; ++mask) {
    if (!ind[mask]) continue;
    for (unsigned bits = mask; bits; bits &= bits - 1) {
      if (!ind[mask & ~(bits & -bits)]) return false;
    }
  }

  // Exchange between consecutive sizes: for independent |S'| = |S| - 1 there
  // is x in S \ S' with S' + x independent.
  std::vector<std::vector<unsigned>> by_size(static_cast<std::size_t>(n) + 1);
  for (unsigned mask = 0; mask < limit; ++mask) {
    if (ind[mask])
      by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }
  for (int s = 0; s + 1 <= n; ++s) {
    for (unsigned big : by_size[static_cast<std::size_t>(s) + 1]) {
      for (unsigned small : by_size[static_cast<std::size_t>(s)]) {
        bool found = false;
        for (unsigned diff = big & ~small; diff; diff &= diff - 1) {
          if (ind[small | (diff & -diff)]) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace mi
