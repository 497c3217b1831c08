#pragma once

#include <cstdint>
#include <stdexcept>

#include "mi/element_set.hpp"

namespace mi {

/// Thrown when a documented precondition or internal invariant is violated.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Independence oracle over the ground set {0, ..., n-1}. Implementations are
/// immutable after construction and safe to query concurrently.
class IndependenceOracle {
public:
  virtual ~IndependenceOracle() = default;
  virtual int ground_size() const = 0;
  /// True iff s is independent. The accepted family must be a matroid.
  virtual bool independent(const ElementSet& s) const = 0;
};

/// Counts every query forwarded to the wrapped oracle. Solver entry points
/// accept only this wrapper so reported totals cover all algorithmic queries;
/// assertions and result verification go through uncounted(). One instance
/// per solver run; not thread-safe.
class CountingOracle {
public:
  explicit CountingOracle(const IndependenceOracle& inner) : inner_(&inner) {}

  bool independent(const ElementSet& s) {
    ++count_;
    return inner_->independent(s);
  }
  std::uint64_t count() const { return count_; }
  void reset() { count_ = 0; }
  int ground_size() const { return inner_->ground_size(); }
  const IndependenceOracle& uncounted() const { return *inner_; }

private:
  const IndependenceOracle* inner_;
  std::uint64_t count_ = 0;
};

/// Rank of x: size of a maximal independent subset, grown greedily in
/// ascending id order. Spends exactly |x| queries.
int rank(CountingOracle& oracle, const ElementSet& x);
int rank(const IndependenceOracle& oracle, const ElementSet& x);

/// Exhaustive audit of the matroid axioms: the empty set is independent, the
/// family is downward closed, and the exchange property holds between every
/// pair of independent sets with sizes s and s+1. Enumerates all 2^n subsets;
/// refuses ground sets larger than 12.
bool checked_matroid_axioms(const IndependenceOracle& oracle);

}  // namespace mi
