#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "mi/oracle.hpp"

namespace mi {

/// Set verified independent in both matroids of an intersection instance.
/// Immutable; augmentations build a fresh one through verified().
class CommonSet {
public:
  explicit CommonSet(int n) : members_(n) {}

  /// Asserts common independence with one uncounted query per matroid and
  /// throws ContractError if either fails.
  static CommonSet verified(ElementSet members, const IndependenceOracle& m1,
                            const IndependenceOracle& m2);

  const ElementSet& members() const { return members_; }
  int size() const { return members_.size(); }
  bool contains(int v) const { return members_.contains(v); }

private:
  ElementSet members_;
};

/// Breadth-first distance layers of the exchange graph of a common set S.
/// Odd layers hold elements outside S, even layers hold members of S.
/// st_distance is the full s-to-t distance (always even); when it is 2l+2 the
/// stored layers run up to D_{2l+1} and t_arc flags the last-layer elements
/// with a direct arc to t. A search capped by max_ell reports kUnreachable
/// for any distance beyond 2*max_ell+2; exhausted tells whether that value is
/// exact (the graph ran out of arcs) or just past the cap.
struct DistanceLayers {
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  int n = 0;
  int st_distance = kUnreachable;
  int ell = -1;  // (st_distance - 2) / 2 when reachable
  bool exhausted = false;
  std::vector<std::vector<int>> layers;  // layers[i] = D_{i+1}, ascending ids
  std::vector<int> layer_of;             // 0 = unlayered, else 1-based layer
  std::vector<char> t_arc;               // last odd layer: S+b independent in M2

  bool st_reachable() const { return st_distance != kUnreachable; }
  int num_layers() const { return static_cast<int>(layers.size()); }
  /// 1-based accessor; indices past the computed depth read as empty.
  const std::vector<int>& layer(int k) const;
  int layer_size(int k) const;
};

/// Binary search for an exchange partner. Given x independent, b outside x
/// with x+b dependent, and candidates y (an ordered subset of x), returns the
/// first element a of y with x+b-a independent, or nullopt when no candidate
/// works. Spends at most ceil(log2 |y|) + 1 queries.
std::optional<int> find_exchange(CountingOracle& oracle, const ElementSet& x,
                                 const std::vector<int>& y, int b);

DistanceLayers compute_distance_layers(CountingOracle& m1, CountingOracle& m2,
                                       const CommonSet& s, int max_ell);

/// Augmenting path as its element sequence (b_1, a_1, ..., b_{l+1}):
/// odd positions lie outside S, even positions inside.
struct AugmentingPath {
  std::vector<int> elems;
};

/// S with the path elements toggled; verifies the result with one uncounted
/// query per matroid and throws ContractError if the caller handed a bad path.
CommonSet augment_path(const CommonSet& s, const AugmentingPath& p,
                       const IndependenceOracle& m1, const IndependenceOracle& m2);

/// Stateful shortest-path search over fixed distance layers, used for
/// blocking-style phases: augment, consume(), repeat until next() fails.
/// Walks backward from t the way refine_path does; elements that dead-end are
/// marked dead for the rest of the phase, and every even element keeps a
/// cursor into the previous odd layer so each candidate pair is probed at
/// most once per phase.
class PathSearch {
public:
  explicit PathSearch(const DistanceLayers& layers);

  std::optional<AugmentingPath> next(CountingOracle& m1, CountingOracle& m2,
                                     const CommonSet& s);
  /// Marks the elements of an applied path dead. Call after every augment.
  void consume(const AugmentingPath& p);

private:
  const DistanceLayers* layers_;
  std::vector<char> dead_;
  std::vector<int> cursor_;
};

/// One-shot wrapper: shortest augmenting path within the given layers, or
/// nullopt once the layers are saturated.
std::optional<AugmentingPath> find_augmenting_path(CountingOracle& m1,
                                                   CountingOracle& m2,
                                                   const CommonSet& s,
                                                   const DistanceLayers& layers);

}  // namespace mi
