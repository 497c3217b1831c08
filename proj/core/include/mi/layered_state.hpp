#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mi/exchange.hpp"

namespace mi {

enum class ElementStatus : std::uint8_t { Fresh, Selected, Removed };

/// Mutable refinement state over fixed distance layers. Selected elements of
/// odd layer 2k-1 form B_k, selected elements of even layer 2k form A_k.
/// Statuses only move Fresh -> Selected -> Removed or Fresh -> Removed; the
/// mutators throw on any other transition. Counts status changes of
/// even-layer elements, which refinement progress arguments lean on.
class LayeredState {
public:
  explicit LayeredState(const DistanceLayers& layers);

  const DistanceLayers& layers() const { return *layers_; }
  int ell() const { return ell_; }
  int n() const { return layers_->n; }

  ElementStatus status(int v) const;
  bool is_fresh(int v) const { return status(v) == ElementStatus::Fresh; }
  void select(int v);
  void remove(int v);

  // Layer views, 1-based; out-of-range layers read as empty. Ascending ids.
  std::vector<int> selected_in(int layer) const;
  std::vector<int> fresh_in(int layer) const;
  std::vector<int> removed_in(int layer) const;
  int selected_count(int layer) const;
  int fresh_count(int layer) const;
  int removed_count(int layer) const;

  // B_k / A_k conveniences (k is the pair index, 1-based for B, A).
  std::vector<int> b_set(int k) const { return selected_in(2 * k - 1); }
  std::vector<int> a_set(int k) const { return selected_in(2 * k); }
  int b_size(int k) const { return selected_count(2 * k - 1); }
  int a_size(int k) const { return selected_count(2 * k); }

  std::uint64_t even_status_changes() const { return even_changes_; }

  ElementSet selected_odd_union() const;   // union of all B_k
  ElementSet selected_even_union() const;  // union of all A_k

private:
  int layer_index(int v) const;

  const DistanceLayers* layers_;
  int ell_;
  std::vector<ElementStatus> status_;
  std::vector<int> selected_per_layer_;  // index 0 unused
  std::vector<int> fresh_per_layer_;
  std::uint64_t even_changes_ = 0;
};

/// Fresh state over the layers; with nothing selected or removed the
/// refinement invariants hold vacuously.
LayeredState init_state(const DistanceLayers& layers);

/// Full audit of the refinement invariants through uncounted oracles:
/// the selected sets form a partial augmenting set (non-increasing widths,
/// S+B_1 independent in M1, S+B_{l+1} independent in M2, S-A_k+B_{k+1}
/// independent in M1, rank_2(S-A_k+B_k) = rank_2(S)) and the removed layers
/// stay neutral (removing R_2k from W = S-A_k+(D_{2k+1}-R_{2k+1}) drops
/// rank_1 by exactly |R_2k|; adding R_{2k-1} to W = S-(D_2k-R_2k)+B_k leaves
/// rank_2 unchanged). Used by tests and debug tooling only. Returns false and
/// fills why (when given) on the first failed condition.
bool check_invariants(const LayeredState& st, const CommonSet& s,
                      const IndependenceOracle& m1, const IndependenceOracle& m2,
                      std::string* why = nullptr);

/// Structural completeness test: all widths |B_1|, |A_1|, ..., |B_{l+1}| equal.
bool is_maximal_candidate(const LayeredState& st);

/// S with every selected odd element added and selected even element removed.
/// Requires is_maximal_candidate; verifies the result with one uncounted
/// query per matroid and throws ContractError on a caller bug.
CommonSet augment_by_set(const CommonSet& s, const LayeredState& st,
                         const IndependenceOracle& m1, const IndependenceOracle& m2);

}  // namespace mi
