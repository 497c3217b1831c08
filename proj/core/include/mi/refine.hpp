#pragma once

#include <functional>

#include "mi/layered_state.hpp"

namespace mi {

enum class RefineOp { AB, BA, ABA, Pass, Path };

enum class RefineOutcome { ExtendedByPath, MaximalReached };

/// Observation hooks for tests and the debug-invariants mode. after_op fires
/// after every refinement primitive, nested calls included, with the common
/// set being refined and the query counts spent inside that call (its own
/// nested calls included). k is the pair index for AB/BA/ABA and -1 for
/// Pass/Path.
struct RefineHooks {
  std::function<void(RefineOp op, int k, const LayeredState& st,
                     const CommonSet& s, std::uint64_t dq1, std::uint64_t dq2)>
      after_op;
};

/// Path spliced into the state by refine_path, recorded before its elements
/// were selected: elems alternate layers entry_layer, entry_layer+1, ... up
/// to the last odd layer.
struct ValidPath {
  int entry_layer = 0;
  std::vector<int> elems;
};

/// Grows B_{k+1} maximally within the fresh part of layer 2k+1, then drops
/// the part of A_k that can be added back. Keeps S-A_k+B_{k+1} independent
/// in M1. Spends at most |D_{2k+1}| + |D_{2k}| queries. Requires 0 <= k <= ell.
void refine_ab(int k, LayeredState& st, const CommonSet& s, CountingOracle& m1,
               CountingOracle& m2, const RefineHooks* hooks = nullptr);

/// Shrinks B_k to a maximal subset compatible with S-(D_2k-R_2k) in M2, then
/// selects into A_k the fresh layer-2k elements that cannot be added back.
/// Returns the elements newly selected into A_k. Spends at most
/// |D_{2k-1}| + |D_2k| queries. Requires 1 <= k <= ell+1.
std::vector<int> refine_ba(int k, LayeredState& st, const CommonSet& s,
                           CountingOracle& m1, CountingOracle& m2,
                           const RefineHooks* hooks = nullptr);

/// Three-layer refinement around pair k: flatten (B_{k+1}, A_{k+1}), settle
/// every fresh element of layer 2k+1 by a two-sided test, flatten again, then
/// rebalance (A_k, B_{k+1}). Leaves |A_k| = |B_{k+1}| = |A_{k+1}| up to the
/// imaginary ends. Requires 0 <= k <= ell.
void refine_aba(int k, LayeredState& st, const CommonSet& s, CountingOracle& m1,
                CountingOracle& m2, const RefineHooks* hooks = nullptr);

/// One full sweep: refine_aba for k = ell down to 0.
void refine_pass(LayeredState& st, const CommonSet& s, CountingOracle& m1,
                 CountingOracle& m2, const RefineHooks* hooks = nullptr);

/// Backward sweep that either splices one valid path into the state
/// (ExtendedByPath, |B_{l+1}| grows by exactly one) or certifies that the
/// state cannot be extended (MaximalReached). When spliced is non-null and a
/// path was found, it receives the path as recorded before splicing.
RefineOutcome refine_path(LayeredState& st, const CommonSet& s,
                          CountingOracle& m1, CountingOracle& m2,
                          ValidPath* spliced = nullptr,
                          const RefineHooks* hooks = nullptr);

}  // namespace mi
