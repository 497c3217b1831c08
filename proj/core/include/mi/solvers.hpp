#pragma once

#include <optional>
#include <string>

#include "mi/refine.hpp"

namespace mi {

/// Per-phase trace entry. Solvers label phases by stage so callers can see
/// which regime produced each augmentation batch. Query counts cover the
/// whole phase including its layer construction.
struct PhaseRecord {
  std::string stage;  // "greedy", "approx", "cunningham", "long-path"
  int st_distance = 0;
  int ell = 0;
  int width = 0;  // size gained during the phase
  int refine_passes = 0;
  int refine_paths = 0;  // spliced-path count (ExtendedByPath outcomes)
  std::uint64_t queries_m1 = 0;
  std::uint64_t queries_m2 = 0;
  int size_after = 0;
};

struct RunReport {
  std::string solver;
  int n = 0;
  std::optional<int> r_known;
  double epsilon = 0.0;  // approximation parameter actually used; 0 when n/a
  ElementSet solution;
  int solution_size = 0;
  std::uint64_t queries_m1 = 0;
  std::uint64_t queries_m2 = 0;
  std::vector<PhaseRecord> phases;

  std::uint64_t queries_total() const { return queries_m1 + queries_m2; }
};

struct ApproxParams {
  double epsilon = 0.1;     // in (0, 1]
  int p_override = 0;       // 0: derive from the current rank estimate
  int ell_max_override = 0; // 0: ceil(2 / epsilon)
};

/// Refinement-gap target for a rank estimate: ceil(sqrt(r / log2 r)), at
/// least 1.
int default_refine_gap(int r_hat);

struct PhaseOutcome {
  CommonSet next;
  PhaseRecord record;
};

/// One phase at the current distance: build layers (capped at max_ell),
/// refine until the width gap |B_1|-|B_{l+1}| is at most p, splice paths
/// until maximal, augment. Throws ContractError if t is unreachable within
/// the cap.
PhaseOutcome run_phase(CountingOracle& m1, CountingOracle& m2, const CommonSet& s,
                       int p, int max_ell, const RefineHooks* hooks = nullptr);

/// Same, over layers the caller already computed.
PhaseOutcome run_phase_on(const DistanceLayers& layers, CountingOracle& m1,
                          CountingOracle& m2, const CommonSet& s, int p,
                          const RefineHooks* hooks = nullptr);

/// (1-epsilon)-approximate maximum common independent set: an initial greedy
/// phase fixes the rank estimate, then phases run while the s-t distance
/// stays within 2*ceil(2/epsilon)+1.
RunReport approx_intersect(CountingOracle& m1, CountingOracle& m2,
                           const ApproxParams& params = {},
                           const RefineHooks* hooks = nullptr);

/// Pluggable finder for the tail of exact_intersect: any augmenting path for
/// the current set, or nullopt when the set is maximum.
using LongPathFinder = std::function<std::optional<AugmentingPath>(
    CountingOracle&, CountingOracle&, const CommonSet&)>;

/// Exact maximum common independent set, staged: approximate phases with
/// epsilon = r_hat^{-1/4}, blocking phases until the s-t distance passes
/// (2*r_hat)^{3/4}, then one augmenting path at a time via the finder
/// (default: fresh layers plus find_augmenting_path per augmentation).
RunReport exact_intersect(CountingOracle& m1, CountingOracle& m2,
                          const LongPathFinder& finder = {},
                          const RefineHooks* hooks = nullptr);

/// Classic baseline: repeated layer construction plus blocking augmentation
/// at the current shortest distance, until t is unreachable.
RunReport cunningham_reference(CountingOracle& m1, CountingOracle& m2,
                               const RefineHooks* hooks = nullptr);

/// Branch-and-bound over all subsets; the reference answer for small
/// instances. Refuses n > 20.
RunReport exhaustive_max_common(CountingOracle& m1, CountingOracle& m2);

}  // namespace mi
