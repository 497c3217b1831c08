#include "mi/solvers.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace mi {

namespace {

int width_gap(const LayeredState& st) {
  return st.b_size(1) - st.b_size(st.ell() + 1);
}

void require_same_ground(const CountingOracle& m1, const CountingOracle& m2) {
  if (m1.ground_size() != m2.ground_size())
    throw ContractError("solvers: oracles disagree on the ground size");
}

// Shared plumbing for the staged solvers: owns the evolving set and the
// report, and folds per-phase query deltas (layer construction included)
// into the records.
struct Driver {
  CountingOracle& m1;
  CountingOracle& m2;
  RunReport rep;
  CommonSet s;
  std::uint64_t q1_base, q2_base;

  Driver(CountingOracle& a, CountingOracle& b, std::string solver)
      : m1(a), m2(b), s(a.ground_size()), q1_base(a.count()), q2_base(b.count()) {
    require_same_ground(a, b);
    rep.solver = std::move(solver);
    rep.n = a.ground_size();
    rep.solution = ElementSet(rep.n);
  }

  void phase(const DistanceLayers& layers, int p, const char* stage,
             const RefineHooks* hooks, std::uint64_t q1_pre,
             std::uint64_t q2_pre) {
    PhaseOutcome out = run_phase_on(layers, m1, m2, s, p, hooks);
    out.record.stage = stage;
    out.record.queries_m1 = m1.count() - q1_pre;
    out.record.queries_m2 = m2.count() - q2_pre;
    s = std::move(out.next);
    rep.phases.push_back(std::move(out.record));
  }

  RunReport finish() {
    rep.solution = s.members();
    rep.solution_size = s.size();
    rep.queries_m1 = m1.count() - q1_base;
    rep.queries_m2 = m2.count() - q2_base;
    return std::move(rep);
  }
};

}  // namespace

int default_refine_gap(int r_hat) {
  if (r_hat <= 1) return 1;
  const double lg = std::log2(static_cast<double>(r_hat));
  return std::max(
      1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(r_hat) / lg))));
}

PhaseOutcome run_phase_on(const DistanceLayers& layers, CountingOracle& m1,
                          CountingOracle& m2, const CommonSet& s, int p,
                          const RefineHooks* hooks) {
  if (!layers.st_reachable())
    throw ContractError("run_phase: t is unreachable");
  if (p < 1) throw ContractError("run_phase: p must be at least 1");
  const std::uint64_t q1 = m1.count(), q2 = m2.count();

  LayeredState st = init_state(layers);
  PhaseRecord rec;
  rec.st_distance = layers.st_distance;
  rec.ell = layers.ell;
  do {
    refine_pass(st, s, m1, m2, hooks);
    ++rec.refine_passes;
  } while (width_gap(st) > p);
  while (refine_path(st, s, m1, m2, nullptr, hooks) ==
         RefineOutcome::ExtendedByPath)
    ++rec.refine_paths;

  CommonSet next = augment_by_set(s, st, m1.uncounted(), m2.uncounted());
  rec.width = next.size() - s.size();
  rec.size_after = next.size();
  rec.queries_m1 = m1.count() - q1;
  rec.queries_m2 = m2.count() - q2;
  return {std::move(next), std::move(rec)};
}

PhaseOutcome run_phase(CountingOracle& m1, CountingOracle& m2, const CommonSet& s,
                       int p, int max_ell, const RefineHooks* hooks) {
  const std::uint64_t q1 = m1.count(), q2 = m2.count();
  const DistanceLayers layers = compute_distance_layers(m1, m2, s, max_ell);
  if (!layers.st_reachable())
    throw ContractError("run_phase: t is unreachable within the cap");
  PhaseOutcome out = run_phase_on(layers, m1, m2, s, p, hooks);
  out.record.queries_m1 = m1.count() - q1;  // fold in the layer construction
  out.record.queries_m2 = m2.count() - q2;
  return out;
}

RunReport approx_intersect(CountingOracle& m1, CountingOracle& m2,
                           const ApproxParams& params, const RefineHooks* hooks) {
  if (params.epsilon <= 0.0 || params.epsilon > 1.0)
    throw ContractError("approx_intersect: epsilon must lie in (0, 1]");
  Driver d(m1, m2, "approx");
  d.rep.epsilon = params.epsilon;
  const int ell_max = params.ell_max_override > 0
                          ? params.ell_max_override
                          : static_cast<int>(std::ceil(2.0 / params.epsilon));
  while (true) {
    const std::uint64_t q1 = m1.count(), q2 = m2.count();
    const DistanceLayers layers =
        compute_distance_layers(m1, m2, d.s, ell_max - 1);
    if (!layers.st_reachable()) break;  // done, or past the distance cap
    const int p = params.p_override > 0
                      ? params.p_override
                      : default_refine_gap(std::max(1, d.s.size()));
    d.phase(layers, p, d.rep.phases.empty() ? "greedy" : "approx", hooks, q1, q2);
  }
  return d.finish();
}

RunReport exact_intersect(CountingOracle& m1, CountingOracle& m2,
                          const LongPathFinder& finder, const RefineHooks* hooks) {
  Driver d(m1, m2, "exact");

  // Greedy round at distance two fixes the estimate r_hat <= r <= 2*r_hat.
  {
    const std::uint64_t q1 = m1.count(), q2 = m2.count();
    const DistanceLayers layers = compute_distance_layers(m1, m2, d.s, 0);
    if (layers.st_reachable()) d.phase(layers, 1, "greedy", hooks, q1, q2);
  }
  const int r_hat = std::max(1, d.s.size());
  const double eps = std::pow(static_cast<double>(r_hat), -0.25);
  d.rep.epsilon = eps;

  const int ell_max = static_cast<int>(std::ceil(2.0 / eps));
  while (true) {
    const std::uint64_t q1 = m1.count(), q2 = m2.count();
    const DistanceLayers layers =
        compute_distance_layers(m1, m2, d.s, ell_max - 1);
    if (!layers.st_reachable()) break;
    d.phase(layers, default_refine_gap(std::max(1, d.s.size())), "approx",
            hooks, q1, q2);
  }

  // Blocking rounds while the distance stays within (2*r_hat)^{3/4}.
  const int d_threshold = static_cast<int>(
      std::ceil(std::pow(2.0 * static_cast<double>(r_hat), 0.75)));
  while (true) {
    const std::uint64_t q1 = m1.count(), q2 = m2.count();
    const DistanceLayers layers = compute_distance_layers(m1, m2, d.s, d.rep.n);
    if (!layers.st_reachable() || layers.st_distance > d_threshold) break;
    d.phase(layers, 1, "cunningham", hooks, q1, q2);
  }

  // The few remaining augmentations, one path at a time.
  const LongPathFinder default_finder =
      [](CountingOracle& a, CountingOracle& b,
         const CommonSet& cur) -> std::optional<AugmentingPath> {
    const DistanceLayers layers =
        compute_distance_layers(a, b, cur, a.ground_size());
    if (!layers.st_reachable()) return std::nullopt;
    return find_augmenting_path(a, b, cur, layers);
  };
  const LongPathFinder& f = finder ? finder : default_finder;
  while (true) {
    const std::uint64_t q1 = m1.count(), q2 = m2.count();
    const auto path = f(m1, m2, d.s);
    if (!path) break;
    d.s = augment_path(d.s, *path, m1.uncounted(), m2.uncounted());
    const int st = static_cast<int>(path->elems.size()) + 1;
    if (!d.rep.phases.empty() && d.rep.phases.back().stage == "long-path" &&
        d.rep.phases.back().st_distance == st) {
      PhaseRecord& back = d.rep.phases.back();  // same distance: one phase
      back.width += 1;
      back.size_after = d.s.size();
      back.queries_m1 += m1.count() - q1;
      back.queries_m2 += m2.count() - q2;
    } else {
      PhaseRecord rec;
      rec.stage = "long-path";
      rec.st_distance = st;
      rec.ell = (st - 2) / 2;
      rec.width = 1;
      rec.size_after = d.s.size();
      rec.queries_m1 = m1.count() - q1;
      rec.queries_m2 = m2.count() - q2;
      d.rep.phases.push_back(std::move(rec));
    }
  }

  d.rep.r_known = d.s.size();
  return d.finish();
}

RunReport cunningham_reference(CountingOracle& m1, CountingOracle& m2,
                               const RefineHooks* hooks) {
  (void)hooks;  // the baseline has no refinement ops to observe
  Driver d(m1, m2, "cunningham");
  while (true) {
    const std::uint64_t q1 = m1.count(), q2 = m2.count();
    const DistanceLayers layers = compute_distance_layers(m1, m2, d.s, d.rep.n);
    if (!layers.st_reachable()) break;
    PathSearch search(layers);
    int width = 0;
    while (auto path = search.next(m1, m2, d.s)) {
      d.s = augment_path(d.s, *path, m1.uncounted(), m2.uncounted());
      search.consume(*path);
      ++width;
    }
    if (width == 0)
      throw ContractError("cunningham_reference: reachable layers, no path");
    // The stale-layer search may stop early; rounds that stay at one distance
    // fold into a single phase record.
    if (!d.rep.phases.empty() &&
        d.rep.phases.back().st_distance == layers.st_distance) {
      PhaseRecord& back = d.rep.phases.back();
      back.width += width;
      back.size_after = d.s.size();
      back.queries_m1 += m1.count() - q1;
      back.queries_m2 += m2.count() - q2;
    } else {
      PhaseRecord rec;
      rec.stage = "cunningham";
      rec.st_distance = layers.st_distance;
      rec.ell = layers.ell;
      rec.width = width;
      rec.size_after = d.s.size();
      rec.queries_m1 = m1.count() - q1;
      rec.queries_m2 = m2.count() - q2;
      d.rep.phases.push_back(std::move(rec));
    }
  }
  d.rep.r_known = d.s.size();
  return d.finish();
}

RunReport exhaustive_max_common(CountingOracle& m1, CountingOracle& m2) {
  require_same_ground(m1, m2);
  const int n = m1.ground_size();
  if (n > 20)
    throw ContractError("exhaustive_max_common: ground set larger than 20");
  RunReport rep;
  rep.solver = "exhaustive";
  rep.n = n;
  rep.solution = ElementSet(n);
  const std::uint64_t q1 = m1.count(), q2 = m2.count();

  ElementSet all(n);
  for (int v = 0; v < n; ++v) all.add(v);
  const int upper = std::min(rank(m1, all), rank(m2, all));

  for (int k = upper; k >= 1 && rep.solution_size == 0; --k) {
    const std::uint32_t limit = std::uint32_t{1} << n;
    std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    while (mask < limit) {
      ElementSet cand(n);
      for (int v = 0; v < n; ++v)
        if (mask & (std::uint32_t{1} << v)) cand.add(v);
      if (m1.independent(cand) && m2.independent(cand)) {
        rep.solution = cand;
        rep.solution_size = k;
        break;
      }
      const std::uint32_t c = mask & (~mask + 1);  // Gosper's hack
      const std::uint32_t grown = mask + c;
      mask = (((grown ^ mask) >> 2) / c) | grown;
    }
  }
  rep.r_known = rep.solution_size;
  rep.queries_m1 = m1.count() - q1;
  rep.queries_m2 = m2.count() - q2;
  return rep;
}

}  // namespace mi
