#include "mi/solvers.hpp"

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "mi/matroids.hpp"
#include "support/brute.hpp"
#include "support/instances.hpp"

using mi::CommonSet;
using mi::CountingOracle;
using mi::ElementSet;
using mi::RunReport;

namespace {

mi::DistanceLayers layers_of(const mi::IndependenceOracle& m1,
                             const mi::IndependenceOracle& m2,
                             const ElementSet& members) {
  CountingOracle c1(m1), c2(m2);
  const CommonSet s = CommonSet::verified(members, m1, m2);
  return mi::compute_distance_layers(c1, c2, s, m1.ground_size());
}

bool solution_independent(const RunReport& rep, const mi::IndependenceOracle& m1,
                          const mi::IndependenceOracle& m2) {
  return m1.independent(rep.solution) && m2.independent(rep.solution);
}

bool st_strictly_increasing(const RunReport& rep) {
  for (std::size_t i = 1; i < rep.phases.size(); ++i)
    if (rep.phases[i].st_distance <= rep.phases[i - 1].st_distance) return false;
  return true;
}

// Smallest integer >= (num/den) * r, computed in integers.
int size_floor(int r, int num, int den) { return (num * r + den - 1) / den; }

}  // namespace

TEST_CASE("default_refine_gap frozen values") {
  CHECK(mi::default_refine_gap(0) == 1);
  CHECK(mi::default_refine_gap(1) == 1);
  CHECK(mi::default_refine_gap(2) == 2);
  CHECK(mi::default_refine_gap(4) == 2);
  CHECK(mi::default_refine_gap(16) == 2);
  CHECK(mi::default_refine_gap(64) == 4);
  CHECK(mi::default_refine_gap(256) == 6);
}

TEST_CASE("run_phase at distance two is one greedy blocking round") {
  mi::UniformMatroid m1(4, 2), m2(4, 3);
  CountingOracle c1(m1), c2(m2);
  const CommonSet s(4);

  auto out = mi::run_phase(c1, c2, s, 1, 8);
  CHECK(out.next.members() == ElementSet(4, {0, 1}));
  CHECK(out.record.st_distance == 2);
  CHECK(out.record.ell == 0);
  CHECK(out.record.width == 2);
  CHECK(out.record.refine_passes == 1);
  CHECK(out.record.refine_paths == 0);
  CHECK(out.record.size_after == 2);
  CHECK(out.record.queries_m1 + out.record.queries_m2 == c1.count() + c2.count());

  // The result saturates the first matroid; another phase has no target.
  CHECK(!layers_of(m1, m2, out.next.members()).st_reachable());
  CHECK_THROWS_AS(mi::run_phase(c1, c2, out.next, 1, 8), mi::ContractError);
  CHECK_THROWS_AS(mi::run_phase(c1, c2, s, 0, 8), mi::ContractError);
}

TEST_CASE("run_phase keeps pass and path counters inside the planned budget") {
  std::mt19937_64 gen(131);
  int phases_seen = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + brute::rnd_below(gen, 8);
    auto m1 = brute::sample_matroid(gen, n);
    auto m2 = brute::sample_matroid(gen, n);
    const int r = brute::max_common_size(*m1, *m2);
    const int p = 1 + trial % 3;

    CountingOracle c1(*m1), c2(*m2);
    CommonSet s(n);
    int prev_st = 0;
    while (true) {
      CountingOracle probe1(*m1), probe2(*m2);
      if (!mi::compute_distance_layers(probe1, probe2, s, n).st_reachable()) break;
      auto out = mi::run_phase(c1, c2, s, p, n);
      ++phases_seen;
      CHECK(out.record.st_distance > prev_st);
      prev_st = out.record.st_distance;
      CHECK(out.record.refine_passes <= (r + p - 1) / p + 1);
      CHECK(out.record.refine_paths <= p);
      CHECK(out.record.width >= 1);
      s = std::move(out.next);
    }
    CHECK(s.size() == r);
  }
  CHECK(phases_seen >= 60);
}

TEST_CASE("approx_intersect rejects out-of-range epsilon") {
  mi::UniformMatroid m(3, 2);
  CountingOracle c1(m), c2(m);
  mi::ApproxParams params;
  params.epsilon = 0.0;
  CHECK_THROWS_AS(mi::approx_intersect(c1, c2, params), mi::ContractError);
  params.epsilon = 1.5;
  CHECK_THROWS_AS(mi::approx_intersect(c1, c2, params), mi::ContractError);
}

TEST_CASE("approx_intersect on an empty intersection returns the empty set") {
  mi::UniformMatroid m1(3, 0), m2(3, 3);
  CountingOracle c1(m1), c2(m2);
  auto rep = mi::approx_intersect(c1, c2);
  CHECK(rep.solution_size == 0);
  CHECK(rep.solution == ElementSet(3));
  CHECK(rep.phases.empty());
  CHECK(rep.queries_total() == c1.count() + c2.count());
}

TEST_CASE("approx_intersect stops by the distance rule") {
  const std::vector<int> gadgets = {1, 2};
  auto inst = testinst::staircase_pair(gadgets);
  CountingOracle c1(inst.m1), c2(inst.m2);

  mi::ApproxParams params;
  params.epsilon = 1.0;  // distance cap 2*ceil(2/eps)+1 = 5
  auto rep = mi::approx_intersect(c1, c2, params);

  REQUIRE(rep.phases.size() == 2);
  CHECK(rep.phases[0].stage == "greedy");
  CHECK(rep.phases[0].st_distance == 2);
  CHECK(rep.phases[0].width == testinst::staircase_greedy_size(gadgets));
  CHECK(rep.phases[1].stage == "approx");
  CHECK(rep.phases[1].st_distance == 4);
  CHECK(rep.phases[1].width == 1);
  CHECK(rep.solution_size == 4);  // optimum 5 needs the distance-6 path
  CHECK(solution_independent(rep, inst.m1, inst.m2));
  CHECK(rep.solution_size * 2 >= testinst::staircase_optimum(gadgets));
}

TEST_CASE("approx_intersect reaches the optimum when the cap never binds") {
  const std::vector<int> gadgets = {1, 2, 3, 4, 5, 6};
  auto inst = testinst::staircase_pair(gadgets);
  CountingOracle c1(inst.m1), c2(inst.m2);

  mi::ApproxParams params;
  params.epsilon = 0.25;  // cap 17 exceeds the deepest path distance 14
  auto rep = mi::approx_intersect(c1, c2, params);
  CHECK(rep.phases.size() == 1 + gadgets.size());
  CHECK(rep.solution_size == testinst::staircase_optimum(gadgets));
  CHECK(st_strictly_increasing(rep));
  for (std::size_t i = 1; i < rep.phases.size(); ++i) {
    CHECK(rep.phases[i].stage == "approx");
    CHECK(rep.phases[i].width == 1);
  }
}

TEST_CASE("approx_intersect meets the guarantee on random instances") {
  std::mt19937_64 gen(151);
  const std::vector<std::pair<int, int>> fractions = {{1, 2}, {3, 4}, {9, 10}};
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + brute::rnd_below(gen, 9);
    auto m1 = brute::sample_matroid(gen, n);
    auto m2 = brute::sample_matroid(gen, n);
    const int r = brute::max_common_size(*m1, *m2);

    const auto [num, den] = fractions[trial % fractions.size()];
    mi::ApproxParams params;
    params.epsilon = 1.0 - static_cast<double>(num) / den;

    CountingOracle c1(*m1), c2(*m2);
    auto rep = mi::approx_intersect(c1, c2, params);
    CHECK(rep.solution_size >= size_floor(r, num, den));
    CHECK(rep.solution_size <= r);
    CHECK(static_cast<int>(rep.phases.size()) <=
          static_cast<int>(std::ceil(2.0 / params.epsilon)) + 1);
    CHECK(st_strictly_increasing(rep));
    CHECK(solution_independent(rep, *m1, *m2));
    CHECK(rep.queries_total() == c1.count() + c2.count());
    CHECK(rep.solution_size == rep.solution.size());
  }
}

TEST_CASE("exact_intersect walks all four stages on the staircase") {
  const std::vector<int> gadgets = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 25};
  auto inst = testinst::staircase_pair(gadgets);
  const int greedy = testinst::staircase_greedy_size(gadgets);  // 80
  const int r = testinst::staircase_optimum(gadgets);           // 91

  CountingOracle c1(inst.m1), c2(inst.m2);
  auto rep = mi::exact_intersect(c1, c2);

  CHECK(rep.solution_size == r);
  REQUIRE(rep.r_known.has_value());
  CHECK(*rep.r_known == r);
  CHECK(rep.epsilon == doctest::Approx(std::pow(greedy, -0.25)));
  CHECK(solution_independent(rep, inst.m1, inst.m2));
  CHECK(st_strictly_increasing(rep));
  CHECK(!layers_of(inst.m1, inst.m2, rep.solution).st_reachable());

  // Stage labels appear in blocks, each at least once.
  std::vector<std::string> blocks;
  for (const auto& ph : rep.phases)
    if (blocks.empty() || blocks.back() != ph.stage) blocks.push_back(ph.stage);
  const std::vector<std::string> want = {"greedy", "approx", "cunningham",
                                         "long-path"};
  CHECK(blocks == want);

  int covered = 0;
  for (const auto& ph : rep.phases) covered += ph.width;
  CHECK(covered == r);
}

TEST_CASE("exact_intersect invokes a caller-supplied long-path finder") {
  const std::vector<int> gadgets = {1, 25};
  auto inst = testinst::staircase_pair(gadgets);

  int calls = 0;
  mi::LongPathFinder counting_finder =
      [&](CountingOracle& m1, CountingOracle& m2,
          const CommonSet& s) -> std::optional<mi::AugmentingPath> {
    ++calls;
    auto layers = mi::compute_distance_layers(m1, m2, s, m1.ground_size());
    if (!layers.st_reachable()) return std::nullopt;
    return mi::find_augmenting_path(m1, m2, s, layers);
  };

  CountingOracle c1(inst.m1), c2(inst.m2);
  auto rep = mi::exact_intersect(c1, c2, counting_finder);
  CHECK(rep.solution_size == testinst::staircase_optimum(gadgets));
  CHECK(calls >= 2);  // at least one hit plus the final miss
}

TEST_CASE("exact solvers agree with references on random instances") {
  std::mt19937_64 gen(163);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + brute::rnd_below(gen, 8);
    auto m1 = brute::sample_matroid(gen, n);
    auto m2 = brute::sample_matroid(gen, n);
    const int r = brute::max_common_size(*m1, *m2);

    CountingOracle e1(*m1), e2(*m2);
    auto exact = mi::exact_intersect(e1, e2);
    CountingOracle k1(*m1), k2(*m2);
    auto cunningham = mi::cunningham_reference(k1, k2);
    CountingOracle x1(*m1), x2(*m2);
    auto exhaustive = mi::exhaustive_max_common(x1, x2);

    CHECK(exact.solution_size == r);
    CHECK(cunningham.solution_size == r);
    CHECK(exhaustive.solution_size == r);
    CHECK(solution_independent(exact, *m1, *m2));
    CHECK(solution_independent(cunningham, *m1, *m2));
    CHECK(solution_independent(exhaustive, *m1, *m2));
    CHECK(st_strictly_increasing(exact));
    CHECK(st_strictly_increasing(cunningham));
    CHECK(!layers_of(*m1, *m2, exact.solution).st_reachable());
    CHECK(!layers_of(*m1, *m2, cunningham.solution).st_reachable());
    CHECK(exact.r_known == r);
    CHECK(cunningham.r_known == r);
    CHECK(exhaustive.r_known == r);
  }
}

TEST_CASE("exact_intersect matches a classical matching solver") {
  std::mt19937_64 gen(177);
  for (int trial = 0; trial < 10; ++trial) {
    const int num_left = 6, num_right = 6, edges = 12;
    std::vector<int> left, right;
    std::vector<std::vector<int>> adj(num_left);
    for (int e = 0; e < edges; ++e) {
      const int u = brute::rnd_below(gen, num_left);
      const int v = brute::rnd_below(gen, num_right);
      left.push_back(u);
      right.push_back(v);
      adj[u].push_back(v);
    }
    auto inst = testinst::matching_pair(num_left, num_right, left, right);
    CountingOracle c1(inst.m1), c2(inst.m2);
    auto rep = mi::exact_intersect(c1, c2);
    CHECK(rep.solution_size == brute::kuhn_matching(num_left, num_right, adj));
  }
}

TEST_CASE("exhaustive_max_common fixtures") {
  {
    mi::UniformMatroid m1(5, 2), m2(5, 3);
    CountingOracle c1(m1), c2(m2);
    CHECK(mi::exhaustive_max_common(c1, c2).solution_size == 2);
  }
  {
    std::mt19937_64 gen(191);
    auto m = brute::sample_matroid(gen, 7);
    CountingOracle c1(*m), c2(*m);
    ElementSet all(7);
    for (int v = 0; v < 7; ++v) all.add(v);
    CHECK(mi::exhaustive_max_common(c1, c2).solution_size == mi::rank(*m, all));
  }
  {
    mi::PartitionMatroid m1({0, 1, 1}, {1, 1});
    mi::PartitionMatroid m2({0, 0, 1}, {1, 1});
    CountingOracle c1(m1), c2(m2);
    auto rep = mi::exhaustive_max_common(c1, c2);
    CHECK(rep.solution_size == 2);
    CHECK(m1.independent(rep.solution));
    CHECK(m2.independent(rep.solution));
  }
  {
    mi::UniformMatroid big(21, 3);
    CountingOracle c1(big), c2(big);
    CHECK_THROWS_AS(mi::exhaustive_max_common(c1, c2), mi::ContractError);
  }
}
