#pragma once

#include <iosfwd>
#include <optional>

#include "mi/instance.hpp"
#include "mi/solvers.hpp"

namespace mi {

enum class SolverKind { Approx, Exact, Cunningham, Exhaustive };

std::optional<SolverKind> solver_from_name(const std::string& name);
std::string to_string(SolverKind kind);

/// One CSV row. verified is recomputed from the oracles after the solve
/// (uncounted); wall_ms is the only non-deterministic column.
struct BenchRecord {
  std::string instance;
  std::string solver;
  int n = 0;
  std::optional<int> r;
  std::optional<double> epsilon;
  std::uint64_t queries_total = 0;
  std::uint64_t queries_m1 = 0;
  std::uint64_t queries_m2 = 0;
  int solution_size = 0;
  bool verified = false;
  double wall_ms = 0.0;
};

std::string csv_header();
std::string csv_row(const BenchRecord& rec);
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Runs one solver on one instance and returns the full phase trace.
/// epsilon applies to Approx only.
RunReport solve_instance(const InstanceSpec& inst, SolverKind solver,
                         std::optional<double> epsilon = {},
                         const RefineHooks* hooks = nullptr);

/// Runs one solver on one instance. epsilon applies to Approx only; r_known
/// fills the r column when the caller has the reference value.
BenchRecord run_one(const InstanceSpec& inst, SolverKind solver,
                    std::optional<double> epsilon = {},
                    std::optional<int> r_known = {},
                    const RefineHooks* hooks = nullptr);

/// Full sweep in deterministic order: instances outermost, then solvers; the
/// approx solver gets one row per epsilon. The r column is filled from a
/// reference solve for instances with n <= 16, else from the exact solver's
/// row when present.
std::vector<BenchRecord> run_bench(const std::vector<InstanceSpec>& instances,
                                   const std::vector<SolverKind>& solvers,
                                   const std::vector<double>& epsilons);

}  // namespace mi
