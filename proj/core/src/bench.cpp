#include "mi/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

namespace mi {

std::optional<SolverKind> solver_from_name(const std::string& name) {
  if (name == "approx") return SolverKind::Approx;
  if (name == "exact") return SolverKind::Exact;
  if (name == "cunningham") return SolverKind::Cunningham;
  if (name == "exhaustive") return SolverKind::Exhaustive;
  return std::nullopt;
}

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Approx:
      return "approx";
    case SolverKind::Exact:
      return "exact";
    case SolverKind::Cunningham:
      return "cunningham";
    case SolverKind::Exhaustive:
      return "exhaustive";
  }
  return "unknown";
}

std::string csv_header() {
  return "instance,solver,n,r,epsilon,queries_total,queries_m1,queries_m2,"
         "solution_size,verified,wall_ms";
}

namespace {

std::string fmt_double(double value, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, value);
  return buf;
}

}  // namespace

std::string csv_row(const BenchRecord& rec) {
  std::string row = rec.instance;
  row += ',';
  row += rec.solver;
  row += ',';
  row += std::to_string(rec.n);
  row += ',';
  if (rec.r) row += std::to_string(*rec.r);
  row += ',';
  if (rec.epsilon) row += fmt_double(*rec.epsilon, "%.6g");
  row += ',';
  row += std::to_string(rec.queries_total);
  row += ',';
  row += std::to_string(rec.queries_m1);
  row += ',';
  row += std::to_string(rec.queries_m2);
  row += ',';
  row += std::to_string(rec.solution_size);
  row += ',';
  row += rec.verified ? "true" : "false";
  row += ',';
  row += fmt_double(rec.wall_ms, "%.3f");
  return row;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << csv_header() << '\n';
  for (const auto& rec : records) out << csv_row(rec) << '\n';
}

RunReport solve_instance(const InstanceSpec& inst, SolverKind solver,
                         std::optional<double> epsilon,
                         const RefineHooks* hooks) {
  auto o1 = build_oracle(inst.m1);
  auto o2 = build_oracle(inst.m2);
  CountingOracle c1(*o1), c2(*o2);
  switch (solver) {
    case SolverKind::Approx: {
      ApproxParams params;
      if (epsilon) params.epsilon = *epsilon;
      return approx_intersect(c1, c2, params, hooks);
    }
    case SolverKind::Exact:
      return exact_intersect(c1, c2, {}, hooks);
    case SolverKind::Cunningham:
      return cunningham_reference(c1, c2, hooks);
    case SolverKind::Exhaustive:
      return exhaustive_max_common(c1, c2);
  }
  throw ContractError("solve_instance: unknown solver kind");
}

BenchRecord run_one(const InstanceSpec& inst, SolverKind solver,
                    std::optional<double> epsilon, std::optional<int> r_known,
                    const RefineHooks* hooks) {
  const auto start = std::chrono::steady_clock::now();
  const RunReport rep = solve_instance(inst, solver, epsilon, hooks);
  const auto stop = std::chrono::steady_clock::now();

  auto o1 = build_oracle(inst.m1);
  auto o2 = build_oracle(inst.m2);

  BenchRecord rec;
  rec.instance = inst.name;
  rec.solver = to_string(solver);
  rec.n = rep.n;
  rec.r = r_known ? r_known : rep.r_known;
  if (solver == SolverKind::Approx) rec.epsilon = rep.epsilon;
  rec.queries_m1 = rep.queries_m1;
  rec.queries_m2 = rep.queries_m2;
  rec.queries_total = rep.queries_total();
  rec.solution_size = rep.solution_size;
  // Verification never trusts the solver: two fresh uncounted queries.
  rec.verified =
      o1->independent(rep.solution) && o2->independent(rep.solution);
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return rec;
}

std::vector<BenchRecord> run_bench(const std::vector<InstanceSpec>& instances,
                                   const std::vector<SolverKind>& solvers,
                                   const std::vector<double>& epsilons) {
  std::vector<BenchRecord> rows;
  for (const auto& inst : instances) {
    std::optional<int> r_ref;
    if (inst.n() <= 16) {
      auto o1 = build_oracle(inst.m1);
      auto o2 = build_oracle(inst.m2);
      CountingOracle c1(*o1), c2(*o2);
      r_ref = exhaustive_max_common(c1, c2).solution_size;
    }

    const std::size_t first = rows.size();
    std::optional<int> exact_r;
    for (SolverKind solver : solvers) {
      if (solver == SolverKind::Approx) {
        if (epsilons.empty()) {
          rows.push_back(run_one(inst, solver, std::nullopt, r_ref));
        } else {
          for (double eps : epsilons)
            rows.push_back(run_one(inst, solver, eps, r_ref));
        }
      } else {
        rows.push_back(run_one(inst, solver, std::nullopt, r_ref));
        if (solver == SolverKind::Exact)
          exact_r = rows.back().solution_size;
      }
    }
    if (!r_ref && exact_r)
      for (std::size_t i = first; i < rows.size(); ++i)
        if (!rows[i].r) rows[i].r = exact_r;
  }
  return rows;
}

}  // namespace mi
