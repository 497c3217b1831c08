#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mi/bench.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct GenFlags {
  mi::GenParams params;
  int count = 1;
};

void add_gen_flags(CLI::App* cmd, GenFlags& g, bool with_count) {
  cmd->add_option("--family", g.params.family, "instance family")
      ->check(CLI::IsMember(mi::known_families()));
  cmd->add_option("--seed", g.params.seed, "generator seed");
  cmd->add_option("--n", g.params.n, "element count (family dependent)");
  cmd->add_option("--left", g.params.left, "left vertex count");
  cmd->add_option("--right", g.params.right, "right vertex count");
  cmd->add_option("--edges", g.params.edges, "edge count");
  cmd->add_option("--classes1", g.params.classes1, "classes of the first matroid");
  cmd->add_option("--classes2", g.params.classes2, "classes of the second matroid");
  cmd->add_option("--max-cap", g.params.max_cap, "largest class cap");
  cmd->add_option("--vertices", g.params.vertices, "graph vertex count");
  cmd->add_option("--rows", g.params.rows, "matrix row count");
  cmd->add_option("--k1", g.params.k1, "first uniform cap");
  cmd->add_option("--k2", g.params.k2, "second uniform cap");
  if (with_count)
    cmd->add_option("--count", g.count,
                    "instances to generate (consecutive seeds)")
        ->check(CLI::PositiveNumber);
}

std::vector<mi::InstanceSpec> load_instances(const std::vector<std::string>& files,
                                             const GenFlags& g) {
  std::vector<mi::InstanceSpec> instances;
  for (const auto& file : files)
    instances.push_back(mi::parse_instance_file(file));
  if (!g.params.family.empty()) {
    mi::GenParams p = g.params;
    for (int i = 0; i < g.count; ++i) {
      p.seed = g.params.seed + static_cast<std::uint64_t>(i);
      instances.push_back(mi::generate_instance(p));
    }
  }
  if (instances.empty())
    throw std::invalid_argument("no instances: pass --in and/or --family");
  return instances;
}

// Re-derives every state invariant after each refinement op, against
// uncounted oracles so the check does not distort query counts.
struct InvariantChecker {
  InvariantChecker(const mi::IndependenceOracle& o1,
                   const mi::IndependenceOracle& o2) {
    hooks.after_op = [this, &o1, &o2](mi::RefineOp, int,
                                      const mi::LayeredState& st,
                                      const mi::CommonSet& s, std::uint64_t,
                                      std::uint64_t) {
      std::string why;
      if (!mi::check_invariants(st, s, o1, o2, &why)) {
        ++violations;
        std::cerr << "invariant violation: " << why << "\n";
      }
    };
  }

  mi::RefineHooks hooks;
  int violations = 0;
};

nlohmann::json report_json(const mi::InstanceSpec& inst,
                           const mi::RunReport& rep, bool verified,
                           double wall_ms) {
  nlohmann::json j;
  j["instance"] = inst.name;
  j["solver"] = rep.solver;
  j["n"] = rep.n;
  j["r"] = rep.r_known ? nlohmann::json(*rep.r_known) : nlohmann::json();
  j["epsilon"] = rep.epsilon;
  j["queries_m1"] = rep.queries_m1;
  j["queries_m2"] = rep.queries_m2;
  j["queries_total"] = rep.queries_total();
  j["solution_size"] = rep.solution_size;
  j["solution"] = rep.solution.to_vector();
  j["verified"] = verified;
  j["wall_ms"] = wall_ms;
  auto phases = nlohmann::json::array();
  for (const auto& ph : rep.phases)
    phases.push_back({{"stage", ph.stage},
                      {"st_distance", ph.st_distance},
                      {"ell", ph.ell},
                      {"width", ph.width},
                      {"refine_passes", ph.refine_passes},
                      {"refine_paths", ph.refine_paths},
                      {"queries_m1", ph.queries_m1},
                      {"queries_m2", ph.queries_m2},
                      {"size_after", ph.size_after}});
  j["phases"] = std::move(phases);
  return j;
}

struct SolveOpts {
  std::vector<std::string> files;
  GenFlags gen;
  std::string solver = "exact";
  double epsilon = 0.0;
  bool epsilon_set = false;
  bool debug_invariants = false;
  std::string out;
};

int cmd_solve(const SolveOpts& opt) {
  auto instances = load_instances(opt.files, opt.gen);
  if (instances.size() != 1)
    throw std::invalid_argument("solve takes exactly one instance");
  const mi::InstanceSpec& inst = instances.front();
  const mi::SolverKind kind = *mi::solver_from_name(opt.solver);
  const std::optional<double> epsilon =
      opt.epsilon_set ? std::optional<double>(opt.epsilon) : std::nullopt;

  std::unique_ptr<mi::IndependenceOracle> v1, v2;
  std::unique_ptr<InvariantChecker> checker;
  const mi::RefineHooks* hooks = nullptr;
  if (opt.debug_invariants) {
    v1 = mi::build_oracle(inst.m1);
    v2 = mi::build_oracle(inst.m2);
    checker = std::make_unique<InvariantChecker>(*v1, *v2);
    hooks = &checker->hooks;
  }

  const auto start = std::chrono::steady_clock::now();
  const mi::RunReport rep = mi::solve_instance(inst, kind, epsilon, hooks);
  const auto stop = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  auto o1 = mi::build_oracle(inst.m1);
  auto o2 = mi::build_oracle(inst.m2);
  const bool verified =
      o1->independent(rep.solution) && o2->independent(rep.solution);

  std::printf("instance %s solver %s n %d\n", inst.name.c_str(),
              rep.solver.c_str(), rep.n);
  int i = 0;
  for (const auto& ph : rep.phases)
    std::printf(
        "phase %d stage %s st %d ell %d width %d passes %d paths %d "
        "queries %llu size %d\n",
        ++i, ph.stage.c_str(), ph.st_distance, ph.ell, ph.width,
        ph.refine_passes, ph.refine_paths,
        static_cast<unsigned long long>(ph.queries_m1 + ph.queries_m2),
        ph.size_after);
  std::printf(
      "solution_size %d verified %s queries_total %llu queries_m1 %llu "
      "queries_m2 %llu wall_ms %.3f\n",
      rep.solution_size, verified ? "true" : "false",
      static_cast<unsigned long long>(rep.queries_total()),
      static_cast<unsigned long long>(rep.queries_m1),
      static_cast<unsigned long long>(rep.queries_m2), wall_ms);

  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw std::runtime_error("cannot write " + opt.out);
    out << report_json(inst, rep, verified, wall_ms).dump(2) << "\n";
  }

  if (checker && checker->violations > 0) return kExitVerification;
  return verified ? kExitOk : kExitVerification;
}

struct BenchOpts {
  std::vector<std::string> files;
  GenFlags gen;
  std::vector<std::string> solvers{"approx", "exact", "cunningham"};
  std::vector<double> epsilons;
  std::string out;
};

int cmd_bench(const BenchOpts& opt) {
  auto instances = load_instances(opt.files, opt.gen);
  std::vector<mi::SolverKind> kinds;
  for (const auto& name : opt.solvers)
    kinds.push_back(*mi::solver_from_name(name));

  const auto rows = mi::run_bench(instances, kinds, opt.epsilons);
  if (opt.out.empty()) {
    mi::write_csv(std::cout, rows);
  } else {
    std::ofstream out(opt.out);
    if (!out) throw std::runtime_error("cannot write " + opt.out);
    mi::write_csv(out, rows);
  }

  for (const auto& row : rows)
    if (!row.verified) return kExitVerification;
  return kExitOk;
}

int cmd_gen(const GenFlags& g, const std::string& out_path) {
  if (g.params.family.empty())
    throw std::invalid_argument("gen requires --family");
  const auto inst = mi::generate_instance(g.params);
  const std::string text = mi::format_instance(inst);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  return kExitOk;
}

struct VerifyOpts {
  std::string file;
  std::string solution;
  bool solution_set = false;
};

int cmd_verify(const VerifyOpts& opt) {
  const auto inst = mi::parse_instance_file(opt.file);
  auto o1 = mi::build_oracle(inst.m1);
  auto o2 = mi::build_oracle(inst.m2);

  if (opt.solution_set) {
    mi::ElementSet set(inst.n());
    std::stringstream ss(opt.solution);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0 || v >= inst.n())
        throw std::invalid_argument("bad element id '" + item + "'");
      set.add(v);
    }
    const bool ok1 = o1->independent(set);
    const bool ok2 = o2->independent(set);
    std::printf("instance %s n %d set %s size %d\n", inst.name.c_str(),
                inst.n(), set.to_string().c_str(), set.size());
    std::printf("independent_m1 %s independent_m2 %s\n", ok1 ? "true" : "false",
                ok2 ? "true" : "false");
    return ok1 && ok2 ? kExitOk : kExitVerification;
  }

  const auto exact = mi::run_one(inst, mi::SolverKind::Exact);
  const auto cunningham = mi::run_one(inst, mi::SolverKind::Cunningham);
  bool ok = exact.verified && cunningham.verified &&
            exact.solution_size == cunningham.solution_size;
  std::printf("instance %s n %d\n", inst.name.c_str(), inst.n());
  std::printf("exact %d cunningham %d", exact.solution_size,
              cunningham.solution_size);
  if (inst.n() <= 16) {
    const auto brute = mi::run_one(inst, mi::SolverKind::Exhaustive);
    ok = ok && brute.verified && brute.solution_size == exact.solution_size;
    std::printf(" exhaustive %d", brute.solution_size);
  }
  std::printf("\nagree %s\n", ok ? "true" : "false");
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid intersection solvers over independence oracles"};
  app.require_subcommand(1);

  SolveOpts solve;
  auto* solve_cmd = app.add_subcommand("solve", "run one solver on one instance");
  solve_cmd->add_option("--in", solve.files, "instance file");
  add_gen_flags(solve_cmd, solve.gen, false);
  solve_cmd->add_option("--solver", solve.solver, "solver to run")
      ->check(CLI::IsMember({"approx", "exact", "cunningham", "exhaustive"}));
  auto* eps_opt =
      solve_cmd->add_option("--epsilon", solve.epsilon,
                            "approximation parameter in (0,1], approx only");
  solve_cmd->add_flag("--debug-invariants", solve.debug_invariants,
                      "re-check state invariants after every refinement op");
  solve_cmd->add_option("--out", solve.out, "write a JSON report here");

  BenchOpts bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "sweep solvers over instances, emit CSV");
  bench_cmd->add_option("--in", bench.files, "instance files");
  add_gen_flags(bench_cmd, bench.gen, true);
  bench_cmd->add_option("--solver", bench.solvers, "solvers to sweep")
      ->check(CLI::IsMember({"approx", "exact", "cunningham", "exhaustive"}));
  bench_cmd->add_option("--epsilon", bench.epsilons,
                        "epsilon values for the approx solver");
  bench_cmd->add_option("--out", bench.out, "CSV output path (default stdout)");

  GenFlags gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  add_gen_flags(gen_cmd, gen, false);
  gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

  VerifyOpts verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check solvers on an instance, or test a given set");
  verify_cmd->add_option("--in", verify.file, "instance file")->required();
  auto* sol_opt = verify_cmd->add_option(
      "--solution", verify.solution, "comma-separated element ids to test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  solve.epsilon_set = eps_opt->count() > 0;
  verify.solution_set = sol_opt->count() > 0;

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve);
    if (bench_cmd->parsed()) return cmd_bench(bench);
    if (gen_cmd->parsed()) return cmd_gen(gen, gen_out);
    return cmd_verify(verify);
  } catch (const mi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mi::SemanticError& e) {
    std::cerr << "instance error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}
