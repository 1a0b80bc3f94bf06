#include "eptas/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "eptas/baseline.hpp"
#include "eptas/bench.hpp"
#include "eptas/errors.hpp"
#include "eptas/instance.hpp"
#include "eptas/makespan_eptas.hpp"
#include "eptas/oracle.hpp"
#include "eptas/santa_eptas.hpp"

namespace eptas::cli {

namespace {

constexpr int kUsage = 1;
constexpr int kInfeasible = 2;
constexpr int kBudget = 3;

struct SolveOptions {
  std::string instance;
  std::string epsilon = "1/4";
  std::string out;
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t config_limit = EptasParams{}.config_limit;
};

void add_solve_flags(CLI::App* cmd, SolveOptions& o) {
  cmd->add_option("--instance", o.instance, "instance file")->required();
  cmd->add_option("--epsilon", o.epsilon, "accuracy, a rational in (0, 1)");
  cmd->add_option("--out", o.out, "write the schedule here");
  cmd->add_option("--node-budget", o.node_budget, "branch-and-bound nodes per MILP");
  cmd->add_option("--config-limit", o.config_limit, "configurations per type");
}

EptasParams make_params(const SolveOptions& o) {
  EptasParams params;
  const auto eps = parse_rational(o.epsilon);
  if (!eps) throw CLI::ValidationError("--epsilon", "not a rational: " + o.epsilon);
  params.epsilon = *eps;
  params.node_budget = o.node_budget;
  params.config_limit = o.config_limit;
  check_params(params);
  return params;
}

void maybe_write(const std::string& path, const Schedule& sched) {
  if (!path.empty()) write_text_file(path, serialize_schedule(sched));
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic schedulers for unrelated machines with few machine types"};
  app.require_subcommand(1);

  SolveOptions solve_opts, santa_opts;
  auto* solve = app.add_subcommand("solve", "minimise the makespan");
  add_solve_flags(solve, solve_opts);
  auto* santa = app.add_subcommand("santa", "maximise the minimum load");
  add_solve_flags(santa, santa_opts);

  std::string base_algo, base_instance, base_out;
  auto* baseline = app.add_subcommand("baseline", "reference makespan heuristics");
  baseline->add_option("--algo", base_algo)->required()->check(CLI::IsMember({"greedy", "lp2"}));
  baseline->add_option("--instance", base_instance)->required();
  baseline->add_option("--out", base_out);

  std::string oracle_instance, oracle_objective, oracle_out;
  auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
  oracle->add_option("--instance", oracle_instance)->required();
  oracle->add_option("--objective", oracle_objective)
      ->required()
      ->check(CLI::IsMember({"makespan", "minload"}));
  oracle->add_option("--out", oracle_out);

  int gen_types = 0, gen_jobs = 0;
  std::vector<int> gen_mults;
  std::uint64_t gen_pmax = 0, gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "random instance");
  gen->add_option("--types", gen_types)->required();
  gen->add_option("--jobs", gen_jobs)->required();
  gen->add_option("--mults", gen_mults)->required()->delimiter(',');
  gen->add_option("--pmax", gen_pmax)->required();
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--out", gen_out)->required();

  std::string verify_instance, verify_schedule, verify_objective;
  auto* verify = app.add_subcommand("verify", "check a schedule and print its objective");
  verify->add_option("--instance", verify_instance)->required();
  verify->add_option("--schedule", verify_schedule)->required();
  verify->add_option("--objective", verify_objective)
      ->required()
      ->check(CLI::IsMember({"makespan", "minload"}));

  std::string bench_suite, bench_out;
  bool bench_no_timing = false;
  auto* bench = app.add_subcommand("bench", "ratio and runtime table");
  bench->add_option("--suite", bench_suite)->required();
  bench->add_option("--out", bench_out)->required();
  bench->add_flag("--no-timing", bench_no_timing, "write '-' instead of wall times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (solve->parsed()) {
      const auto params = make_params(solve_opts);
      const auto result = solve_makespan(read_instance_file(solve_opts.instance), params);
      maybe_write(solve_opts.out, result.schedule);
      out << to_string(result.makespan) << '\n';
    } else if (santa->parsed()) {
      const auto params = make_params(santa_opts);
      const auto result = solve_santa(read_instance_file(santa_opts.instance), params);
      maybe_write(santa_opts.out, result.schedule);
      out << to_string(result.min_load) << '\n';
    } else if (baseline->parsed()) {
      const Instance inst = read_instance_file(base_instance);
      const Schedule sched = base_algo == "greedy" ? greedy_bound(inst).schedule : lst_two_approx(inst);
      maybe_write(base_out, sched);
      out << to_string(inst.num_jobs() == 0 ? Rational(0) : evaluate_makespan(inst, sched)) << '\n';
    } else if (oracle->parsed()) {
      const Instance inst = read_instance_file(oracle_instance);
      const auto result = oracle_objective == "makespan" ? brute_force_makespan(inst)
                                                         : brute_force_min_load(inst);
      maybe_write(oracle_out, result.witness);
      out << to_string(result.value) << '\n';
    } else if (gen->parsed()) {
      const Instance inst = generate_instance(gen_types, gen_jobs, gen_mults, gen_pmax, gen_seed);
      write_text_file(gen_out, serialize_instance(inst));
    } else if (verify->parsed()) {
      const Instance inst = read_instance_file(verify_instance);
      const Schedule sched = read_schedule_file(verify_schedule);
      validate_schedule(inst, sched);
      const Rational value = verify_objective == "makespan"
                                 ? (inst.num_jobs() == 0 ? Rational(0) : evaluate_makespan(inst, sched))
                                 : evaluate_min_load(inst, sched);
      out << to_string(value) << '\n';
    } else if (bench->parsed()) {
      const BenchSuite suite = parse_bench_suite(read_all(bench_suite));
      std::ofstream csv(bench_out, std::ios::binary);
      if (!csv) throw Error("cannot open " + bench_out);
      run_bench(suite, csv, {.timing = !bench_no_timing});
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Unschedulable& e) {
    err << "no schedule: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}

}  // namespace eptas::cli
