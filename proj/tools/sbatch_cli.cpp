// Command-line front end: instance generation, frontier computation,
// exhaustive reference frontiers, differential verification, benchmarks.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbatch/sbatch.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

/// "10,20,30", "2-8" and "10-100:10" (range with step) forms, mixed freely.
std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      auto dash = item.find('-');
      if (dash == std::string::npos) {
        out.push_back(std::stoul(item));
        continue;
      }
      auto colon = item.find(':', dash);
      std::size_t lo = std::stoul(item.substr(0, dash));
      std::size_t hi = std::stoul(item.substr(dash + 1, colon - dash - 1));
      std::size_t step = colon == std::string::npos ? 1 : std::stoul(item.substr(colon + 1));
      if (step == 0 || lo > hi) throw sbatch::InputError("bad size range \"" + item + "\"");
      for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
    } catch (const std::logic_error&) {
      throw sbatch::InputError("bad size list \"" + text + "\"");
    }
  }
  if (out.empty()) throw sbatch::InputError("empty size list");
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

/// Writes to --out when given, else to stdout.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw sbatch::InputError("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicriteria (makespan, maximum cost) frontiers for serial-batch scheduling"};
  app.require_subcommand(1);

  std::string out_path;
  std::uint64_t seed = 1;

  auto* gen = app.add_subcommand("gen", "Write a seeded random instance");
  std::size_t gen_n = 10;
  std::string profile = "paper";
  std::optional<int> gen_capacity;
  gen->add_option("-n,--jobs", gen_n, "Number of jobs")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--profile", profile, "paper | small | prec | paper-prec");
  gen->add_option("--capacity", gen_capacity, "Batch capacity override (bounded profiles)");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* pareto = app.add_subcommand("pareto", "Compute the Pareto frontier of an instance");
  std::string instance_path;
  bool trace = false;
  bool reduce = false;
  pareto->add_option("instance", instance_path, "Instance file")->required();
  pareto->add_flag("--trace", trace, "Write solver events to stderr");
  pareto->add_flag("--transitive-reduction", reduce, "Reduce precedence edges before solving");
  pareto->add_option("--out", out_path, "Output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Frontier by exhaustive enumeration (small n)");
  oracle->add_option("instance", instance_path, "Instance file")->required();
  oracle->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Compare solvers against the oracle");
  std::size_t count = 1000;
  std::string verify_sizes;
  std::string variant = "bounded";
  verify->add_option("--count", count, "Number of random instances");
  verify->add_option("--sizes", verify_sizes, "Size range (default 2-8 bounded, 2-7 prec)");
  verify->add_option("--seed", seed, "Base seed");
  verify->add_option("--variant", variant, "bounded | prec")->check(CLI::IsMember({"bounded", "prec"}));

  auto* bench = app.add_subcommand("bench", "Time the frontier algorithms");
  std::string bench_sizes = "10-100:10";
  std::size_t reps = 30;
  std::string algorithms = "main1";
  bench->add_option("--sizes", bench_sizes, "Sizes, e.g. 10-100:10 or 100,200,400");
  bench->add_option("--reps", reps, "Repetitions per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Base seed");
  bench->add_option("--algorithms", algorithms, "Comma list of main1, main1_naive, main2");
  bench->add_option("--out", out_path, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen) {
      sbatch::GenOptions opt;
      opt.profile = sbatch::parse_profile(profile);
      opt.capacity = gen_capacity;
      emit(sbatch::emit_instance(sbatch::gen_random(gen_n, seed, opt)), out_path);
      return 0;
    }

    if (*pareto) {
      const auto inst = sbatch::load_instance(instance_path);
      sbatch::TraceWriter writer(std::cerr);
      sbatch::SolverObserver* obs = trace ? &writer : nullptr;
      const auto front = inst.capacity.is_bounded()
                             ? sbatch::main1(inst, obs)
                             : sbatch::main2(inst, obs, sbatch::PrecOptions{reduce});
      emit(sbatch::frontier_csv(front), out_path);
      return 0;
    }

    if (*oracle) {
      const auto inst = sbatch::load_instance(instance_path);
      emit(sbatch::frontier_csv(sbatch::oracle_pareto(inst).points), out_path);
      return 0;
    }

    if (*verify) {
      if (verify_sizes.empty()) verify_sizes = variant == "bounded" ? "2-8" : "2-7";
      const auto sizes = parse_sizes(verify_sizes);
      const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
      const auto v = variant == "bounded" ? sbatch::Variant::Bounded : sbatch::Variant::Prec;
      const auto r = sbatch::verify(count, *lo, *hi, seed, v);
      std::cout << "instances " << r.instances << "\n"
                << "passed " << r.passed << "\n"
                << "failed " << r.instances - r.passed << "\n"
                << "oracle_schedules " << r.oracle_schedules << "\n"
                << "solver_steps " << r.solver_steps << "\n"
                << "frontier_mismatches " << r.frontier_mismatches << "\n"
                << "pi_star_mismatches " << r.pi_star_mismatches << "\n"
                << "solver_mismatches " << r.solver_mismatches << "\n"
                << "rebuild_mismatches " << r.rebuild_mismatches << "\n"
                << "move_bound_violations " << r.move_bound_violations << "\n"
                << "completion_decreases " << r.completion_decreases << "\n"
                << "invalid_schedules " << r.invalid_schedules << "\n";
      if (r.first_failing_seed)
        std::cout << "first_failing_seed " << *r.first_failing_seed << " (" << r.first_failure << ")\n";
      return r.ok() ? 0 : kExitMismatch;
    }

    if (*bench) {
      auto algos = split_list(algorithms);
      for (const auto& a : algos) {
        const auto& known = sbatch::bench_algorithms();
        if (std::find(known.begin(), known.end(), a) == known.end())
          throw sbatch::InputError("unknown algorithm \"" + a + "\"");
      }
      const auto rows = sbatch::run_bench(parse_sizes(bench_sizes), reps, seed, algos);
      emit(sbatch::bench_csv(rows), out_path);
      std::cerr << sbatch::bench_summary(rows);
      return 0;
    }
  } catch (const sbatch::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const sbatch::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
