// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sbatch/sbatch.hpp"

using namespace sbatch;

namespace {

constexpr std::uint64_t kBoundedSeed = 20240601;
constexpr std::uint64_t kPrecSeed = 20240602;
constexpr std::uint64_t kBenchSeed = 77;

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title << " (" << detail
            << ")" << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string first_failure(const VerifyReport& r) {
  if (!r.first_failing_seed) return "";
  return "; first failure at seed " + std::to_string(*r.first_failing_seed) + ": " + r.first_failure;
}

bool same_pairs(const std::vector<Objectives>& got, const std::vector<Objectives>& want,
                std::ostream& why, const char* name) {
  if (got == want) return true;
  why << name << " mismatch; ";
  return false;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  const auto bounded = verify(1000, 2, 8, kBoundedSeed, Variant::Bounded);
  const double bounded_secs = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto prec = verify(500, 2, 7, kPrecSeed, Variant::Prec);
  const double prec_secs = seconds_since(t0);

  {
    std::ostringstream d;
    d << bounded.instances << " instances, " << bounded.frontier_mismatches << " frontier and "
      << bounded.pi_star_mismatches << " pi_star mismatches, " << bounded_secs << " s"
      << first_failure(bounded);
    report(1,
           bounded.instances >= 1000 && bounded.frontier_mismatches == 0 &&
               bounded.pi_star_mismatches == 0 && bounded_secs < 120,
           "bounded frontier equals oracle", d.str());
  }
  {
    std::ostringstream d;
    d << prec.instances << " instances, " << prec.frontier_mismatches << " frontier and "
      << prec.pi_star_mismatches << " pi_star mismatches, " << prec_secs << " s"
      << first_failure(prec);
    report(2,
           prec.instances >= 500 && prec.frontier_mismatches == 0 && prec.pi_star_mismatches == 0 &&
               prec_secs < 120,
           "precedence frontier equals oracle", d.str());
  }
  {
    std::ostringstream d;
    d << bounded.solver_steps << " threshold steps, " << bounded.solver_mismatches
      << " solver mismatches, " << bounded.rebuild_mismatches << " rebuild mismatches";
    report(3, bounded.solver_steps > 0 && bounded.solver_mismatches == 0 &&
                  bounded.rebuild_mismatches == 0,
           "incremental solver equals reference solver", d.str());
  }
  {
    std::ostringstream why;
    bool ok = true;
    try {
      const auto a = load_instance(SBATCH_DATA_DIR "/inst_a.json");
      const auto b = load_instance(SBATCH_DATA_DIR "/inst_b.json");
      const auto c = load_instance(SBATCH_DATA_DIR "/inst_c.json");
      const std::vector<Objectives> fa{{6, 3}, {8, 0}}, fb{{10, 1}}, fc{{6, 0}};
      ok &= same_pairs(main1(a).objective_pairs(), fa, why, "INST-A");
      ok &= same_pairs(main1(b).objective_pairs(), fb, why, "INST-B");
      ok &= same_pairs(main2(c).objective_pairs(), fc, why, "INST-C");
      ok &= same_pairs(oracle_pareto(a).objective_pairs(), fa, why, "INST-A oracle");
      ok &= same_pairs(oracle_pareto(b).objective_pairs(), fb, why, "INST-B oracle");
      ok &= same_pairs(oracle_pareto(c).objective_pairs(), fc, why, "INST-C oracle");
    } catch (const std::exception& e) {
      ok = false;
      why << e.what();
    }
    report(4, ok, "worked instances", ok ? "3 instances exact" : why.str());
  }
  {
    std::ostringstream d;
    d << bounded.move_bound_violations + prec.move_bound_violations << " runs over n(n-1)";
    report(5, bounded.move_bound_violations == 0 && prec.move_bound_violations == 0,
           "move count bound", d.str());
  }
  {
    const auto decreases = bounded.completion_decreases + prec.completion_decreases;
    const auto order = bounded.frontier_order_violations + prec.frontier_order_violations;
    const auto invalid = bounded.invalid_schedules + prec.invalid_schedules;
    std::ostringstream d;
    d << decreases << " completion decreases, " << order << " order violations, " << invalid
      << " invalid schedules";
    report(6, decreases == 0 && order == 0 && invalid == 0, "monotonicity invariants", d.str());
  }
  {
    std::ostringstream d;
    bool ok = true;
    const auto at100 = bench_one("main1", 100, 30, kBenchSeed);
    d << "n=100 avg " << at100.avg_seconds << " s";
    ok &= at100.avg_seconds < 1.0;

    const std::vector<std::size_t> sizes{100, 200, 400, 800};
    const auto rows = run_bench(sizes, 5, kBenchSeed, {"main1", "main1_naive"});
    std::vector<BenchRecord> fast, naive;
    for (const auto& r : rows) (r.algorithm == "main1" ? fast : naive).push_back(r);
    const double slope = loglog_slope(fast);
    d << ", slope " << slope;
    ok &= slope <= 3.3;

    for (std::size_t k = 0; k < sizes.size(); ++k) {
      if (sizes[k] < 400) continue;
      d << ", n=" << sizes[k] << " main1 " << fast[k].avg_seconds << " s vs naive "
        << naive[k].avg_seconds << " s";
      ok &= fast[k].avg_seconds <= naive[k].avg_seconds;
    }

    std::size_t differ = 0;
    for (auto n : sizes)
      for (std::size_t rep = 0; rep < 5; ++rep) {
        const auto inst = bench_instance("main1", n, kBenchSeed, rep);
        if (main1(inst).objective_pairs() != main1_naive(inst).objective_pairs()) ++differ;
      }
    d << ", " << differ << " frontier differences vs naive";
    ok &= differ == 0;
    report(7, ok, "scaling trend", d.str());
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
