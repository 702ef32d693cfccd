#pragma once

// Wall-clock benchmark of the frontier algorithms on seeded paper-profile
// instances. Only the solver call is timed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sbatch/io.hpp"
#include "sbatch/pareto.hpp"

namespace sbatch {

struct BenchRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t repetitions = 0;
  double avg_seconds = 0;
  double max_seconds = 0;
  std::size_t points = 0;  // summed over repetitions
  std::size_t moves = 0;   // summed over repetitions
};

inline const std::vector<std::string>& bench_algorithms() {
  static const std::vector<std::string> names{"main1", "main1_naive", "main2"};
  return names;
}

/// Instance used for repetition `rep` of size n; main2 gets a precedence DAG.
inline Instance bench_instance(const std::string& algorithm, std::size_t n, std::uint64_t seed,
                               std::size_t rep) {
  GenOptions opt;
  opt.profile = algorithm == "main2" ? Profile::PaperPrec : Profile::Paper;
  return gen_random(n, seed + rep, opt);
}

inline ParetoFront run_algorithm(const std::string& algorithm, const Instance& inst) {
  if (algorithm == "main1") return main1(inst);
  if (algorithm == "main1_naive") return main1_naive(inst);
  if (algorithm == "main2") return main2(inst);
  throw InputError("unknown algorithm \"" + algorithm + "\"");
}

inline BenchRecord bench_one(const std::string& algorithm, std::size_t n, std::size_t reps,
                             std::uint64_t seed) {
  if (reps < 1) throw InputError("repetitions must be >= 1");
  BenchRecord rec{algorithm, n, reps, 0, 0, 0, 0};
  double total = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto inst = bench_instance(algorithm, n, seed, r);
    const auto t0 = std::chrono::steady_clock::now();
    const auto front = run_algorithm(algorithm, inst);
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    total += secs;
    rec.max_seconds = std::max(rec.max_seconds, secs);
    rec.points += front.points.size();
    rec.moves += front.moves;
  }
  rec.avg_seconds = total / static_cast<double>(reps);
  // the division can overshoot max by an ulp when all runs tie
  rec.avg_seconds = std::min(rec.avg_seconds, rec.max_seconds);
  return rec;
}

/// Runs every (algorithm, n) pair sequentially; rows sorted by (algorithm, n).
inline std::vector<BenchRecord> run_bench(std::vector<std::size_t> sizes, std::size_t reps,
                                          std::uint64_t seed, std::vector<std::string> algorithms) {
  std::sort(algorithms.begin(), algorithms.end());
  algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<BenchRecord> out;
  for (const auto& a : algorithms)
    for (auto n : sizes) out.push_back(bench_one(a, n, reps, seed));
  return out;
}

inline std::string bench_csv(const std::vector<BenchRecord>& rows) {
  std::ostringstream os;
  os << "algorithm,n,avg_seconds,max_seconds,points,moves\n";
  os.precision(6);
  os << std::scientific;
  for (const auto& r : rows)
    os << r.algorithm << ',' << r.n << ',' << r.avg_seconds << ',' << r.max_seconds << ','
       << r.points << ',' << r.moves << '\n';
  return os.str();
}

/// Least-squares slope of log(avg_seconds) against log(n).
inline double loglog_slope(const std::vector<BenchRecord>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double m = 0;
  for (const auto& r : rows) {
    if (r.avg_seconds <= 0 || r.n == 0) continue;
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.avg_seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    m += 1;
  }
  const double denom = m * sxx - sx * sx;
  return m < 2 || denom == 0 ? 0.0 : (m * sxy - sx * sy) / denom;
}

/// One line per algorithm: "<algorithm>: log-log slope <s> over n in [a, b]".
inline std::string bench_summary(const std::vector<BenchRecord>& rows) {
  std::map<std::string, std::vector<BenchRecord>> by_algo;
  for (const auto& r : rows) by_algo[r.algorithm].push_back(r);
  std::ostringstream os;
  os.precision(3);
  for (const auto& [name, recs] : by_algo) {
    os << name << ": log-log slope " << std::fixed << loglog_slope(recs) << " over n in ["
       << recs.front().n << ", " << recs.back().n << "]\n";
  }
  return os.str();
}

}  // namespace sbatch
