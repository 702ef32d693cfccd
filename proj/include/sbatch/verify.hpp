#pragma once

// Differential verification of the frontier solvers against exhaustive
// enumeration on seeded random instances.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sbatch/bounded_solver.hpp"
#include "sbatch/io.hpp"
#include "sbatch/oracle.hpp"
#include "sbatch/pareto.hpp"
#include "sbatch/prec_solver.hpp"

namespace sbatch {

enum class Variant { Bounded, Prec };

/// Records every tentative-schedule timetable and flags any slot whose
/// completion time went down relative to the previous one.
class CompletionMonitor : public SolverObserver {
 public:
  void on_timetable(const Schedule& s) override {
    if (!last_.empty())
      for (std::size_t i = 0; i < s.completion.size(); ++i)
        if (s.completion[i] < last_[i]) ++decreases_;
    last_ = s.completion;
    ++timetables_;
  }
  std::size_t decreases() const { return decreases_; }
  std::size_t timetables() const { return timetables_; }

 private:
  std::vector<Time> last_;
  std::size_t decreases_ = 0;
  std::size_t timetables_ = 0;
};

struct VerifyReport {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t oracle_schedules = 0;
  std::size_t solver_steps = 0;

  std::size_t frontier_mismatches = 0;   // frontier pairs differ from the oracle
  std::size_t pi_star_mismatches = 0;    // min-max-cost schedule is not optimal
  std::size_t solver_mismatches = 0;     // incremental vs reference solver per threshold
  std::size_t rebuild_mismatches = 0;    // incremental schedule != batches rebuilt from family
  std::size_t move_bound_violations = 0; // relocations > n(n-1)
  std::size_t completion_decreases = 0;  // a slot's completion time went down
  std::size_t frontier_order_violations = 0;
  std::size_t invalid_schedules = 0;

  std::optional<std::uint64_t> first_failing_seed;
  std::string first_failure;

  bool ok() const { return passed == instances; }
};

/// Seed and size of the k-th instance of a verification run.
struct InstancePlan {
  std::uint64_t seed;
  std::size_t n;
};

inline InstancePlan plan_instance(std::uint64_t base_seed, std::size_t k, std::size_t n_min,
                                  std::size_t n_max) {
  SplitMix64 rng(base_seed + k);
  InstancePlan plan;
  plan.n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(n_min),
                                                static_cast<std::int64_t>(n_max)));
  plan.seed = rng.next();
  return plan;
}

inline Instance planned_instance(const InstancePlan& plan, Variant v) {
  GenOptions opt;
  opt.profile = v == Variant::Bounded ? Profile::Small : Profile::Prec;
  return gen_random(plan.n, plan.seed, opt);
}

namespace detail {

/// Replays the threshold sequence of the bounded frontier run, comparing the
/// warm-started solver with a fresh reference solve on the same family.
inline void check_bounded_steps(const Instance& inst, VerifyReport& r, std::ostream& why) {
  BoundedSolver solver(inst);
  Threshold y = Threshold::unbounded();
  for (;;) {
    auto entry = solver.csf();
    auto incremental = solver.solve(y);
    auto reference = aux1(inst, entry, y);
    ++r.solver_steps;
    if (incremental.has_value() != reference.has_value()) {
      ++r.solver_mismatches;
      why << "feasibility differs at threshold step " << r.solver_steps << "; ";
      return;
    }
    if (!incremental) return;
    if (objectives(*incremental, inst) != objectives(*reference, inst)) {
      ++r.solver_mismatches;
      why << "objectives differ between incremental and reference solver; ";
    }
    auto rebuilt = form_batches(solver.csf(), inst);
    if (!rebuilt || !rebuilt->same_batches(*incremental)) {
      ++r.rebuild_mismatches;
      why << "incremental schedule differs from rebuild of its family; ";
    }
    y = Threshold::below(objectives(*incremental, inst).max_cost);
  }
}

/// Warm-started precedence solver vs a fresh solver per threshold.
inline void check_prec_steps(const Instance& inst, VerifyReport& r, std::ostream& why) {
  PrecGraph g(inst);
  PrecSolver warm(inst, g);
  Threshold y = Threshold::unbounded();
  for (;;) {
    PrecSolver fresh(inst, g);
    auto a = warm.solve(y);
    auto b = fresh.solve(y);
    ++r.solver_steps;
    if (a.has_value() != b.has_value() ||
        (a && objectives(*a, inst) != objectives(*b, inst))) {
      ++r.solver_mismatches;
      why << "warm and fresh precedence solves differ; ";
      return;
    }
    if (!a) return;
    y = Threshold::below(objectives(*a, inst).max_cost);
  }
}

}  // namespace detail

/// Checks one instance; returns an empty string when every check passes.
inline std::string verify_instance(const Instance& inst, Variant v, VerifyReport& r) {
  std::ostringstream why;
  const std::size_t n = inst.size();

  CompletionMonitor monitor;
  const auto front = v == Variant::Bounded ? main1(inst, &monitor) : main2(inst, &monitor);
  const auto oracle = oracle_pareto(inst);
  r.oracle_schedules += oracle.schedules;

  if (front.objective_pairs() != oracle.objective_pairs()) {
    ++r.frontier_mismatches;
    why << "frontier differs from oracle; ";
  }
  if (objectives(front.pi_star, inst).max_cost != oracle.min_max_cost) {
    ++r.pi_star_mismatches;
    why << "pi_star is not cost-optimal; ";
  }
  if (front.moves > n * (n - 1)) {
    ++r.move_bound_violations;
    why << "move count " << front.moves << " exceeds n(n-1); ";
  }
  if (monitor.decreases() > 0) {
    r.completion_decreases += monitor.decreases();
    why << "slot completion time decreased; ";
  }
  for (std::size_t k = 0; k < front.points.size(); ++k) {
    const auto& p = front.points[k];
    if (!validate(p.schedule, inst).empty() ||
        objectives(p.schedule, inst) != Objectives{p.makespan, p.max_cost}) {
      ++r.invalid_schedules;
      why << "frontier schedule invalid or misreported; ";
    }
    if (k > 0 && !(front.points[k - 1].makespan < p.makespan &&
                   front.points[k - 1].max_cost > p.max_cost)) {
      ++r.frontier_order_violations;
      why << "frontier not strictly monotone; ";
    }
  }
  if (!validate(front.pi_star, inst).empty()) {
    ++r.invalid_schedules;
    why << "pi_star invalid; ";
  }

  if (v == Variant::Bounded)
    detail::check_bounded_steps(inst, r, why);
  else
    detail::check_prec_steps(inst, r, why);
  return why.str();
}

inline VerifyReport verify(std::size_t count, std::size_t n_min, std::size_t n_max,
                           std::uint64_t seed, Variant v) {
  VerifyReport r;
  for (std::size_t k = 0; k < count; ++k) {
    const auto plan = plan_instance(seed, k, n_min, n_max);
    const auto inst = planned_instance(plan, v);
    ++r.instances;
    auto failure = verify_instance(inst, v, r);
    if (failure.empty()) {
      ++r.passed;
    } else if (!r.first_failing_seed) {
      r.first_failing_seed = seed + k;
      r.first_failure = failure;
    }
  }
  return r;
}

}  // namespace sbatch
