#pragma once

// Epsilon-constraint frontier enumeration. Each round asks the solver for a
// minimum-makespan schedule whose maximum cost is strictly below the cost of
// the previous answer; a schedule becomes a frontier point when the next
// answer needs a longer makespan, or when no further answer exists.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sbatch/bounded_solver.hpp"
#include "sbatch/model.hpp"
#include "sbatch/prec_solver.hpp"
#include "sbatch/trace.hpp"

namespace sbatch {

struct ParetoPoint {
  Time makespan = 0;
  Cost max_cost = 0;
  Schedule schedule;
};

struct ParetoFront {
  std::vector<ParetoPoint> points;  // makespan ascending, max cost descending
  Schedule pi_star;                 // minimum maximum cost
  std::size_t rounds = 0;           // solver calls, the final infeasible one included
  std::size_t moves = 0;            // candidate-set relocations over the run

  std::vector<Objectives> objective_pairs() const {
    std::vector<Objectives> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back({p.makespan, p.max_cost});
    return out;
  }
};

/// Drives `solve(Threshold) -> optional<Schedule>` until it reports infeasible.
template <class SolveFn>
ParetoFront epsilon_constraint(const Instance& inst, SolveFn&& solve) {
  ParetoFront front;
  std::optional<Schedule> prev;
  Objectives prev_obj;
  Threshold y = Threshold::unbounded();
  for (;;) {
    auto next = solve(y);
    ++front.rounds;
    if (!next) break;
    const auto obj = objectives(*next, inst);
    if (prev && prev_obj.makespan < obj.makespan)
      front.points.push_back({prev_obj.makespan, prev_obj.max_cost, std::move(*prev)});
    prev = std::move(next);
    prev_obj = obj;
    y = Threshold::below(obj.max_cost);
  }
  if (!prev) throw InputError("instance admits no schedule");
  front.pi_star = *prev;
  front.points.push_back({prev_obj.makespan, prev_obj.max_cost, std::move(*prev)});
  return front;
}

/// Bounded model without precedence, warm-started incremental solver.
inline ParetoFront main1(const Instance& inst, SolverObserver* obs = nullptr) {
  if (!inst.precedence.empty())
    throw InputError("the bounded frontier solver does not support precedence constraints");
  BoundedSolver solver(inst, obs);
  auto front = epsilon_constraint(inst, [&](Threshold y) { return solver.solve(y); });
  front.moves = solver.csf().move_count();
  return front;
}

/// Baseline: every round restarts the reference solver from the initial family.
inline ParetoFront main1_naive(const Instance& inst) {
  if (!inst.precedence.empty())
    throw InputError("the bounded frontier solver does not support precedence constraints");
  std::size_t moves = 0;
  auto front = epsilon_constraint(inst, [&](Threshold y) {
    auto csf = CandidateSetFamily::initial(inst);
    auto s = aux1(inst, csf, y);
    moves += csf.move_count();
    return s;
  });
  front.moves = moves;
  return front;
}

struct PrecOptions {
  bool transitive_reduction = false;
};

/// Unbounded capacity with strict precedence.
inline ParetoFront main2(const Instance& inst, SolverObserver* obs = nullptr,
                         PrecOptions opts = {}) {
  if (inst.capacity.is_bounded() && inst.batch_limit() < inst.size())
    throw InputError("the precedence frontier solver needs unbounded capacity");
  PrecGraph graph(inst);
  if (opts.transitive_reduction) graph = graph.transitive_reduction();
  PrecSolver solver(inst, graph, obs);
  auto front = epsilon_constraint(inst, [&](Threshold y) { return solver.solve(y); });
  front.moves = solver.csf().move_count();
  return front;
}

/// main1 for bounded instances, main2 otherwise.
inline ParetoFront solve_pareto(const Instance& inst, SolverObserver* obs = nullptr) {
  return inst.capacity.is_bounded() ? main1(inst, obs) : main2(inst, obs);
}

/// Nonempty batches earliest first, ids joined by '.', batches by ';'.
inline std::string encode_batches(const Schedule& s) {
  std::string out;
  bool first_batch = true;
  for (const auto& batch : s.canonical().slots) {
    if (batch.empty()) continue;
    if (!first_batch) out += ';';
    first_batch = false;
    for (std::size_t k = 0; k < batch.size(); ++k) {
      if (k) out += '.';
      out += std::to_string(batch[k]);
    }
  }
  return out;
}

inline std::string frontier_csv(const std::vector<ParetoPoint>& points) {
  std::ostringstream os;
  os << "c_max,f_max,batches\n";
  for (const auto& p : points) os << p.makespan << ',' << p.max_cost << ',' << encode_batches(p.schedule) << '\n';
  return os.str();
}

inline std::string frontier_csv(const ParetoFront& front) { return frontier_csv(front.points); }

}  // namespace sbatch
