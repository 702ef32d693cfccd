#pragma once

// Minimum-makespan scheduling for the bounded-capacity model subject to a
// candidate set family and a strict threshold on every job's cost.
//
//   form_batches  greedy backward batch formation (largest keys last)
//   aux1          reference solver: rebuild from the family after every pass
//   BoundedSolver incremental solver that repairs the schedule in place and
//                 can be warm-started with a tighter threshold

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "sbatch/csf.hpp"
#include "sbatch/heap.hpp"
#include "sbatch/model.hpp"
#include "sbatch/trace.hpp"

namespace sbatch {

/// Fills slots from the last to the first, each with the largest-key jobs
/// still available from components at or above the slot. Returns nullopt
/// when a slot would stay empty while a lower component still has jobs.
/// The returned schedule is timetabled; jobs inside a slot are in key order.
inline std::optional<Schedule> form_batches(const CandidateSetFamily& csf, const Instance& inst) {
  const std::size_t n = csf.size();
  const std::size_t b = inst.batch_limit();
  const auto less = csf.order();

  Schedule s;
  s.slots.assign(n, {});
  std::vector<JobId> pool;
  pool.reserve(n);
  std::size_t remaining = n;
  for (std::size_t i = n; i-- > 0;) {
    for (JobId j : csf.component(i)) heap::insert(pool, j, less);
    const std::size_t take = std::min(b, pool.size());
    if (take == 0) {
      if (remaining > 0) return std::nullopt;
      continue;
    }
    auto& batch = s.slots[i];
    batch.reserve(take);
    for (std::size_t t = 0; t < take; ++t) batch.push_back(heap::extract_max(pool, less));
    remaining -= take;
  }
  if (!pool.empty()) return std::nullopt;
  timetable(s, inst);
  return s;
}

namespace detail {

/// Largest slot index k < i whose completion time admits job j, if any.
/// Completion times are non-decreasing in the slot index, so the downward
/// scan stops at the first hit.
inline std::optional<std::size_t> latest_admissible_slot(const Instance& inst, const Schedule& s,
                                                         JobId j, std::size_t i, Threshold y) {
  for (std::size_t k = i; k-- > 0;)
    if (y.admits(inst.cost(j, s.completion[k]))) return k;
  return std::nullopt;
}

}  // namespace detail

/// Reference solver. Adjusts `csf` in place; on success returns a schedule
/// with every cost below `y` and minimum makespan among the schedules that
/// satisfy the family at entry.
inline std::optional<Schedule> aux1(const Instance& inst, CandidateSetFamily& csf, Threshold y,
                                    SolverObserver* obs = nullptr) {
  if (!obs) obs = &null_observer();
  const std::size_t n = csf.size();
  for (;;) {
    auto sched = form_batches(csf, inst);
    if (!sched) return std::nullopt;
    obs->on_timetable(*sched);

    bool adjusted = false;
    for (std::size_t i = n; i-- > 0;) {
      for (JobId j : sched->slots[i]) {
        if (y.admits(inst.cost(j, sched->completion[i]))) continue;
        auto k = detail::latest_admissible_slot(inst, *sched, j, i, y);
        if (!k) return std::nullopt;
        obs->on_move(j, csf.ordinal(j), *k, 0);
        csf.move(j, *k);
        adjusted = true;
      }
    }
    if (!adjusted) return sched;
    if (!csf.prefix_capacity_ok(inst.batch_limit())) return std::nullopt;
    obs->on_pass_end(csf);
  }
}

inline std::optional<Schedule> aux1(const Instance& inst, Threshold y) {
  auto csf = CandidateSetFamily::initial(inst);
  return aux1(inst, csf, y);
}

/// Incremental solver. The family and the tentative schedule persist across
/// solve() calls, so a caller that tightens the threshold step by step pays
/// for batch formation only once.
///
/// The instance must outlive the solver.
class BoundedSolver {
 public:
  explicit BoundedSolver(const Instance& inst, SolverObserver* obs = nullptr)
      : BoundedSolver(inst, CandidateSetFamily::initial(inst), obs) {}

  BoundedSolver(const Instance& inst, CandidateSetFamily csf, SolverObserver* obs = nullptr)
      : inst_(&inst), csf_(std::move(csf)), obs_(obs ? obs : &null_observer()) {}

  std::optional<Schedule> solve(Threshold y) {
    if (!built_) {
      auto s = form_batches(csf_, *inst_);
      if (!s) return std::nullopt;
      sched_ = std::move(*s);
      built_ = true;
    }
    const std::size_t n = csf_.size();
    for (;;) {
      timetable(sched_, *inst_);
      obs_->on_timetable(sched_);
      bool adjusted = false;
      for (std::size_t i = n; i-- > 0;) {
        while (auto j = worst_violation(i, y)) {
          if (!adjust(i, *j)) return std::nullopt;
          adjusted = true;
          timetable(sched_, *inst_);
        }
      }
      if (!adjusted) return sched_;
      obs_->on_pass_end(csf_);
    }
  }

  const CandidateSetFamily& csf() const { return csf_; }
  const Schedule& schedule() const { return sched_; }
  bool started() const { return built_; }
  std::size_t adjustments() const { return adjustments_; }

 private:
  /// Largest-key job in slot i whose cost at the slot's completion is not
  /// below the threshold.
  std::optional<JobId> worst_violation(std::size_t i, Threshold y) const {
    std::optional<JobId> worst;
    const auto less = csf_.order();
    const Time c = sched_.completion[i];
    for (JobId j : sched_.slots[i])
      if (!y.admits(inst_->cost(j, c)) && (!worst || less(*worst, j))) worst = j;
    return worst;
  }

  /// Largest index e < i whose batch is below capacity.
  std::optional<std::size_t> last_open_slot(std::size_t i) const {
    const std::size_t b = inst_->batch_limit();
    for (std::size_t e = i; e-- > 0;)
      if (sched_.slots[e].size() < b) return e;
    return std::nullopt;
  }

  /// Carries `job` from slot `from` down to slot `to`: every full slot on the
  /// way keeps its largest keys and hands its smallest one further left.
  void cascade(JobId job, std::size_t from, std::size_t to) {
    const auto less = csf_.order();
    for (std::size_t c = from; c > to; --c) {
      auto& batch = sched_.slots[c];
      auto smallest = std::min_element(batch.begin(), batch.end(),
                                       [&](JobId a, JobId b) { return less(a, b); });
      if (smallest != batch.end() && less(*smallest, job)) std::swap(*smallest, job);
    }
    sched_.slots[to].push_back(job);
  }

  static void erase_job(std::vector<JobId>& batch, JobId j) {
    auto it = std::find(batch.begin(), batch.end(), j);
    assert(it != batch.end());
    batch.erase(it);
  }

  bool adjust(std::size_t i, JobId j) {
    if (i == 0) return false;
    auto& batch = sched_.slots[i];
    erase_job(batch, j);

    // The replacement for j in slot i is the largest earlier job whose
    // component still allows slot i. Its own cost is checked on the next
    // scan of slot i, against the completion time of the repaired schedule.
    const auto less = csf_.order();
    std::optional<JobId> pick;
    std::size_t pick_slot = 0;
    for (std::size_t g = 0; g < i; ++g)
      for (JobId x : sched_.slots[g])
        if (csf_.ordinal(x) >= i && (!pick || less(*pick, x))) {
          pick = x;
          pick_slot = g;
        }

    const int adjust_case = pick ? 2 : 1;
    obs_->on_move(j, csf_.ordinal(j), i - 1, adjust_case);
    csf_.move(j, i - 1);
    ++adjustments_;

    if (!pick) {
      if (batch.empty()) return false;
      auto e = last_open_slot(i);
      if (!e) return false;
      cascade(j, i - 1, *e);
      return true;
    }

    erase_job(sched_.slots[pick_slot], *pick);
    batch.push_back(*pick);
    auto e = last_open_slot(i);
    assert(e && *e == pick_slot);
    cascade(j, i - 1, e.value_or(pick_slot));
    return true;
  }

  const Instance* inst_;
  CandidateSetFamily csf_;
  SolverObserver* obs_;
  Schedule sched_;
  bool built_ = false;
  std::size_t adjustments_ = 0;
};

}  // namespace sbatch
