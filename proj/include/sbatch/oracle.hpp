#pragma once

// Exhaustive ground truth for small instances: every ordered partition of
// the jobs into nonempty batches that respects capacity and precedence.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbatch/model.hpp"
#include "sbatch/pareto.hpp"

namespace sbatch {

class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  std::size_t max_n_bounded = 8;
  std::size_t max_n_precedence = 7;
  std::size_t max_schedules = 200'000'000;
};

namespace detail {

class FeasibleEnumerator {
 public:
  FeasibleEnumerator(const Instance& inst, const EnumerationLimits& lim,
                     std::function<void(const Schedule&)> visit)
      : inst_(inst), lim_(lim), visit_(std::move(visit)), n_(inst.size()), b_(inst.batch_limit()) {
    block_of_.assign(n_, 0);
    sched_.slots.assign(n_, {});
  }

  std::size_t run() {
    place(0);
    return count_;
  }

 private:
  // Restricted-growth assignment of job k to an existing or a new block.
  void place(std::size_t k) {
    if (k == n_) {
      order_blocks();
      return;
    }
    for (std::size_t c = 0; c < blocks_.size(); ++c) {
      if (blocks_[c].size() >= b_) continue;
      blocks_[c].push_back(static_cast<JobId>(k + 1));
      block_of_[k] = c;
      place(k + 1);
      blocks_[c].pop_back();
    }
    blocks_.push_back({static_cast<JobId>(k + 1)});
    block_of_[k] = blocks_.size() - 1;
    place(k + 1);
    blocks_.pop_back();
  }

  void order_blocks() {
    const std::size_t l = blocks_.size();
    std::vector<std::size_t> perm(l);  // perm[position] = block
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> position(l);
    do {
      for (std::size_t pos = 0; pos < l; ++pos) position[perm[pos]] = pos;
      bool ok = true;
      for (auto [a, b] : inst_.precedence) {
        if (position[block_of_[static_cast<std::size_t>(a - 1)]] >=
            position[block_of_[static_cast<std::size_t>(b - 1)]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < n_ - l; ++i) sched_.slots[i].clear();
      for (std::size_t pos = 0; pos < l; ++pos) sched_.slots[n_ - l + pos] = blocks_[perm[pos]];
      timetable(sched_, inst_);
      if (++count_ > lim_.max_schedules)
        throw SizeError("enumeration exceeded " + std::to_string(lim_.max_schedules) + " schedules");
      visit_(sched_);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  const Instance& inst_;
  const EnumerationLimits& lim_;
  std::function<void(const Schedule&)> visit_;
  std::size_t n_;
  std::size_t b_;
  std::vector<std::vector<JobId>> blocks_;
  std::vector<std::size_t> block_of_;
  Schedule sched_;
  std::size_t count_ = 0;
};

}  // namespace detail

/// Calls `visit` once per feasible schedule (timetabled, n slots, nonempty
/// suffix). The schedule reference is only valid during the call. Returns the
/// number of schedules visited. Throws SizeError above the limits.
inline std::size_t enumerate_feasible(const Instance& inst,
                                      std::function<void(const Schedule&)> visit,
                                      const EnumerationLimits& lim = {}) {
  const bool bounded_path = inst.capacity.is_bounded();
  const std::size_t max_n = bounded_path ? lim.max_n_bounded : lim.max_n_precedence;
  if (inst.size() > max_n)
    throw SizeError("oracle enumeration is limited to n <= " + std::to_string(max_n) + " (got " +
                    std::to_string(inst.size()) + ")");
  return detail::FeasibleEnumerator(inst, lim, std::move(visit)).run();
}

struct OracleFront {
  std::vector<ParetoPoint> points;  // makespan ascending, max cost descending
  Cost min_max_cost = 0;
  std::size_t schedules = 0;

  std::vector<Objectives> objective_pairs() const {
    std::vector<Objectives> out;
    for (const auto& p : points) out.push_back({p.makespan, p.max_cost});
    return out;
  }
};

/// Nondominated (makespan, max cost) pairs over all feasible schedules, each
/// with one witness schedule.
inline OracleFront oracle_pareto(const Instance& inst, const EnumerationLimits& lim = {}) {
  std::map<Time, ParetoPoint> best;  // per makespan, the lowest max cost seen
  OracleFront out;
  out.schedules = enumerate_feasible(
      inst,
      [&](const Schedule& s) {
        const auto o = objectives(s, inst);
        auto it = best.find(o.makespan);
        if (it == best.end())
          best.emplace(o.makespan, ParetoPoint{o.makespan, o.max_cost, s});
        else if (o.max_cost < it->second.max_cost)
          it->second = ParetoPoint{o.makespan, o.max_cost, s};
      },
      lim);
  for (auto& [makespan, point] : best) {
    if (!out.points.empty() && out.points.back().max_cost <= point.max_cost) continue;
    out.points.push_back(std::move(point));
  }
  if (!out.points.empty()) out.min_max_cost = out.points.back().max_cost;
  return out;
}

}  // namespace sbatch
