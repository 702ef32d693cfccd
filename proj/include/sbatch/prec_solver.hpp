#pragma once

// Unbounded-capacity scheduling under strict precedence: the precedence
// graph, the layered initial candidate set family, and the solver that keeps
// each component as one batch while pushing jobs (and bounds on their direct
// predecessors) to the left.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sbatch/csf.hpp"
#include "sbatch/model.hpp"
#include "sbatch/trace.hpp"

namespace sbatch {

class PrecGraph {
 public:
  /// Throws InputError on unknown ids, self loops or cycles.
  PrecGraph(std::size_t n, std::span<const Edge> edges) : succ_(n), pred_(n) {
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto [a, b] : sorted) {
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n)
        throw InputError("precedence edge references unknown job");
      if (a == b) throw InputError("precedence edge is a self loop");
      succ_[index(a)].push_back(b);
      pred_[index(b)].push_back(a);
    }
    edges_ = sorted.size();
    if (detail::has_cycle(n, sorted)) throw InputError("precedence relation has a cycle");
  }

  explicit PrecGraph(const Instance& inst) : PrecGraph(inst.size(), inst.precedence) {}

  std::size_t size() const { return succ_.size(); }
  std::size_t edge_count() const { return edges_; }
  std::span<const JobId> successors(JobId j) const { return succ_[index(j)]; }
  std::span<const JobId> predecessors(JobId j) const { return pred_[index(j)]; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t k = 0; k < succ_.size(); ++k)
      for (JobId b : succ_[k]) out.emplace_back(static_cast<JobId>(k + 1), b);
    return out;
  }

  /// Covering relation only: drops every edge implied by a longer path.
  PrecGraph transitive_reduction() const {
    const std::size_t n = size();
    std::vector<Edge> kept;
    std::vector<char> reach(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (JobId b : succ_[a]) {
        // b is redundant if reachable from another direct successor of a
        std::fill(reach.begin(), reach.end(), 0);
        std::vector<JobId> stack;
        for (JobId c : succ_[a])
          if (c != b) stack.push_back(c);
        bool implied = false;
        while (!stack.empty() && !implied) {
          JobId v = stack.back();
          stack.pop_back();
          if (reach[index(v)]) continue;
          reach[index(v)] = 1;
          if (v == b) implied = true;
          for (JobId w : succ_[index(v)]) stack.push_back(w);
        }
        if (!implied) kept.emplace_back(static_cast<JobId>(a + 1), b);
      }
    }
    return PrecGraph(n, kept);
  }

 private:
  static std::size_t index(JobId j) { return static_cast<std::size_t>(j - 1); }

  std::vector<std::vector<JobId>> succ_;
  std::vector<std::vector<JobId>> pred_;
  std::size_t edges_ = 0;
};

/// Strips sinks layer by layer: the last component takes every job without
/// successors, the one before it the sinks of what remains, and so on.
inline CandidateSetFamily layered_initial_csf(const PrecGraph& g, std::vector<Time> processing) {
  const std::size_t n = g.size();
  std::vector<std::size_t> outdeg(n);
  std::vector<JobId> layer;
  for (std::size_t k = 0; k < n; ++k) {
    outdeg[k] = g.successors(static_cast<JobId>(k + 1)).size();
    if (outdeg[k] == 0) layer.push_back(static_cast<JobId>(k + 1));
  }
  std::vector<std::vector<JobId>> comps(n);
  for (std::size_t i = n; i-- > 0 && !layer.empty();) {
    std::vector<JobId> next;
    for (JobId j : layer)
      for (JobId p : g.predecessors(j))
        if (--outdeg[static_cast<std::size_t>(p - 1)] == 0) next.push_back(p);
    comps[i] = std::move(layer);
    layer = std::move(next);
  }
  return CandidateSetFamily(std::move(processing), std::move(comps));
}

inline CandidateSetFamily layered_initial_csf(const PrecGraph& g, const Instance& inst) {
  return layered_initial_csf(g, inst.processing_times());
}

/// One batch per component. The family and the per-job slot bounds persist
/// across solve() calls, so thresholds can be tightened step by step.
///
/// The instance and graph must outlive the solver.
class PrecSolver {
 public:
  PrecSolver(const Instance& inst, const PrecGraph& g, SolverObserver* obs = nullptr)
      : PrecSolver(inst, g, layered_initial_csf(g, inst), obs) {}

  PrecSolver(const Instance& inst, const PrecGraph& g, CandidateSetFamily csf,
             SolverObserver* obs = nullptr)
      : inst_(&inst), graph_(&g), csf_(std::move(csf)), obs_(obs ? obs : &null_observer()) {
    bound_.resize(csf_.size());
    for (std::size_t k = 0; k < bound_.size(); ++k) bound_[k] = csf_.ordinal(static_cast<JobId>(k + 1));
  }

  std::optional<Schedule> solve(Threshold y) {
    const std::size_t n = csf_.size();
    for (;;) {
      Schedule sched;
      sched.slots.resize(n);
      for (std::size_t i = 0; i < n; ++i) sched.slots[i] = csf_.sorted_component(i);
      // Components may leave a gap; that only happens after a failed pass.
      if (!suffix_shaped(sched)) return std::nullopt;
      timetable(sched, *inst_);
      obs_->on_timetable(sched);

      bool adjusted = false;
      for (std::size_t i = n; i-- > 0;) {
        for (JobId j : sched.slots[i]) {
          std::size_t k1 = i;
          if (!y.admits(inst_->cost(j, sched.completion[i]))) {
            auto k = latest_admissible(sched, j, i, y);
            if (!k) return std::nullopt;
            k1 = *k;
          }
          const std::size_t k = std::min(k1, bound(j));
          set_bound(j, k);
          if (k == i) continue;

          obs_->on_move(j, csf_.ordinal(j), k, 0);
          csf_.move(j, k);
          adjusted = true;
          if (csf_.component(i).empty()) return std::nullopt;
          for (JobId p : graph_->predecessors(j)) {
            if (k == 0) return std::nullopt;  // no slot left before j
            if (k - 1 < bound(p)) {
              set_bound(p, k - 1);
              obs_->on_bound(p, k - 1);
            }
          }
        }
      }
      if (!adjusted) return sched;
      obs_->on_pass_end(csf_);
    }
  }

  const CandidateSetFamily& csf() const { return csf_; }
  std::size_t bound(JobId j) const { return bound_[static_cast<std::size_t>(j - 1)]; }

 private:
  void set_bound(JobId j, std::size_t k) { bound_[static_cast<std::size_t>(j - 1)] = k; }

  static bool suffix_shaped(const Schedule& s) {
    std::size_t i = s.first_nonempty();
    for (; i < s.slots.size(); ++i)
      if (s.slots[i].empty()) return false;
    return true;
  }

  std::optional<std::size_t> latest_admissible(const Schedule& s, JobId j, std::size_t i,
                                               Threshold y) const {
    for (std::size_t k = i; k-- > 0;)
      if (y.admits(inst_->cost(j, s.completion[k]))) return k;
    return std::nullopt;
  }

  const Instance* inst_;
  const PrecGraph* graph_;
  CandidateSetFamily csf_;
  SolverObserver* obs_;
  std::vector<std::size_t> bound_;
};

}  // namespace sbatch
