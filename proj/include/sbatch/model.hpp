#pragma once

// Domain types for single-machine serial-batch scheduling: jobs with regular
// cost functions, instances, batch schedules, and their evaluation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sbatch {

using Time = std::int64_t;
using Cost = std::int64_t;
using JobId = int;  // 1..n

/// Raised when an instance or a request violates the input contract.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a schedule does not have the n-slot, nonempty-suffix shape.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Cost functions

struct Lateness {
  Time due = 0;
  bool operator==(const Lateness&) const = default;
};

struct Tardiness {
  Time due = 0;
  bool operator==(const Tardiness&) const = default;
};

struct WeightedCompletion {
  Cost w = 0;
  bool operator==(const WeightedCompletion&) const = default;
};

/// f(t) = a*t + c with a >= 0.
struct Affine {
  Cost a = 0;
  Cost c = 0;
  bool operator==(const Affine&) const = default;
};

/// Right-continuous step function. Before the first breakpoint the first
/// value applies.
struct StepTable {
  std::vector<std::pair<Time, Cost>> breakpoints;
  bool operator==(const StepTable&) const = default;
};

using CostSpec = std::variant<Lateness, Tardiness, WeightedCompletion, Affine, StepTable>;

inline Cost eval_cost(const CostSpec& spec, Time t) {
  struct Visitor {
    Time t;
    Cost operator()(const Lateness& f) const { return t - f.due; }
    Cost operator()(const Tardiness& f) const { return std::max<Cost>(0, t - f.due); }
    Cost operator()(const WeightedCompletion& f) const { return f.w * t; }
    Cost operator()(const Affine& f) const { return f.a * t + f.c; }
    Cost operator()(const StepTable& f) const {
      const auto& bp = f.breakpoints;
      auto it = std::upper_bound(bp.begin(), bp.end(), t,
                                 [](Time v, const auto& e) { return v < e.first; });
      return it == bp.begin() ? bp.front().second : std::prev(it)->second;
    }
  };
  return std::visit(Visitor{t}, spec);
}

/// Empty string when the spec is regular (non-decreasing), else the reason.
inline std::string check_cost_spec(const CostSpec& spec) {
  if (const auto* a = std::get_if<Affine>(&spec); a && a->a < 0) return "affine slope must be >= 0";
  if (const auto* w = std::get_if<WeightedCompletion>(&spec); w && w->w < 0)
    return "weight must be >= 0";
  if (const auto* st = std::get_if<StepTable>(&spec)) {
    if (st->breakpoints.empty()) return "step table needs at least one breakpoint";
    for (std::size_t k = 1; k < st->breakpoints.size(); ++k) {
      if (st->breakpoints[k].first <= st->breakpoints[k - 1].first)
        return "step breakpoints must have strictly increasing times";
      if (st->breakpoints[k].second < st->breakpoints[k - 1].second)
        return "step values must be non-decreasing";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Thresholds

/// Strict upper bound on the maximum cost; the default admits everything.
class Threshold {
 public:
  constexpr Threshold() = default;
  static constexpr Threshold unbounded() { return Threshold{}; }
  static constexpr Threshold below(Cost y) {
    Threshold t;
    t.bound_ = y;
    return t;
  }

  constexpr bool admits(Cost c) const { return !bound_ || c < *bound_; }
  constexpr bool is_unbounded() const { return !bound_.has_value(); }
  constexpr Cost value() const { return *bound_; }

  bool operator==(const Threshold&) const = default;

 private:
  std::optional<Cost> bound_;
};

// ---------------------------------------------------------------------------
// Jobs and instances

struct Job {
  JobId id = 0;
  Time p = 1;
  CostSpec cost;
  bool operator==(const Job&) const = default;
};

/// Batch capacity: bounded by b, or unbounded (b >= n).
struct Capacity {
  std::optional<int> bound;

  static Capacity bounded(int b) { return Capacity{b}; }
  static Capacity unbounded() { return Capacity{}; }

  bool is_bounded() const { return bound.has_value(); }
  std::size_t limit(std::size_t n) const {
    return bound ? static_cast<std::size_t>(*bound) : std::max<std::size_t>(n, 1);
  }
  bool operator==(const Capacity&) const = default;
};

using Edge = std::pair<JobId, JobId>;

struct Instance {
  std::vector<Job> jobs;  // jobs[k].id == k + 1
  Time setup = 0;
  Capacity capacity;
  std::vector<Edge> precedence;

  std::size_t size() const { return jobs.size(); }
  const Job& job(JobId id) const { return jobs[static_cast<std::size_t>(id - 1)]; }
  Cost cost(JobId id, Time t) const { return eval_cost(job(id).cost, t); }
  std::size_t batch_limit() const { return capacity.limit(size()); }

  std::vector<Time> processing_times() const {
    std::vector<Time> p;
    p.reserve(jobs.size());
    for (const auto& j : jobs) p.push_back(j.p);
    return p;
  }

  bool operator==(const Instance&) const = default;
};

namespace detail {

inline bool has_cycle(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : edges) {
    succ[static_cast<std::size_t>(a - 1)].push_back(static_cast<std::size_t>(b - 1));
    ++indeg[static_cast<std::size_t>(b - 1)];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto w : succ[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen != n;
}

}  // namespace detail

/// Checks every instance invariant and returns the instance with jobs sorted
/// by id and duplicate edges removed. Throws InputError.
inline Instance make_instance(std::vector<Job> jobs, Time setup, Capacity capacity,
                              std::vector<Edge> precedence = {}) {
  const std::size_t n = jobs.size();
  if (n == 0) throw InputError("instance has no jobs");
  if (setup < 0) throw InputError("setup time must be >= 0");
  if (capacity.bound && *capacity.bound < 1) throw InputError("batch capacity must be >= 1");

  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
  for (std::size_t k = 0; k < n; ++k) {
    const auto& j = jobs[k];
    if (j.id != static_cast<JobId>(k + 1))
      throw InputError("job ids must be unique and contiguous from 1 (unexpected id " +
                       std::to_string(j.id) + ")");
    if (j.p < 1) throw InputError("job " + std::to_string(j.id) + ": processing time must be >= 1");
    if (auto why = check_cost_spec(j.cost); !why.empty())
      throw InputError("job " + std::to_string(j.id) + ": " + why);
  }

  if (!precedence.empty() && capacity.is_bounded())
    throw InputError("precedence constraints with bounded capacity are not supported");
  for (auto [a, b] : precedence) {
    auto in_range = [n](JobId id) { return id >= 1 && static_cast<std::size_t>(id) <= n; };
    if (!in_range(a) || !in_range(b))
      throw InputError("precedence edge references unknown job (" + std::to_string(a) + ", " +
                       std::to_string(b) + ")");
    if (a == b) throw InputError("precedence edge is a self loop on job " + std::to_string(a));
  }
  std::sort(precedence.begin(), precedence.end());
  precedence.erase(std::unique(precedence.begin(), precedence.end()), precedence.end());
  if (detail::has_cycle(n, precedence)) throw InputError("precedence relation has a cycle");

  return Instance{std::move(jobs), setup, capacity, std::move(precedence)};
}

// ---------------------------------------------------------------------------
// Schedules

/// n batch slots, slot 0 earliest. Nonempty slots form a contiguous suffix.
/// `start` and `completion` are filled by timetable().
struct Schedule {
  std::vector<std::vector<JobId>> slots;
  std::vector<Time> start;
  std::vector<Time> completion;

  std::size_t size() const { return slots.size(); }

  std::size_t nonempty_count() const {
    return static_cast<std::size_t>(
        std::count_if(slots.begin(), slots.end(), [](const auto& b) { return !b.empty(); }));
  }

  /// Index of the earliest nonempty slot (== size() when all slots are empty).
  std::size_t first_nonempty() const {
    std::size_t i = 0;
    while (i < slots.size() && slots[i].empty()) ++i;
    return i;
  }

  Time makespan() const { return completion.empty() ? 0 : completion.back(); }

  /// Same batches with job ids sorted inside each slot.
  Schedule canonical() const {
    Schedule c = *this;
    for (auto& b : c.slots) std::sort(b.begin(), b.end());
    return c;
  }

  bool same_batches(const Schedule& other) const {
    return canonical().slots == other.canonical().slots;
  }

  bool operator==(const Schedule&) const = default;
};

/// Builds an n-slot schedule whose last slots are `batches`, in order.
inline Schedule schedule_from_batches(std::vector<std::vector<JobId>> batches, std::size_t n) {
  if (batches.size() > n) throw StructuralError("more batches than slots");
  Schedule s;
  s.slots.resize(n - batches.size());
  for (auto& b : batches) s.slots.push_back(std::move(b));
  s.start.assign(n, 0);
  s.completion.assign(n, 0);
  return s;
}

/// Fills start/completion times for a schedule without idle time. Empty
/// prefix slots get zero setup and zero length.
inline void timetable(Schedule& sched, const Instance& inst) {
  const std::size_t n = sched.slots.size();
  const std::size_t limit = inst.batch_limit();
  sched.start.assign(n, 0);
  sched.completion.assign(n, 0);
  bool seen_nonempty = false;
  Time t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& batch = sched.slots[i];
    if (batch.empty()) {
      if (seen_nonempty)
        throw StructuralError("empty slot " + std::to_string(i + 1) + " after a nonempty slot");
    } else {
      seen_nonempty = true;
      if (batch.size() > limit)
        throw StructuralError("slot " + std::to_string(i + 1) + " exceeds batch capacity");
      t += inst.setup;
    }
    sched.start[i] = t;
    for (JobId j : batch) t += inst.job(j).p;
    sched.completion[i] = t;
  }
}

inline Schedule timetabled(Schedule sched, const Instance& inst) {
  timetable(sched, inst);
  return sched;
}

struct Objectives {
  Time makespan = 0;
  Cost max_cost = 0;
  bool operator==(const Objectives&) const = default;
  auto operator<=>(const Objectives&) const = default;
};

/// Expects a timetabled schedule.
inline Objectives objectives(const Schedule& sched, const Instance& inst) {
  Objectives o{sched.makespan(), 0};
  bool any = false;
  for (std::size_t i = 0; i < sched.slots.size(); ++i) {
    for (JobId j : sched.slots[i]) {
      Cost c = inst.cost(j, sched.completion[i]);
      o.max_cost = any ? std::max(o.max_cost, c) : c;
      any = true;
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind { SlotCount, NonSuffix, Capacity, Partition, Precedence, Timing };

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Full feasibility report for a schedule; an empty list means valid.
inline std::vector<Violation> validate(const Schedule& sched, const Instance& inst) {
  std::vector<Violation> out;
  const std::size_t n = inst.size();
  if (sched.slots.size() != n) {
    out.push_back({ViolationKind::SlotCount, "schedule has " + std::to_string(sched.slots.size()) +
                                                 " slots, expected " + std::to_string(n)});
    return out;
  }

  bool seen_nonempty = false;
  std::vector<std::size_t> slot_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& batch = sched.slots[i];
    if (batch.empty() && seen_nonempty)
      out.push_back({ViolationKind::NonSuffix,
                     "empty slot " + std::to_string(i + 1) + " after a nonempty slot"});
    seen_nonempty = seen_nonempty || !batch.empty();
    if (batch.size() > inst.batch_limit())
      out.push_back({ViolationKind::Capacity, "slot " + std::to_string(i + 1) + " holds " +
                                                  std::to_string(batch.size()) + " jobs"});
    for (JobId j : batch) {
      if (j < 1 || static_cast<std::size_t>(j) > n) {
        out.push_back({ViolationKind::Partition, "unknown job " + std::to_string(j)});
        continue;
      }
      auto& s = slot_of[static_cast<std::size_t>(j - 1)];
      if (s != n)
        out.push_back({ViolationKind::Partition, "job " + std::to_string(j) + " appears twice"});
      s = i;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (slot_of[k] == n)
      out.push_back({ViolationKind::Partition, "job " + std::to_string(k + 1) + " is unscheduled"});

  for (auto [a, b] : inst.precedence) {
    auto sa = slot_of[static_cast<std::size_t>(a - 1)];
    auto sb = slot_of[static_cast<std::size_t>(b - 1)];
    if (sa != n && sb != n && sa >= sb)
      out.push_back({ViolationKind::Precedence, "job " + std::to_string(a) +
                                                    " must be in an earlier batch than job " +
                                                    std::to_string(b)});
  }

  if (out.empty() && (!sched.completion.empty() || !sched.start.empty())) {
    auto expect = timetabled(sched, inst);
    if (expect.start != sched.start || expect.completion != sched.completion)
      out.push_back({ViolationKind::Timing, "batch times do not follow the no-idle recurrence"});
  }
  return out;
}

}  // namespace sbatch
