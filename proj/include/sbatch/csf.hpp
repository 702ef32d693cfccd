#pragma once

// Candidate set family: n disjoint job components where membership in
// component i means the job may not be placed in any batch after slot i.
// Jobs only ever move to lower components.

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbatch/heap.hpp"
#include "sbatch/model.hpp"

namespace sbatch {

/// Strict total order on jobs: larger processing time first, then smaller id.
class KeyOrder {
 public:
  explicit KeyOrder(const std::vector<Time>* p) : p_(p) {}

  /// True when a ranks below b.
  bool operator()(JobId a, JobId b) const {
    Time pa = (*p_)[static_cast<std::size_t>(a - 1)];
    Time pb = (*p_)[static_cast<std::size_t>(b - 1)];
    return pa != pb ? pa < pb : a > b;
  }

 private:
  const std::vector<Time>* p_;
};

class CandidateSetFamily {
 public:
  /// `components[i]` lists the jobs of component i (0-based). Every job
  /// 1..p.size() must appear exactly once.
  CandidateSetFamily(std::vector<Time> processing, std::vector<std::vector<JobId>> components)
      : p_(std::move(processing)),
        heaps_(std::move(components)),
        ordinal_(p_.size(), kNone),
        pos_(p_.size(), 0) {
    const std::size_t n = p_.size();
    if (heaps_.size() != n)
      throw std::invalid_argument("candidate set family needs exactly n components");
    for (std::size_t i = 0; i < n; ++i) {
      for (JobId j : heaps_[i]) {
        if (j < 1 || static_cast<std::size_t>(j) > n)
          throw std::invalid_argument("unknown job " + std::to_string(j));
        auto& o = ordinal_[static_cast<std::size_t>(j - 1)];
        if (o != kNone) throw std::invalid_argument("job " + std::to_string(j) + " listed twice");
        o = i;
      }
      heap::build(heaps_[i], order(), tracker());
    }
    for (std::size_t k = 0; k < n; ++k)
      if (ordinal_[k] == kNone)
        throw std::invalid_argument("job " + std::to_string(k + 1) + " missing from all components");
  }

  /// All jobs in the last component.
  static CandidateSetFamily initial(std::vector<Time> processing) {
    const std::size_t n = processing.size();
    std::vector<std::vector<JobId>> comps(n);
    for (std::size_t k = 0; k < n; ++k) comps[n - 1].push_back(static_cast<JobId>(k + 1));
    return CandidateSetFamily(std::move(processing), std::move(comps));
  }

  static CandidateSetFamily initial(const Instance& inst) {
    return initial(inst.processing_times());
  }

  std::size_t size() const { return p_.size(); }
  std::size_t ordinal(JobId j) const { return ordinal_[static_cast<std::size_t>(j - 1)]; }
  std::size_t move_count() const { return moves_; }
  KeyOrder order() const { return KeyOrder(&p_); }
  const std::vector<Time>& processing_times() const { return p_; }

  /// Members of component i in heap-array order.
  std::span<const JobId> component(std::size_t i) const { return heaps_[i]; }

  /// Members of component i, largest key first.
  std::vector<JobId> sorted_component(std::size_t i) const {
    std::vector<JobId> out = heaps_[i];
    std::sort(out.begin(), out.end(), [this](JobId a, JobId b) { return order()(b, a); });
    return out;
  }

  /// Relocates a job to a strictly lower component.
  void move(JobId j, std::size_t to) {
    const std::size_t from = ordinal(j);
    if (to >= from)
      throw std::invalid_argument("job " + std::to_string(j) + " may only move to a lower component");
    heap::erase_at(heaps_[from], pos_[static_cast<std::size_t>(j - 1)], order(), tracker());
    heap::insert(heaps_[to], j, order(), tracker());
    ordinal_[static_cast<std::size_t>(j - 1)] = to;
    ++moves_;
  }

  /// Sum over h <= i of |component h| stays within (i + 1) * b for every i.
  bool prefix_capacity_ok(std::size_t b) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < heaps_.size(); ++i) {
      total += heaps_[i].size();
      if (total > (i + 1) * b) return false;
    }
    return true;
  }

  /// Largest-key job over the union of the given components, not removed.
  std::optional<JobId> peek_largest(std::span<const std::size_t> from) const {
    std::optional<JobId> best;
    for (std::size_t i : from) {
      if (heaps_[i].empty()) continue;
      JobId top = heaps_[i].front();
      if (!best || order()(*best, top)) best = top;
    }
    return best;
  }

  /// One line per nonempty component: "i: [id(p), ...]", 1-based i.
  std::string dump() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < heaps_.size(); ++i) {
      if (heaps_[i].empty()) continue;
      os << (i + 1) << ": [";
      bool first = true;
      for (JobId j : sorted_component(i)) {
        os << (first ? "" : ", ") << j << '(' << p_[static_cast<std::size_t>(j - 1)] << ')';
        first = false;
      }
      os << "]\n";
    }
    return os.str();
  }

  /// Component contents as sorted id lists; equality ignores heap layout.
  std::vector<std::vector<JobId>> partition() const {
    std::vector<std::vector<JobId>> out(heaps_.size());
    for (std::size_t i = 0; i < heaps_.size(); ++i) {
      out[i] = heaps_[i];
      std::sort(out[i].begin(), out[i].end());
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Tracker {
    std::vector<std::size_t>* pos;
    void operator()(JobId j, std::size_t idx) const { (*pos)[static_cast<std::size_t>(j - 1)] = idx; }
  };
  Tracker tracker() { return Tracker{&pos_}; }

  std::vector<Time> p_;
  std::vector<std::vector<JobId>> heaps_;
  std::vector<std::size_t> ordinal_;
  std::vector<std::size_t> pos_;
  std::size_t moves_ = 0;
};

}  // namespace sbatch
