#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>

#include "sbatch/csf.hpp"
#include "sbatch/model.hpp"

namespace sbatch {

/// Hooks into the solvers. Slot and component indices passed here are
/// 0-based; the default implementation ignores every event.
class SolverObserver {
 public:
  virtual ~SolverObserver() = default;

  /// A freshly timetabled tentative schedule (once per adjustment pass).
  virtual void on_timetable(const Schedule&) {}
  /// A job's component dropped from `from` to `to`. `adjust_case` is 1 or 2
  /// for the incremental bounded solver and 0 otherwise.
  virtual void on_move(JobId, std::size_t /*from*/, std::size_t /*to*/, int /*adjust_case*/) {}
  /// A predecessor's admissible slot bound was lowered (precedence path).
  virtual void on_bound(JobId, std::size_t /*bound*/) {}
  /// End of one adjustment pass that changed the family.
  virtual void on_pass_end(const CandidateSetFamily&) {}
};

/// Shared do-nothing observer.
inline SolverObserver& null_observer() {
  static SolverObserver quiet;
  return quiet;
}

/// Writes one text line per move or bound event, with 1-based indices, and
/// the family ("csf i: [id(p), ...]") after every pass that changed it.
class TraceWriter : public SolverObserver {
 public:
  explicit TraceWriter(std::ostream& os) : os_(os) {}

  void on_move(JobId j, std::size_t from, std::size_t to, int adjust_case) override {
    os_ << "move job=" << j << " from=" << from + 1 << " to=" << to + 1;
    if (adjust_case > 0) os_ << " case=" << adjust_case;
    os_ << '\n';
  }

  void on_bound(JobId j, std::size_t bound) override {
    os_ << "bound job=" << j << " new=" << bound + 1 << '\n';
  }

  void on_pass_end(const CandidateSetFamily& csf) override {
    std::istringstream lines(csf.dump());
    for (std::string line; std::getline(lines, line);) os_ << "csf " << line << '\n';
  }

 private:
  std::ostream& os_;
};

}  // namespace sbatch
