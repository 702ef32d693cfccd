#pragma once

// Small hand-checked instances shared by the unit tests.

#include <ostream>
#include <set>
#include <vector>

#include "sbatch/sbatch.hpp"

namespace sbatch {

inline std::ostream& operator<<(std::ostream& os, const Objectives& o) {
  return os << '(' << o.makespan << ", " << o.max_cost << ')';
}

}  // namespace sbatch

namespace sbatch::testing {

/// n=2, s=2, b=2, p=(1,3), lateness dues (3,20).
inline Instance inst_a() {
  return make_instance({{1, 1, Lateness{3}}, {2, 3, Lateness{20}}}, 2, Capacity::bounded(2));
}

/// n=3, s=2, b=2, p=(3,1,2), lateness dues (5,6,10).
inline Instance inst_b() {
  return make_instance({{1, 3, Lateness{5}}, {2, 1, Lateness{6}}, {3, 2, Lateness{10}}}, 2,
                       Capacity::bounded(2));
}

/// n=3, s=1, p=(2,1,1), lateness dues (3,10,10), J1 before J2 and J3, unbounded.
inline Instance inst_c() {
  return make_instance({{1, 2, Lateness{3}}, {2, 1, Lateness{10}}, {3, 1, Lateness{10}}}, 1,
                       Capacity::unbounded(), {{1, 2}, {1, 3}});
}

/// Every objective pair reached by some feasible schedule.
inline std::set<Objectives> all_objectives(const Instance& inst) {
  std::set<Objectives> out;
  enumerate_feasible(inst, [&](const Schedule& s) { out.insert(objectives(s, inst)); });
  return out;
}

/// Small-profile and prec-profile corpora used by the property tests.
inline std::vector<Instance> small_corpus(std::size_t count, std::uint64_t seed, std::size_t n_max = 7) {
  std::vector<Instance> out;
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(planned_instance(plan_instance(seed, k, 2, n_max), Variant::Bounded));
  return out;
}

inline std::vector<Instance> prec_corpus(std::size_t count, std::uint64_t seed, std::size_t n_max = 6) {
  std::vector<Instance> out;
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(planned_instance(plan_instance(seed, k, 2, n_max), Variant::Prec));
  return out;
}

}  // namespace sbatch::testing
