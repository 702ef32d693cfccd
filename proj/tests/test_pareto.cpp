#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace sbatch;
using sbatch::testing::inst_a;
using sbatch::testing::inst_b;
using sbatch::testing::inst_c;

TEST(Main1, InstAFrontier) {
  const auto inst = inst_a();
  auto front = main1(inst);
  EXPECT_EQ(front.objective_pairs(), (std::vector<Objectives>{{6, 3}, {8, 0}}));
  EXPECT_EQ(front.pi_star.slots, (std::vector<std::vector<JobId>>{{1}, {2}}));
  EXPECT_EQ(front.rounds, 3u);
  EXPECT_EQ(frontier_csv(front), "c_max,f_max,batches\n6,3,1.2\n8,0,1;2\n");
}

TEST(Main1, InstBFrontier) {
  auto front = main1(inst_b());
  EXPECT_EQ(front.objective_pairs(), (std::vector<Objectives>{{10, 1}}));
}

TEST(Main1, RejectsPrecedence) {
  EXPECT_THROW(main1(inst_c()), InputError);
  EXPECT_THROW(main1_naive(inst_c()), InputError);
}

TEST(Main2, InstCFrontier) {
  auto front = main2(inst_c());
  EXPECT_EQ(front.objective_pairs(), (std::vector<Objectives>{{6, 0}}));
  EXPECT_EQ(frontier_csv(front), "c_max,f_max,batches\n6,0,1;2.3\n");
}

TEST(Main2, RejectsTightCapacity) {
  EXPECT_THROW(main2(inst_b()), InputError);
}

TEST(SolvePareto, DispatchesOnCapacity) {
  EXPECT_EQ(solve_pareto(inst_a()).objective_pairs(), main1(inst_a()).objective_pairs());
  EXPECT_EQ(solve_pareto(inst_c()).objective_pairs(), main2(inst_c()).objective_pairs());
}

TEST(EpsilonConstraint, RecordsPointsOnMakespanSteps) {
  const auto inst = inst_a();
  // Scripted solver: two answers of equal makespan, then a longer one.
  std::vector<Schedule> answers{timetabled(schedule_from_batches({{2, 1}}, 2), inst),
                                timetabled(schedule_from_batches({{1}, {2}}, 2), inst)};
  std::size_t k = 0;
  auto front = epsilon_constraint(inst, [&](Threshold) -> std::optional<Schedule> {
    if (k < answers.size()) return answers[k++];
    return std::nullopt;
  });
  EXPECT_EQ(front.objective_pairs(), (std::vector<Objectives>{{6, 3}, {8, 0}}));
  EXPECT_EQ(front.rounds, 3u);
  EXPECT_THROW(epsilon_constraint(inst, [](Threshold) { return std::optional<Schedule>{}; }),
               InputError);
}

TEST(EncodeBatches, SortsIdsAndSkipsEmptySlots) {
  auto s = schedule_from_batches({{3, 1}, {2}}, 4);
  EXPECT_EQ(encode_batches(s), "1.3;2");
}

TEST(Main1, NaiveAgreesOnCorpus) {
  for (const auto& inst : sbatch::testing::small_corpus(200, 61, 8))
    EXPECT_EQ(main1(inst).objective_pairs(), main1_naive(inst).objective_pairs());
}

TEST(Main1, FrontierIsStrictlyMonotoneAndValid) {
  for (const auto& inst : sbatch::testing::small_corpus(200, 62, 8)) {
    auto front = main1(inst);
    for (std::size_t k = 0; k < front.points.size(); ++k) {
      const auto& p = front.points[k];
      EXPECT_TRUE(validate(p.schedule, inst).empty());
      EXPECT_EQ(objectives(p.schedule, inst), (Objectives{p.makespan, p.max_cost}));
      if (k > 0) {
        EXPECT_LT(front.points[k - 1].makespan, p.makespan);
        EXPECT_GT(front.points[k - 1].max_cost, p.max_cost);
      }
    }
    const auto n = inst.size();
    EXPECT_LE(front.moves, n * (n - 1));
    EXPECT_LE(front.points.size(), n);
  }
}

TEST(Main1, CompletionTimesNeverDecrease) {
  for (const auto& inst : sbatch::testing::small_corpus(200, 63, 8)) {
    CompletionMonitor monitor;
    main1(inst, &monitor);
    EXPECT_EQ(monitor.decreases(), 0u);
    EXPECT_GT(monitor.timetables(), 0u);
  }
}

TEST(Main2, CompletionTimesNeverDecrease) {
  for (const auto& inst : sbatch::testing::prec_corpus(200, 64, 7)) {
    CompletionMonitor monitor;
    auto front = main2(inst, &monitor);
    EXPECT_EQ(monitor.decreases(), 0u);
    const auto n = inst.size();
    EXPECT_LE(front.moves, n * (n - 1));
    EXPECT_LE(front.points.size(), n);
  }
}

TEST(Main1, ScalesToLargerInstances) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = gen_random(120, seed);
    auto front = main1(inst);
    ASSERT_FALSE(front.points.empty());
    EXPECT_LE(front.moves, inst.size() * (inst.size() - 1));
    for (const auto& p : front.points) EXPECT_TRUE(validate(p.schedule, inst).empty());
    EXPECT_EQ(front.objective_pairs(), main1_naive(inst).objective_pairs());
  }
}
