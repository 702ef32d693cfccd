#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "fixtures.hpp"

using namespace sbatch;

TEST(Heap, MatchesMultisetUnderRandomOperations) {
  SplitMix64 rng(42);
  std::vector<int> h;
  std::multiset<int> ref;
  const auto less = std::less<int>{};
  for (int step = 0; step < 5000; ++step) {
    const auto op = rng.uniform(0, 2);
    if (op == 0 || ref.empty()) {
      int v = static_cast<int>(rng.uniform(-50, 50));
      heap::insert(h, v, less);
      ref.insert(v);
    } else if (op == 1) {
      EXPECT_EQ(heap::extract_max(h, less), *ref.rbegin());
      ref.erase(std::prev(ref.end()));
    } else {
      auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(h.size()) - 1));
      int v = heap::erase_at(h, i, less);
      ref.erase(ref.find(v));
    }
    ASSERT_TRUE(heap::is_heap(h, less));
    ASSERT_EQ(h.size(), ref.size());
  }
}

TEST(Heap, BuildAndTrackPositions) {
  std::vector<int> h{3, 9, 1, 7, 5, 8, 2};
  std::vector<std::size_t> pos(10, 99);
  auto track = [&](int v, std::size_t i) { pos[static_cast<std::size_t>(v)] = i; };
  heap::build(h, std::less<int>{}, track);
  EXPECT_TRUE(heap::is_heap(h, std::less<int>{}));
  EXPECT_EQ(h.front(), 9);
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(pos[static_cast<std::size_t>(h[i])], i);
  heap::erase_at(h, pos[7], std::less<int>{}, track);
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(pos[static_cast<std::size_t>(h[i])], i);
  EXPECT_TRUE(heap::is_heap(h, std::less<int>{}));
}

TEST(KeyOrder, LongerFirstThenSmallerId) {
  std::vector<Time> p{3, 5, 3};
  KeyOrder less(&p);
  EXPECT_TRUE(less(1, 2));   // p 3 < p 5
  EXPECT_TRUE(less(3, 1));   // equal p: id 1 ranks higher
  EXPECT_FALSE(less(1, 3));
  EXPECT_FALSE(less(2, 2));
}

TEST(CandidateSetFamily, InitialPutsEverythingLast) {
  auto csf = CandidateSetFamily::initial(sbatch::testing::inst_a());
  EXPECT_EQ(csf.ordinal(1), 1u);
  EXPECT_EQ(csf.ordinal(2), 1u);
  EXPECT_EQ(csf.move_count(), 0u);
  EXPECT_EQ(csf.sorted_component(1), (std::vector<JobId>{2, 1}));
  EXPECT_EQ(csf.dump(), "2: [2(3), 1(1)]\n");
}

TEST(CandidateSetFamily, MovesOnlyLeft) {
  auto csf = CandidateSetFamily::initial(std::vector<Time>{4, 4, 2});
  csf.move(2, 1);
  EXPECT_EQ(csf.ordinal(2), 1u);
  EXPECT_THROW(csf.move(2, 1), std::invalid_argument);
  EXPECT_THROW(csf.move(2, 2), std::invalid_argument);
  csf.move(2, 0);
  EXPECT_EQ(csf.move_count(), 2u);
  EXPECT_EQ(csf.partition(), (std::vector<std::vector<JobId>>{{2}, {}, {1, 3}}));
}

TEST(CandidateSetFamily, RejectsMalformedFamilies) {
  std::vector<Time> p{1, 1};
  EXPECT_THROW(CandidateSetFamily(p, {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(CandidateSetFamily(p, {{1}, {1}}), std::invalid_argument);
  EXPECT_THROW(CandidateSetFamily(p, {{1}, {}}), std::invalid_argument);
  EXPECT_THROW(CandidateSetFamily(p, {{1}, {3}}), std::invalid_argument);
}

TEST(CandidateSetFamily, PrefixCapacity) {
  std::vector<Time> p{1, 1, 1};
  EXPECT_TRUE(CandidateSetFamily(p, {{1}, {2}, {3}}).prefix_capacity_ok(1));
  EXPECT_FALSE(CandidateSetFamily(p, {{1, 2}, {}, {3}}).prefix_capacity_ok(1));
  EXPECT_TRUE(CandidateSetFamily(p, {{1, 2}, {}, {3}}).prefix_capacity_ok(2));
  EXPECT_FALSE(CandidateSetFamily(p, {{}, {1, 2, 3}, {}}).prefix_capacity_ok(1));
}

TEST(CandidateSetFamily, PeekLargestAcrossComponents) {
  std::vector<Time> p{2, 9, 4, 9};
  CandidateSetFamily csf(p, {{1}, {3, 4}, {}, {2}});
  const std::vector<std::size_t> low{0, 1};
  EXPECT_EQ(csf.peek_largest(low), JobId{4});
  const std::vector<std::size_t> all{0, 1, 2, 3};
  EXPECT_EQ(csf.peek_largest(all), JobId{2});
  const std::vector<std::size_t> empty{2};
  EXPECT_FALSE(csf.peek_largest(empty).has_value());
}

TEST(CandidateSetFamily, RandomMovesKeepPartitionAndHeaps) {
  SplitMix64 rng(9);
  const std::size_t n = 12;
  std::vector<Time> p;
  for (std::size_t k = 0; k < n; ++k) p.push_back(rng.uniform(1, 5));
  auto csf = CandidateSetFamily::initial(p);
  std::size_t moves = 0;
  for (int step = 0; step < 400; ++step) {
    const auto j = static_cast<JobId>(rng.uniform(1, static_cast<std::int64_t>(n)));
    const auto o = csf.ordinal(j);
    if (o == 0) continue;
    const auto to = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(o) - 1));
    csf.move(j, to);
    ++moves;
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<JobId> comp(csf.component(i).begin(), csf.component(i).end());
      ASSERT_TRUE(heap::is_heap(comp, csf.order()));
      for (JobId x : comp) ASSERT_EQ(csf.ordinal(x), i);
      total += comp.size();
    }
    ASSERT_EQ(total, n);
  }
  EXPECT_EQ(csf.move_count(), moves);
  EXPECT_LE(csf.move_count(), n * (n - 1));
}
