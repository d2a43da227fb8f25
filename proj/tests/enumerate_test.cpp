#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "eulerlab/enumerate.hpp"
#include "eulerlab/errors.hpp"
#include "oracle.hpp"

using namespace eulerlab;
using C = PartitionClassId;

namespace {

std::vector<std::string> rendered(std::uint32_t n, PartitionClassId c) {
  std::vector<std::string> out;
  for (const Partition& p : enumerate_class(n, c)) out.push_back(render(p));
  return out;
}

}  // namespace

TEST(Enumerate, TableColumns) {
  EXPECT_EQ(rendered(6, C::A), (std::vector<std::string>{"6", "5+1", "4+2", "3+2+1"}));
  EXPECT_EQ(rendered(6, C::B),
            (std::vector<std::string>{"5+1", "3+3", "3+1+1+1", "1+1+1+1+1+1"}));
  EXPECT_EQ(rendered(7, C::C),
            (std::vector<std::string>{"6+1", "4+3", "4+2+1", "2+2+2+1"}));
}

TEST(Enumerate, ClassDOfSevenMatchesTableAfterZeroStripping) {
  // 0+0+7, 0+0+6+1, 0+0+5+2, 0+0+4+3, 0+0+4+2+1, 1+1+5, 1+1+2+3, 2+2+3
  const std::set<std::string> table{"7",   "6+1",   "5+2",     "4+3",
                                    "4+2+1", "5+1+1", "3+2+1+1", "3+2+2"};
  const auto got = rendered(7, C::D);
  EXPECT_EQ(got.size(), 8u);
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), table);
}

TEST(Enumerate, EmptyPartitionAtZero) {
  const auto a = enumerate_class(0, C::A);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_TRUE(a.front().empty());
  EXPECT_TRUE(enumerate_class(0, C::C).empty());
  EXPECT_EQ(enumerate_class(0, C::D).size(), 1u);
}

TEST(Enumerate, CutoffIsEnforcedAndConfigurable) {
  EXPECT_THROW(enumerate_class(61, C::A), CapacityError);
  EXPECT_THROW(count_by_enumeration(11, C::B, 10), CapacityError);
  EXPECT_NO_THROW(enumerate_class(61, C::A, 61));
}

TEST(ForEachPartition, CountsMatchPartitionNumbers) {
  // p(n), n = 0..20
  const std::uint64_t expected[] = {1,  1,  2,  3,   5,   7,   11,  15,  22,  30, 42,
                                    56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
  for (std::uint32_t n = 0; n <= 20; ++n) {
    std::uint64_t seen = 0;
    for_each_partition(n, [&](std::span<const Part>) { ++seen; });
    EXPECT_EQ(seen, expected[n]) << n;
    EXPECT_EQ(seen, oracle::all_partitions(n).size());
  }
}

TEST(Enumerate, StrictlyDecreasingOrderNoDuplicatesAllMembers) {
  for (std::uint32_t n = 0; n <= 22; ++n) {
    for (PartitionClassId c : kAllClasses) {
      const auto list = enumerate_class(n, c);
      for (std::size_t i = 0; i < list.size(); ++i) {
        ASSERT_TRUE(is_in_class(list[i], c));
        ASSERT_EQ(list[i].weight(), n);
        if (i) ASSERT_GT(list[i - 1], list[i]) << "n=" << n;
      }
      ASSERT_EQ(list.size(), n == 0 && c == C::C ? 0 : oracle::count(n, class_label(c)));
    }
  }
}

TEST(Enumerate, ClassDIsTwiceDistinctOfOneLess) {
  for (std::uint32_t n = 2; n <= 30; ++n)
    EXPECT_EQ(enumerate_class(n, C::D).size(), 2 * enumerate_class(n - 1, C::A).size())
        << n;
}
