#include <set>

#include <gtest/gtest.h>

#include "fishburn/enumerate.hpp"
#include "oracle.hpp"

namespace fishburn {
namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<oracle::Word> as_words(const std::vector<Permutation>& v) {
  std::vector<oracle::Word> out;
  for (const auto& p : v) out.push_back(p.word());
  return out;
}

TEST(EnumerateTest, CountExamples) {
  EXPECT_EQ(count(ClassSpec::fishburn_avoiding(4, P("231"))), 14u);
  EXPECT_EQ(count(ClassSpec::fishburn_avoiding(5, P("123"))), 16u);
  EXPECT_EQ(count(ClassSpec::fishburn_avoiding(6, P("4321"), true)), 66u);
  EXPECT_EQ(count(ClassSpec{3, std::nullopt, {true, false}}), 5u);
}

TEST(EnumerateTest, SmallEdgeCases) {
  EXPECT_EQ(count(ClassSpec::fishburn_avoiding(1, P("1"))), 0u);
  EXPECT_EQ(count(ClassSpec::fishburn_avoiding(1, P("12"))), 1u);
  EXPECT_EQ(count(ClassSpec::fishburn_avoiding(3, P("1234"))), 5u);
  EXPECT_EQ(count(ClassSpec{1, std::nullopt, {true, true}}), 1u);
}

TEST(EnumerateTest, InvalidSpecs) {
  for (int n : {0, -3}) {
    try {
      count(ClassSpec::fishburn_avoiding(n, P("231")));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
    }
  }
  EXPECT_THROW(count(ClassSpec{3, Permutation{}, {true, false}}), Error);
  EXPECT_THROW(counting_sequence(P("12"), {true, false}, 0), Error);
}

TEST(EnumerateTest, GenerateMatchesOracleInOrder) {
  const std::vector<const char*> patterns = {"123", "231", "321", "1342", "2413", "3142", "4321"};
  for (int n = 1; n <= 7; ++n) {
    for (const char* s : patterns) {
      const oracle::Word sigma = P(s).word();
      for (bool ind : {false, true}) {
        const auto got = generate(ClassSpec::fishburn_avoiding(n, P(s), ind));
        const auto want = oracle::members(n, {&sigma, true, ind});
        ASSERT_EQ(as_words(got), want) << "n=" << n << " sigma=" << s << " ind=" << ind;
      }
    }
  }
}

TEST(EnumerateTest, NoPatternOrNoFishburnFilter) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(as_words(generate(ClassSpec{n, std::nullopt, {true, false}})),
              oracle::members(n, {nullptr, true, false}));
    const oracle::Word sigma = P("132").word();
    EXPECT_EQ(as_words(generate(ClassSpec{n, P("132"), {false, false}})), oracle::members(n, {&sigma, false, false}));
    EXPECT_EQ(as_words(generate(ClassSpec{n, std::nullopt, {false, true}})),
              oracle::members(n, {nullptr, false, true}));
  }
}

TEST(EnumerateTest, MembersSatisfyTheClassAndAreDistinct) {
  const Permutation sigma = P("2143");
  for (int n = 1; n <= 8; ++n) {
    const auto all = generate(ClassSpec::fishburn_avoiding(n, sigma, true));
    std::set<Permutation> seen(all.begin(), all.end());
    EXPECT_EQ(seen.size(), all.size());
    for (const auto& p : all) {
      ASSERT_EQ(p.size(), n);
      ASSERT_TRUE(is_fishburn(p));
      ASSERT_TRUE(avoids(p, sigma));
      ASSERT_TRUE(is_indecomposable(p));
    }
    EXPECT_EQ(all.size(), count(ClassSpec::fishburn_avoiding(n, sigma, true)));
  }
}

TEST(EnumerateTest, CountIndependentOfWorkers) {
  for (int n = 1; n <= 8; ++n) {
    const auto spec = ClassSpec::fishburn_avoiding(n, P("3412"));
    const auto base = count(spec, 1);
    for (unsigned w : {2u, 3u, 8u, 32u}) EXPECT_EQ(count(spec, w), base) << n << " " << w;
  }
}

TEST(EnumerateTest, TotalFishburnCounts) {
  const std::vector<std::uint64_t> expected = {1, 2, 5, 15, 53, 217, 1014, 5335};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(count(ClassSpec{n, std::nullopt, {true, false}}), expected[static_cast<std::size_t>(n - 1)]);
  }
}

TEST(EnumerateTest, CountingSequence) {
  const IntSeq s = counting_sequence(P("231"), {true, false}, 6);
  EXPECT_EQ(s.start, 1);
  EXPECT_EQ(join_terms(s), "1, 2, 5, 14, 42, 132");
}

TEST(EnumerateTest, SetEquality) {
  // Fishburn and 231-avoiding is the same set as 231-avoiding.
  for (int n = 1; n <= 7; ++n) {
    EXPECT_TRUE(classes_equal_as_sets(n, ClassSpec{0, P("231"), {true, false}}, ClassSpec{0, P("231"), {false, false}}));
  }
  EXPECT_FALSE(classes_equal_as_sets(4, ClassSpec{0, P("123"), {true, false}}, ClassSpec{0, P("132"), {true, false}}));
  EXPECT_THROW(classes_equal_as_sets(ClassSpec{3, P("1"), {}}, ClassSpec{4, P("1"), {}}), Error);
}

TEST(EnumerateTest, WilfPartitionOfSize3) {
  const auto groups = wilf_partition(all_permutations(3), 6, {true, false});
  ASSERT_EQ(groups.size(), 3u);
  EXPECT_EQ(groups[0].patterns, (std::vector<Permutation>{P("123"), P("132"), P("213"), P("312")}));
  EXPECT_EQ(groups[1].patterns, (std::vector<Permutation>{P("231")}));
  EXPECT_EQ(groups[2].patterns, (std::vector<Permutation>{P("321")}));
}

TEST(EnumerateTest, AllPermutations) {
  const auto p = all_permutations(4);
  EXPECT_EQ(p.size(), 24u);
  EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
  EXPECT_EQ(as_words(p), oracle::all_words(4));
}

}  // namespace
}  // namespace fishburn
