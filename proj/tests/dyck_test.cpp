#include <set>

#include <gtest/gtest.h>

#include "fishburn/dyck.hpp"
#include "fishburn/series.hpp"
#include "oracle.hpp"

namespace fishburn {
namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

TEST(DyckTest, WorkedExample) {
  EXPECT_EQ(perm_to_dyck(P("351264")).steps(), "UUUDUUDDDUDD");
  EXPECT_EQ(dyck_to_perm(DyckPath::parse("UUUDUUDDDUDD")), P("351264"));
}

TEST(DyckTest, SmallCases) {
  EXPECT_EQ(perm_to_dyck(Permutation{}).steps(), "");
  EXPECT_EQ(perm_to_dyck(P("1")).steps(), "UD");
  EXPECT_EQ(perm_to_dyck(P("12")).steps(), "UDUD");
  EXPECT_EQ(perm_to_dyck(P("21")).steps(), "UUDD");
  EXPECT_EQ(dyck_to_perm(DyckPath{}), Permutation{});
}

TEST(DyckTest, RejectsMalformedPaths) {
  for (const char* s : {"DU", "UUD", "UXD", "UDD"}) {
    try {
      DyckPath::parse(s);
      FAIL() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedPath);
    }
  }
}

TEST(DyckTest, RejectsPermutationsContaining321) {
  try {
    perm_to_dyck(P("321"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Not321Avoider);
  }
}

TEST(DyckTest, BijectionWith321Avoiders) {
  const oracle::Word p321{3, 2, 1};
  for (int n = 1; n <= 8; ++n) {
    const auto avoiders = oracle::members(n, {&p321, false, false});
    std::set<DyckPath> images;
    for (const auto& w : avoiders) {
      const Permutation pi(w);
      const DyckPath d = perm_to_dyck(pi);
      ASSERT_EQ(d.semilength(), n);
      ASSERT_EQ(dyck_to_perm(d), pi);
      images.insert(d);
      // Fishburn 321-avoiders are exactly the UUDU-free paths.
      EXPECT_EQ(is_fishburn(pi), avoids_uudu(d)) << pi;
      // Indecomposable exactly when the path stays off the diagonal inside.
      EXPECT_EQ(is_indecomposable(pi), !touches_diagonal_strictly_inside(d)) << pi;
    }
    const auto paths = all_dyck_paths(n);
    EXPECT_EQ(images.size(), avoiders.size());
    EXPECT_EQ(paths.size(), avoiders.size());
    EXPECT_EQ(std::set<DyckPath>(paths.begin(), paths.end()), images);
  }
}

TEST(DyckTest, AllPathsEnumeration) {
  const auto p3 = all_dyck_paths(3);
  ASSERT_EQ(p3.size(), 5u);
  EXPECT_EQ(p3.front().steps(), "UUUDDD");
  EXPECT_EQ(p3.back().steps(), "UDUDUD");
  // Lexicographic with U before D.
  EXPECT_TRUE(std::is_sorted(p3.begin(), p3.end(), [](const DyckPath& a, const DyckPath& b) { return a > b; }));
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(all_dyck_paths(n).size(), catalan(n));
}

TEST(DyckTest, UuduCountMatchesClosedForm) {
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t c = 0;
    for (const auto& d : all_dyck_paths(n)) c += avoids_uudu(d) ? 1 : 0;
    EXPECT_EQ(f321_closed(n), c) << n;
  }
}

TEST(DyckTest, DiagonalContact) {
  EXPECT_TRUE(touches_diagonal_strictly_inside(DyckPath::parse("UDUD")));
  EXPECT_FALSE(touches_diagonal_strictly_inside(DyckPath::parse("UUDD")));
  EXPECT_FALSE(touches_diagonal_strictly_inside(DyckPath::parse("UD")));
  EXPECT_FALSE(touches_diagonal_strictly_inside(DyckPath{}));
}

TEST(DyckTest, FirstReturnSplit) {
  EXPECT_EQ(first_return_split(DyckPath::parse("UUDD")), 1);
  EXPECT_EQ(first_return_split(DyckPath::parse("UUDUDD")), 1);
  EXPECT_EQ(first_return_split(DyckPath::parse("UUUDDD")), 2);
  EXPECT_EQ(first_return_split(DyckPath::parse("UUUDDUDD")), 2);
  for (const char* s : {"UD", "UDUD", "UUDDUD"}) {
    try {
      first_return_split(DyckPath::parse(s));
      FAIL() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NoReturn);
    }
  }
}

TEST(DyckTest, FirstReturnSplitIsInRange) {
  for (int n = 2; n <= 9; ++n) {
    for (const auto& d : all_dyck_paths(n)) {
      if (touches_diagonal_strictly_inside(d)) continue;
      const int x = first_return_split(d);
      EXPECT_GE(x, 1);
      EXPECT_LE(x, n - 1);
    }
  }
}

}  // namespace
}  // namespace fishburn
