#include <set>

#include <gtest/gtest.h>

#include "fishburn/claims.hpp"
#include "fishburn/tables.hpp"
#include "oracle.hpp"

namespace fishburn {
namespace {

TEST(TablesTest, RegistryShape) {
  const auto& reg = table_registry();
  std::set<std::string> names;
  for (const auto& t : reg) names.insert(t.name);
  EXPECT_EQ(names, (std::set<std::string>{"size3", "size3-ind", "size4-single", "size4-catalan", "size4-ind"}));
  EXPECT_EQ(find_table("size4-ind").rows.size(), 19u);
  EXPECT_EQ(find_table("size4-single").rows.size(), 10u);
  EXPECT_EQ(find_table("size4-catalan").rows.front().patterns.size(), 8u);
  try {
    find_table("size5");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownTable);
  }
}

TEST(TablesTest, EverySize4PatternAppearsOnceInIndecomposableTable) {
  std::multiset<std::string> seen;
  for (const auto& row : find_table("size4-ind").rows) seen.insert(row.patterns.begin(), row.patterns.end());
  EXPECT_EQ(seen.size(), 24u);
  EXPECT_EQ(std::set<std::string>(seen.begin(), seen.end()).size(), 24u);
}

TEST(TablesTest, PublishedPrefixesAgreeWithOracle) {
  // Independent recount of the first six published terms of every row.
  for (const auto& t : table_registry()) {
    for (const auto& row : t.rows) {
      for (const auto& pat : row.patterns) {
        const oracle::Word sigma = Permutation::parse(pat).word();
        for (int n = 1; n <= 6; ++n) {
          EXPECT_EQ(static_cast<long long>(oracle::count(n, {&sigma, t.flags.fishburn, t.flags.indecomposable})),
                    row.published[static_cast<std::size_t>(n - 1)])
              << t.name << " " << pat << " n=" << n;
        }
      }
    }
  }
}

TEST(TablesTest, ComputedTablesMatchPublished) {
  for (const auto& t : table_registry()) {
    const auto c = compute_table(t, 7);
    EXPECT_TRUE(c.all_match()) << t.name;
    ASSERT_EQ(c.rows.size(), t.rows.size());
  }
}

TEST(TablesTest, RenderFormats) {
  const auto c = compute_table(find_table("size3"), 5);
  EXPECT_EQ(render_table(c, OutputFormat::Plain),
            "# sigma-avoiding Fishburn permutations (n = 1..5)\n"
            "123, 132, 213, 312 | 1, 2, 4, 8, 16 | A000079\n"
            "231 | 1, 2, 5, 14, 42 | A000108\n"
            "321 | 1, 2, 4, 9, 22 | A105633\n");
  EXPECT_EQ(render_table(c, OutputFormat::Csv),
            "patterns,oeis,1,2,3,4,5\n"
            "123 132 213 312,A000079,1,2,4,8,16\n"
            "231,A000108,1,2,5,14,42\n"
            "321,A105633,1,2,4,9,22\n");
  const auto j = nlohmann::json::parse(render_table(c, OutputFormat::Json));
  EXPECT_EQ(j["table"], "size3");
  EXPECT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][1]["sequence"]["terms"][4], "42");
  // Byte-stable across repeated runs.
  EXPECT_EQ(render_table(compute_table(find_table("size3"), 5), OutputFormat::Json),
            render_table(c, OutputFormat::Json));
}

TEST(TablesTest, EmptyOeisRendersAsDash) {
  const auto c = compute_table(find_table("size4-single"), 4);
  EXPECT_NE(render_table(c, OutputFormat::Plain).find("1432 | 1, 2, 5, 14 | -\n"), std::string::npos);
}

TEST(ClaimsTest, RegistryIdsUniqueAndFindable) {
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_EQ(&find_claim(c.id), &c);
    EXPECT_GE(c.default_max_n, 1);
  }
  try {
    find_claim("thm-none");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownClaim);
  }
}

TEST(ClaimsTest, StatusWords) {
  ClaimResult ok;
  ClaimResult bad;
  bad.check(false, "x");
  const Claim& thm = find_claim("thm-pow2");
  const Claim& conj = find_claim("conj-2413-class");
  EXPECT_EQ(status_word(thm, ok), "pass");
  EXPECT_EQ(status_word(thm, bad), "FAIL");
  EXPECT_EQ(status_word(conj, ok), "consistent");
  EXPECT_EQ(status_word(conj, bad), "COUNTEREXAMPLE");
}

// Small-n sweep. Partition claims need larger n before the sequences
// separate, so they run at their defaults below.
TEST(ClaimsTest, AllClaimsAtSmallN) {
  const std::set<std::string> needs_default = {"wilf-size4-classes", "conj-ind-size4-classes"};
  for (const auto& c : claim_registry()) {
    if (needs_default.count(c.id)) continue;
    const ClaimResult r = c.checker(5);
    EXPECT_FALSE(r.lines.empty()) << c.id;
    if (c.id == "thm-1423-1243") {
      EXPECT_FALSE(r.passed) << "alpha-1324 collides at n = 5";
    } else {
      EXPECT_TRUE(r.passed) << c.id;
    }
  }
}

TEST(ClaimsTest, PartitionClaimsAtDefaultSize) {
  for (const char* id : {"wilf-size4-classes", "conj-ind-size4-classes"}) {
    const Claim& c = find_claim(id);
    EXPECT_TRUE(c.checker(c.default_max_n).passed) << id;
  }
  // At n = 5 the size-4 sequences have not yet separated.
  EXPECT_FALSE(find_claim("conj-ind-size4-classes").checker(5).passed);
}

TEST(ClaimsTest, A082582FirstReturnDecomposition) {
  EXPECT_TRUE(find_claim("thm-a082582").checker(9).passed);
}

TEST(ClaimsTest, Alpha1423HoldsBelowCollisionSize) {
  EXPECT_TRUE(find_claim("thm-1423-1243").checker(4).passed);
}

}  // namespace
}  // namespace fishburn
