#include <set>

#include <gtest/gtest.h>

#include "fishburn/bijections.hpp"
#include "oracle.hpp"

namespace fishburn {
namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

TEST(MaxValuesTest, Example) {
  EXPECT_EQ(max_values(P("531968274"), P("123")).values, (std::set<int>{4, 7, 8}));
  EXPECT_TRUE(max_values(P("321"), P("12")).values.empty());
}

TEST(WestPhiTest, WorkedExample) {
  EXPECT_EQ(west_phi(P("531968274"), P("12")), P("531967248"));
  EXPECT_TRUE(avoids(P("531967248"), P("1243")));
}

TEST(WestPhiTest, IdentityWhenNoTauOccurrence) {
  EXPECT_EQ(west_phi(P("4321"), P("12")), P("4321"));
  EXPECT_TRUE(trace_west_phi(P("4321"), P("12")).iterations.empty());
}

TEST(WestPhiTest, RejectsInputsOutsideDomain) {
  try {
    west_phi(P("1234"), P("12"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainViolation);
  }
}

TEST(WestPhiTest, BijectiveOnFullSymmetricGroup) {
  for (const char* tau : {"12", "21"}) {
    const Permutation t = P(tau);
    const oracle::Word src = direct_sum(t, P("12")).word();
    const oracle::Word dst = direct_sum(t, P("21")).word();
    for (int n = 1; n <= 7; ++n) {
      std::set<Permutation> image;
      const auto domain = oracle::members(n, {&src, false, false});
      for (const auto& w : domain) {
        const Permutation out = west_phi(Permutation(w), t);
        ASSERT_FALSE(oracle::contains(out.word(), dst)) << w.size();
        image.insert(out);
      }
      EXPECT_EQ(image.size(), domain.size());
      EXPECT_EQ(image.size(), oracle::count(n, {&dst, false, false}));
    }
  }
}

TEST(AlphaTest, WorkedExample) {
  const MapTrace t = trace_alpha(P("2135476"));
  EXPECT_EQ(t.output, P("2175346"));
  ASSERT_EQ(t.iterations.size(), 2u);
  EXPECT_EQ(t.iterations[0].result, P("2153476"));
  EXPECT_EQ(t.iterations[0].rule, "alpha");
}

TEST(AlphaTest, BetaInvertsWorkedExample) {
  EXPECT_EQ(beta(P("2175346")), P("2135476"));
}

TEST(AlphaTest, RejectsUnsupportedPatternsAndDomain) {
  EXPECT_THROW(alpha(P("123"), P("123"), P("132")), Error);
  try {
    alpha(P("1423"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainViolation);
  }
  // 231 is not Fishburn.
  EXPECT_THROW(alpha(P("231")), Error);
}

TEST(AlphaTest, TraceJsonShape) {
  const auto j = to_json(trace_alpha(P("2135476")));
  EXPECT_EQ(j["input"], "2135476");
  EXPECT_EQ(j["output"], "2175346");
  EXPECT_EQ(j["iterations"].size(), 2u);
  EXPECT_EQ(j["iterations"][0]["rule"], "alpha");
}

TEST(GammaTest, WorkedExample) {
  EXPECT_EQ(gamma(P("4312576")), P("5412673"));
}

TEST(GammaTest, OutputsAvoid2143) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pi : generate(ClassSpec::fishburn_avoiding(n, P("3142")))) {
      const Permutation out = gamma(pi);
      ASSERT_TRUE(avoids(out, P("2143"))) << pi;
      ASSERT_TRUE(is_fishburn(out)) << pi;
    }
  }
}

TEST(Alpha12Test, SmallExamples) {
  EXPECT_EQ(alpha1(P("3124")), P("3142"));
  EXPECT_EQ(alpha1(P("12345")), P("12345"));
  EXPECT_EQ(alpha2(P("1324")), P("3124"));
  EXPECT_EQ(alpha2(P("321")), P("321"));
  EXPECT_EQ(gamma(P("12")), P("12"));
  EXPECT_THROW(alpha1(P("3142")), Error);
  EXPECT_THROW(alpha2(P("3124")), Error);
}

TEST(GammaTest, FirstIteration) {
  const MapTrace t = trace_gamma(P("4312576"));
  ASSERT_EQ(t.iterations.size(), 2u);
  EXPECT_EQ(t.iterations[0].result, P("5312674"));
}

TEST(Alpha12Test, ComposedChain) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pi : generate(ClassSpec::fishburn_avoiding(n, P("3142")))) {
      const Permutation mid = alpha1(pi);
      ASSERT_TRUE(avoids(mid, P("3124"))) << pi;
      const Permutation out = alpha2(mid);
      ASSERT_TRUE(avoids(out, P("1324"))) << pi;
    }
  }
}

TEST(RegistryTest, LookupAndErrors) {
  EXPECT_EQ(find_map("alpha").inverse, "beta");
  EXPECT_EQ(find_map("gamma").target, P("2143"));
  try {
    find_map("delta");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownMap);
  }
}

TEST(VerifyMapTest, CertifiedMaps) {
  for (const char* name : {"phi12", "phi21", "alpha", "beta", "alpha1", "alpha2", "alpha2-alpha1", "gamma"}) {
    for (int n = 1; n <= 7; ++n) {
      const MapReport r = verify_map(name, n);
      EXPECT_TRUE(r.certified()) << name << " n=" << n << " " << to_json(r).dump();
      EXPECT_EQ(r.domain_size, r.codomain_size);
    }
  }
}

TEST(VerifyMapTest, DomainSizesMatchOracle) {
  for (const auto& m : map_registry()) {
    const oracle::Word src = m.source.word();
    const oracle::Word dst = m.target.word();
    const MapReport r = verify_map(m.name, 6);
    EXPECT_EQ(r.domain_size, oracle::count(6, {&src, true, false})) << m.name;
    EXPECT_EQ(r.codomain_size, oracle::count(6, {&dst, true, false})) << m.name;
  }
}

// The 1324 -> 1234 variant of alpha collides once n reaches 5.
TEST(VerifyMapTest, ReportsCollisionsForAlpha1324) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(verify_map("alpha-1324", n).certified()) << n;
  const MapReport r = verify_map("alpha-1324", 5);
  EXPECT_FALSE(r.certified());
  EXPECT_FALSE(r.injective);
  EXPECT_FALSE(r.surjective);
  EXPECT_FALSE(r.counterexamples.empty());
  EXPECT_EQ(alpha(P("12354"), P("1324"), P("1234")), P("13254"));
  EXPECT_EQ(alpha(P("12534"), P("1324"), P("1234")), P("13254"));
}

TEST(VerifyMapTest, ReportJson) {
  const auto j = to_json(verify_map("beta", 4));
  EXPECT_EQ(j["map"], "beta");
  EXPECT_EQ(j["certified"], true);
  EXPECT_EQ(j["domain_size"], 14);
}

}  // namespace
}  // namespace fishburn
