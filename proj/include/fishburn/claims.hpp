#pragma once

// Registry of checkable enumeration and bijection claims. Each checker runs
// up to a caller-chosen size and reports line by line.

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fishburn/bijections.hpp"
#include "fishburn/dyck.hpp"
#include "fishburn/enumerate.hpp"
#include "fishburn/series.hpp"
#include "fishburn/tables.hpp"

namespace fishburn {

enum class ClaimKind { Theorem, Conjecture };

struct ClaimResult {
  bool passed = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    passed = passed && ok;
  }
};

struct Claim {
  std::string id;
  std::string description;
  ClaimKind kind;
  int default_max_n;
  std::function<ClaimResult(int max_n)> checker;
};

namespace detail {

inline Permutation perm(std::string_view s) { return Permutation::parse(s); }

inline IntSeq fishburn_seq(std::string_view sigma, int max_n, bool indecomposable = false) {
  return counting_sequence(perm(sigma), ClassFlags{true, indecomposable}, max_n);
}

inline std::string seq_text(const IntSeq& s) { return "[" + join_terms(s) + "]"; }

template <class F>
void check_closed_form(ClaimResult& r, const std::string& label, const IntSeq& counted, F&& closed) {
  IntSeq expected = tabulate(1, counted.last_index(), closed);
  r.check(counted == expected, label + ": counted " + seq_text(counted) + " vs closed form " + seq_text(expected));
}

inline void check_maps(ClaimResult& r, const std::vector<std::string>& names, int max_n) {
  for (const auto& name : names) {
    for (int n = 1; n <= max_n; ++n) {
      const MapReport rep = verify_map(name, n);
      std::ostringstream os;
      os << name << " n=" << n << ": |domain|=" << rep.domain_size << " |codomain|=" << rep.codomain_size
         << " injective=" << rep.injective << " surjective=" << rep.surjective
         << " fishburn=" << rep.fishburn_preserved << "/" << rep.domain_size;
      if (rep.inverse_failures) os << " inverse_failures=" << rep.inverse_failures;
      if (!rep.counterexamples.empty()) os << " first counterexample: " << rep.counterexamples.front();
      r.check(rep.certified(), os.str());
    }
  }
}

// Compares a computed Wilf partition against an expected grouping.
inline void check_partition(ClaimResult& r, const std::vector<WilfClass>& got,
                            const std::vector<std::vector<std::string>>& expected) {
  std::vector<std::vector<std::string>> got_names;
  for (const auto& g : got) {
    std::vector<std::string> names;
    for (const auto& p : g.patterns) names.push_back(p.to_string());
    std::sort(names.begin(), names.end());
    got_names.push_back(std::move(names));
  }
  auto sorted = [](std::vector<std::vector<std::string>> v) {
    for (auto& x : v) std::sort(x.begin(), x.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  r.check(sorted(got_names) == sorted(expected), std::to_string(got.size()) + " classes, expected " +
                                                      std::to_string(expected.size()) + " with the published grouping");
}

inline std::vector<Permutation> size4_patterns() { return all_permutations(4); }

inline ClaimResult check_table(std::string_view name, int max_n) {
  ClaimResult r;
  const ComputedTable t = compute_table(find_table(name), max_n);
  for (const auto& row : t.rows) {
    r.check(row.members_agree && row.matches_published,
            join(row.patterns, ", ") + ": " + seq_text(row.sequence) + (row.members_agree ? "" : " (members disagree)"));
  }
  return r;
}

}  // namespace detail

inline const std::vector<Claim>& claim_registry() {
  using detail::fishburn_seq;
  using detail::perm;
  static const std::vector<Claim> claims = {
      {"fishburn-numbers", "|F_n| equals the coefficient of q^n in 1 + sum prod (1-(1-q)^j)", ClaimKind::Theorem, 8,
       [](int max_n) {
         ClaimResult r;
         const IntSeq counted = counting_sequence(std::nullopt, ClassFlags{true, false}, max_n);
         const IntSeq xi = fishburn_numbers(max_n);
         IntSeq xi1(1, std::vector<BigInt>(xi.terms.begin() + 1, xi.terms.end()));
         r.check(counted == xi1, "|F_n| " + detail::seq_text(counted) + " vs xi " + detail::seq_text(xi1));
         return r;
       }},
      {"eq-231-catalan", "F_n(231) = Av_n(231), hence F_n(231) = C_n", ClaimKind::Theorem, 9,
       [](int max_n) {
         ClaimResult r;
         for (int n = 1; n <= max_n; ++n) {
           r.check(classes_equal_as_sets(ClassSpec{n, perm("231"), {}}, ClassSpec::fishburn_avoiding(n, perm("231"))),
                   "n=" + std::to_string(n) + ": Av_n(231) == F_n(231) as sets");
         }
         detail::check_closed_form(r, "231", fishburn_seq("231", max_n), [](int n) { return catalan(n); });
         return r;
       }},
      {"thm-pow2", "F_n(sigma) = 2^(n-1) for sigma in {123,132,213,312}", ClaimKind::Theorem, 9,
       [](int max_n) {
         ClaimResult r;
         for (const char* s : {"123", "132", "213", "312"}) {
           detail::check_closed_form(r, s, fishburn_seq(s, max_n), f_pow2);
         }
         return r;
       }},
      {"thm-321-dyck", "F_n(321) is in bijection with UUDU-avoiding Dyck paths; closed formula", ClaimKind::Theorem, 9,
       [](int max_n) {
         ClaimResult r;
         for (int n = 1; n <= max_n; ++n) {
           bool round_trip = true;
           bool equivalence = true;
           for (const auto& pi : generate(ClassSpec{n, perm("321"), {}})) {
             const DyckPath p = perm_to_dyck(pi);
             round_trip = round_trip && dyck_to_perm(p) == pi;
             equivalence = equivalence && (is_fishburn(pi) == avoids_uudu(p));
           }
           std::uint64_t paths = 0;
           for (const auto& p : all_dyck_paths(n)) paths += avoids_uudu(p) ? 1 : 0;
           const BigInt closed = f321_closed(n);
           const std::uint64_t counted = count(ClassSpec::fishburn_avoiding(n, perm("321")));
           r.check(round_trip && equivalence && closed == paths && closed == counted,
                   "n=" + std::to_string(n) + ": round trip, Fishburn <=> UUDU-avoiding, " + std::to_string(paths) +
                       " paths, closed form " + closed.str() + ", |F_n(321)| = " + std::to_string(counted));
         }
         return r;
       }},
      {"lem-invert", "indecomposable Fishburn counts are the inverse invert transform of |F_n|", ClaimKind::Theorem, 8,
       [](int max_n) {
         ClaimResult r;
         const IntSeq all = counting_sequence(std::nullopt, ClassFlags{true, false}, max_n);
         const IntSeq ind = counting_sequence(std::nullopt, ClassFlags{true, true}, max_n);
         const IntSeq transformed = inverse_invert_transform(all);
         r.check(transformed == ind,
                 "transform " + detail::seq_text(transformed) + " vs counted " + detail::seq_text(ind));
         const std::vector<long long> published{1, 1, 2, 6, 23, 104, 534, 3051, 19155, 130997};
         bool match = true;
         for (int n = 1; n <= std::min<int>(max_n, 10); ++n) match = match && ind.term(n) == published[n - 1];
         r.check(match, "matches the published prefix 1, 1, 2, 6, 23, 104, 534, 3051, 19155, 130997");
         return r;
       }},
      {"thm-if123", "IF_n(123) = 2^(n-1) - (n-1)", ClaimKind::Theorem, 9,
       [](int max_n) {
         ClaimResult r;
         detail::check_closed_form(r, "123", fishburn_seq("123", max_n, true), if123);
         return r;
       }},
      {"thm-if132-213", "IF_n(132) = IF_n(213) = 2^(n-2)", ClaimKind::Theorem, 9,
       [](int max_n) {
         ClaimResult r;
         for (const char* s : {"132", "213"}) detail::check_closed_form(r, s, fishburn_seq(s, max_n, true), if132_213);
         return r;
       }},
      {"thm-invert-size3", "IF(x) = F(x)/(1+F(x)) for sigma in {231,312,321}; IF_n(231) = C_(n-1), IF_n(312) = 1",
       ClaimKind::Theorem, 9,
       [](int max_n) {
         ClaimResult r;
         for (const char* s : {"231", "312", "321"}) {
           const IntSeq ind = fishburn_seq(s, max_n, true);
           const IntSeq t = inverse_invert_transform(fishburn_seq(s, max_n));
           r.check(t == ind, std::string(s) + ": transform " + detail::seq_text(t) + " vs counted " +
                                 detail::seq_text(ind));
         }
         detail::check_closed_form(r, "IF(231) = C_(n-1)", fishburn_seq("231", max_n, true),
                                   [](int n) { return catalan(n - 1); });
         detail::check_closed_form(r, "IF(312) = 1", fishburn_seq("312", max_n, true), [](int) { return BigInt(1); });
         return r;
       }},
      {"thm-a082582", "IF_n(321) is A082582, via the first-return decomposition", ClaimKind::Theorem, 9,
       [](int max_n) {
         ClaimResult r;
         const IntSeq counted = fishburn_seq("321", max_n, true);
         const IntSeq rec = a082582(max_n);
         r.check(counted == rec, "counted " + detail::seq_text(counted) + " vs recurrence " + detail::seq_text(rec));
         // First-return decomposition of the corresponding Dyck paths. A
         // return at (j, j+1) with j <= n-2 leaves an A_j prefix followed by
         // an arbitrary UUDU-free path of semilength n-j-1.
         const IntSeq all321 = fishburn_seq("321", max_n);
         for (int n = 4; n <= max_n; ++n) {
           std::map<int, std::uint64_t> by_split;
           for (const auto& pi : generate(ClassSpec{n, perm("321"), {true, true}})) {
             ++by_split[first_return_split(perm_to_dyck(pi))];
           }
           bool ok = by_split[n - 1] == rec.term(n - 1);
           BigInt total = by_split[n - 1];
           for (int j = 2; j <= n - 2; ++j) {
             ok = ok && by_split[j] == rec.term(j) * all321.term(n - j - 1);
             total += rec.term(j) * all321.term(n - j - 1);
           }
           ok = ok && total == rec.term(n);
           r.check(ok, "n=" + std::to_string(n) + ": first-return split counts match a_(n-1) and a_j F_(n-j-1)(321)");
         }
         return r;
       }},
      {"thm-1342", "F_n(1342) is the binomial transform of the Catalan numbers", ClaimKind::Theorem, 8,
       [](int max_n) {
         ClaimResult r;
         detail::check_closed_form(r, "1342", fishburn_seq("1342", max_n), f1342);
         return r;
       }},
      {"thm-3142-231", "F_n(3142) = F_n(231)", ClaimKind::Theorem, 8,
       [](int max_n) {
         ClaimResult r;
         for (int n = 1; n <= max_n; ++n) {
           r.check(classes_equal_as_sets(n, ClassSpec::fishburn_avoiding(n, perm("3142")),
                                         ClassSpec::fishburn_avoiding(n, perm("231"))),
                   "n=" + std::to_string(n) + ": F_n(3142) == F_n(231) as sets");
         }
         return r;
       }},
      {"thm-west", "West's bijection: F_n(1234) ~ F_n(1243) and F_n(2134) ~ F_n(2143)", ClaimKind::Theorem, 7,
       [](int max_n) {
         ClaimResult r;
         detail::check_maps(r, {"phi12", "phi21"}, max_n);
         return r;
       }},
      {"thm-1423-1243", "alpha: F_n(1423) -> F_n(1243) with inverse beta; alpha: F_n(1324) -> F_n(1234)",
       ClaimKind::Theorem, 7,
       [](int max_n) {
         ClaimResult r;
         detail::check_maps(r, {"alpha", "beta", "alpha-1324"}, max_n);
         return r;
       }},
      {"thm-3142-3124-1324", "alpha1: F_n(3142) -> F_n(3124), alpha2: F_n(3124) -> F_n(1324)", ClaimKind::Theorem, 7,
       [](int max_n) {
         ClaimResult r;
         detail::check_maps(r, {"alpha1", "alpha2", "alpha2-alpha1"}, max_n);
         return r;
       }},
      {"thm-3142-2143", "gamma: F_n(3142) -> F_n(2143)", ClaimKind::Theorem, 7,
       [](int max_n) {
         ClaimResult r;
         detail::check_maps(r, {"gamma"}, max_n);
         return r;
       }},
      {"tab-catalan-class", "F_n(sigma) = C_n for the eight Catalan-class size-4 patterns", ClaimKind::Theorem, 8,
       [](int max_n) {
         ClaimResult r;
         for (const char* s : {"1234", "1243", "1324", "1423", "2134", "2143", "3124", "3142"}) {
           detail::check_closed_form(r, s, fishburn_seq(s, max_n), [](int n) { return catalan(n); });
         }
         return r;
       }},
      {"wilf-size4-classes", "at least 13 Wilf classes among size-4 patterns", ClaimKind::Theorem, 8,
       [](int max_n) {
         ClaimResult r;
         const auto parts = wilf_partition(detail::size4_patterns(), max_n, ClassFlags{true, false});
         r.check(parts.size() >= 13, std::to_string(parts.size()) + " distinct counting sequences through n=" +
                                         std::to_string(max_n));
         return r;
       }},
      {"conj-2413-class", "F_n(2413) ~ F_n(2431) ~ F_n(3241)", ClaimKind::Conjecture, 8,
       [](int max_n) {
         ClaimResult r;
         const auto parts = wilf_partition({perm("2413"), perm("2431"), perm("3241")}, max_n, {true, false});
         r.check(parts.size() == 1, "common sequence " + detail::seq_text(parts.front().sequence));
         return r;
       }},
      {"conj-3214-class", "F_n(3214) ~ F_n(4132) ~ F_n(4213)", ClaimKind::Conjecture, 8,
       [](int max_n) {
         ClaimResult r;
         const auto parts = wilf_partition({perm("3214"), perm("4132"), perm("4213")}, max_n, {true, false});
         r.check(parts.size() == 1, "common sequence " + detail::seq_text(parts.front().sequence));
         return r;
       }},
      {"rem-ind-3142", "IF_n(3142) = C_(n-1)", ClaimKind::Theorem, 8,
       [](int max_n) {
         ClaimResult r;
         detail::check_closed_form(r, "3142", fishburn_seq("3142", max_n, true), [](int n) { return catalan(n - 1); });
         return r;
       }},
      {"conj-ind-size4-classes", "19 Wilf classes of indecomposable Fishburn permutations, size-4 patterns",
       ClaimKind::Conjecture, 8,
       [](int max_n) {
         ClaimResult r;
         const auto parts = wilf_partition(detail::size4_patterns(), max_n, ClassFlags{true, true});
         std::vector<std::vector<std::string>> expected;
         for (const auto& row : find_table("size4-ind").rows) expected.push_back(row.patterns);
         detail::check_partition(r, parts, expected);
         return r;
       }},
      {"tab-size3", "table: sigma-avoiding Fishburn permutations", ClaimKind::Theorem, 9,
       [](int max_n) { return detail::check_table("size3", max_n); }},
      {"tab-size3-ind", "table: sigma-avoiding indecomposable Fishburn permutations", ClaimKind::Theorem, 9,
       [](int max_n) { return detail::check_table("size3-ind", max_n); }},
      {"tab-size4-single", "table: equivalence classes with a single pattern", ClaimKind::Theorem, 8,
       [](int max_n) { return detail::check_table("size4-single", max_n); }},
      {"tab-size4-ind", "table: indecomposable counts for size-4 patterns", ClaimKind::Conjecture, 8,
       [](int max_n) { return detail::check_table("size4-ind", max_n); }},
  };
  return claims;
}

inline const Claim& find_claim(std::string_view id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::UnknownClaim, "no claim with id '" + std::string(id) + "'");
}

/// "pass" / "FAIL" for theorems, "consistent" / "COUNTEREXAMPLE" for conjectures.
inline std::string status_word(const Claim& c, const ClaimResult& r) {
  if (c.kind == ClaimKind::Conjecture) return r.passed ? "consistent" : "COUNTEREXAMPLE";
  return r.passed ? "pass" : "FAIL";
}

}  // namespace fishburn
