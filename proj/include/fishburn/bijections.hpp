#pragma once

// West's greedy bijection and the fixpoint rewriting maps between the
// Catalan-counted classes F_n(sigma), sigma of size 4, plus a harness that
// certifies bijectivity and Fishburn preservation on whole domains.
//
// Occurrence order: "most-left" is the lexicographically smallest position
// tuple, "most-right" the largest when tuples are compared from the last
// index backwards.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fishburn/enumerate.hpp"
#include "fishburn/error.hpp"
#include "fishburn/permutation.hpp"

namespace fishburn {

struct MapStep {
  std::string rule;
  Occurrence occurrence;
  Permutation result;
};

struct MapTrace {
  Permutation input;
  std::vector<MapStep> iterations;
  Permutation output;
};

inline nlohmann::ordered_json to_json(const MapTrace& t) {
  nlohmann::ordered_json j;
  j["input"] = t.input.to_string();
  auto& steps = j["iterations"] = nlohmann::ordered_json::array();
  for (const auto& s : t.iterations) {
    steps.push_back({{"rule", s.rule}, {"occurrence", s.occurrence.positions}, {"result", s.result.to_string()}});
  }
  j["output"] = t.output.to_string();
  return j;
}

/// B_pi(sigma): the maximal entries of all occurrences of sigma in pi.
struct MaxValueSet {
  std::set<int> values;
  Permutation host;
  Permutation pattern;
};

inline MaxValueSet max_values(const Permutation& pi, const Permutation& sigma) {
  MaxValueSet out{{}, pi, sigma};
  if (sigma.empty()) return out;
  for_each_occurrence(pi, sigma, [&](const Occurrence& o) {
    int m = 0;
    for (int p : o.positions) m = std::max(m, pi(p));
    out.values.insert(m);
    return true;
  });
  return out;
}

namespace detail {

inline const Permutation& pattern_12() {
  static const Permutation p{1, 2};
  return p;
}
inline const Permutation& pattern_21() {
  static const Permutation p{2, 1};
  return p;
}

inline void require_domain(const Permutation& pi, const Permutation& source, std::string_view map_name) {
  if (!is_fishburn(pi)) {
    throw Error(ErrorCode::DomainViolation, std::string(map_name) + ": " + pi.to_string() + " is not Fishburn");
  }
  if (contains(pi, source)) {
    throw Error(ErrorCode::DomainViolation,
                std::string(map_name) + ": " + pi.to_string() + " contains " + source.to_string());
  }
}

inline std::optional<Occurrence> most_left(const Permutation& pi, const Permutation& sigma) {
  std::optional<Occurrence> first;
  for_each_occurrence(pi, sigma, [&](const Occurrence& o) {
    first = o;
    return false;
  });
  return first;
}

inline std::optional<Occurrence> most_right(const Permutation& pi, const Permutation& sigma) {
  std::optional<Occurrence> best;
  auto later = [](const Occurrence& a, const Occurrence& b) {
    return std::lexicographical_compare(b.positions.rbegin(), b.positions.rend(), a.positions.rbegin(),
                                        a.positions.rend());
  };
  for_each_occurrence(pi, sigma, [&](const Occurrence& o) {
    if (!best || later(o, *best)) best = o;
    return true;
  });
  return best;
}

// Removes the entry at 1-based position `from` and reinserts it so it ends up
// at 1-based position `to`; entries in between shift by one.
inline Permutation move_entry(const Permutation& pi, int from, int to) {
  std::vector<int> w = pi.word();
  const int v = w[static_cast<std::size_t>(from - 1)];
  w.erase(w.begin() + (from - 1));
  w.insert(w.begin() + (to - 1), v);
  return Permutation::unchecked(std::move(w));
}

inline long long iteration_guard(int n) {
  const long long m = std::max(n, 2);
  return m * m * m * m;
}

enum class Pick { MostLeft, MostRight };

// Shared driver for alpha, beta, alpha1, alpha2: while the current word
// contains `target`, pick an occurrence and move its entry at occurrence
// index `from_idx` to the position of its entry at index `to_idx`.
inline MapTrace run_move_rule(const Permutation& pi, const Permutation& target, Pick pick, int from_idx,
                              int to_idx, const std::string& rule) {
  MapTrace trace{pi, {}, pi};
  Permutation cur = pi;
  const long long guard = iteration_guard(pi.size());
  for (long long it = 0;; ++it) {
    const auto occ = pick == Pick::MostLeft ? most_left(cur, target) : most_right(cur, target);
    if (!occ) break;
    if (it >= guard) {
      throw Error(ErrorCode::NonTermination,
                  rule + " exceeded " + std::to_string(guard) + " iterations on " + pi.to_string());
    }
    const auto& pos = occ->positions;
    cur = move_entry(cur, pos[static_cast<std::size_t>(from_idx)], pos[static_cast<std::size_t>(to_idx)]);
    trace.iterations.push_back({rule, *occ, cur});
  }
  trace.output = cur;
  return trace;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// West's bijection Av(tau + 12) -> Av(tau + 21)

inline MapTrace trace_west_phi(const Permutation& pi, const Permutation& tau) {
  const Permutation source = direct_sum(tau, detail::pattern_12());
  const Permutation target = direct_sum(tau, detail::pattern_21());
  if (contains(pi, source)) {
    throw Error(ErrorCode::DomainViolation, "phi: " + pi.to_string() + " contains " + source.to_string());
  }
  const Permutation tau1 = direct_sum(tau, Permutation{1});
  const MaxValueSet b = max_values(pi, tau1);
  MapTrace trace{pi, {}, pi};
  if (b.values.empty()) return trace;

  const Permutation where = pi.inverse();
  std::vector<int> slots;
  for (int v : b.values) slots.push_back(where(v));
  std::sort(slots.begin(), slots.end());

  std::vector<int> w = pi.word();
  std::set<int> remaining = b.values;
  for (int slot : slots) {
    bool placed = false;
    for (int candidate : remaining) {
      w[static_cast<std::size_t>(slot - 1)] = candidate;
      if (detail::ends_with_occurrence(std::span<const int>(w.data(), static_cast<std::size_t>(slot)),
                                       tau1.values())) {
        remaining.erase(candidate);
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::PostconditionViolated,
                  "phi: no admissible value for position " + std::to_string(slot) + " of " + pi.to_string());
    }
  }
  Permutation out = Permutation::unchecked(std::move(w));
  if (contains(out, target)) {
    throw Error(ErrorCode::PostconditionViolated,
                "phi(" + pi.to_string() + ") = " + out.to_string() + " contains " + target.to_string());
  }
  trace.iterations.push_back({"west-greedy", Occurrence{slots}, out});
  trace.output = out;
  return trace;
}

inline Permutation west_phi(const Permutation& pi, const Permutation& tau) { return trace_west_phi(pi, tau).output; }

// ---------------------------------------------------------------------------
// alpha / beta

/// Move the third entry of the most-left `target` occurrence to the position
/// of its second entry until `target` disappears. Supported instances:
/// 1423 -> 1243 and 1324 -> 1234.
inline MapTrace trace_alpha(const Permutation& pi, const Permutation& source, const Permutation& target) {
  const bool known = (source == Permutation{1, 4, 2, 3} && target == Permutation{1, 2, 4, 3}) ||
                     (source == Permutation{1, 3, 2, 4} && target == Permutation{1, 2, 3, 4});
  if (!known) {
    throw Error(ErrorCode::DomainViolation,
                "alpha is defined for 1423->1243 and 1324->1234, not " + source.to_string() + "->" +
                    target.to_string());
  }
  detail::require_domain(pi, source, "alpha");
  return detail::run_move_rule(pi, target, detail::Pick::MostLeft, 2, 1, "alpha");
}

inline MapTrace trace_alpha(const Permutation& pi) {
  return trace_alpha(pi, Permutation{1, 4, 2, 3}, Permutation{1, 2, 4, 3});
}

inline Permutation alpha(const Permutation& pi, const Permutation& source, const Permutation& target) {
  return trace_alpha(pi, source, target).output;
}

inline Permutation alpha(const Permutation& pi) { return trace_alpha(pi).output; }

/// Move the second entry of the most-right 1423 occurrence to the position
/// of its third entry until 1423 disappears.
inline MapTrace trace_beta(const Permutation& tau) {
  detail::require_domain(tau, Permutation{1, 2, 4, 3}, "beta");
  return detail::run_move_rule(tau, Permutation{1, 4, 2, 3}, detail::Pick::MostRight, 1, 2, "beta");
}

inline Permutation beta(const Permutation& tau) { return trace_beta(tau).output; }

// ---------------------------------------------------------------------------
// alpha1: F_n(3142) -> F_n(3124), alpha2: F_n(3124) -> F_n(1324)

inline MapTrace trace_alpha1(const Permutation& pi) {
  detail::require_domain(pi, Permutation{3, 1, 4, 2}, "alpha1");
  return detail::run_move_rule(pi, Permutation{3, 1, 2, 4}, detail::Pick::MostLeft, 3, 2, "alpha1");
}

inline Permutation alpha1(const Permutation& pi) { return trace_alpha1(pi).output; }

inline MapTrace trace_alpha2(const Permutation& pi) {
  detail::require_domain(pi, Permutation{3, 1, 2, 4}, "alpha2");
  return detail::run_move_rule(pi, Permutation{1, 3, 2, 4}, detail::Pick::MostLeft, 1, 0, "alpha2");
}

inline Permutation alpha2(const Permutation& pi) { return trace_alpha2(pi).output; }

// ---------------------------------------------------------------------------
// gamma: F_n(3142) -> F_n(2143)

namespace detail {

struct GammaChoice {
  Occurrence occurrence;  // (i, j, k, l_m)
};

// Most-left 213 occurrence (i,j,k) admitting some l > k with
// pi(i) < pi(l) < pi(k); l_m minimises pi(l) among those.
inline std::optional<GammaChoice> gamma_choice(const Permutation& pi) {
  std::optional<GammaChoice> choice;
  for_each_occurrence(pi, Permutation{2, 1, 3}, [&](const Occurrence& o) {
    const int i = o.positions[0];
    const int k = o.positions[2];
    int best_pos = 0;
    for (int l = k + 1; l <= pi.size(); ++l) {
      if (pi(l) > pi(i) && pi(l) < pi(k) && (best_pos == 0 || pi(l) < pi(best_pos))) best_pos = l;
    }
    if (best_pos == 0) return true;
    choice = GammaChoice{Occurrence{{i, o.positions[1], k, best_pos}}};
    return false;
  });
  return choice;
}

}  // namespace detail

inline MapTrace trace_gamma(const Permutation& pi) {
  detail::require_domain(pi, Permutation{3, 1, 4, 2}, "gamma");
  MapTrace trace{pi, {}, pi};
  Permutation cur = pi;
  const long long guard = detail::iteration_guard(pi.size());
  for (long long it = 0;; ++it) {
    const auto choice = detail::gamma_choice(cur);
    if (!choice) break;
    if (it >= guard) {
      throw Error(ErrorCode::NonTermination,
                  "gamma exceeded " + std::to_string(guard) + " iterations on " + pi.to_string());
    }
    const int i = choice->occurrence.positions[0];
    const int lm = choice->occurrence.positions[3];
    const int low = cur(i);
    const int high = cur(lm);
    std::vector<int> w = cur.word();
    for (int& v : w) {
      if (v >= low && v < high) ++v;
    }
    w[static_cast<std::size_t>(lm - 1)] = low;
    cur = Permutation::unchecked(std::move(w));
    trace.iterations.push_back({"gamma", choice->occurrence, cur});
  }
  if (contains(cur, Permutation{2, 1, 4, 3})) {
    throw Error(ErrorCode::PostconditionViolated, "gamma(" + pi.to_string() + ") still contains 2143");
  }
  trace.output = cur;
  return trace;
}

inline Permutation gamma(const Permutation& pi) { return trace_gamma(pi).output; }

// ---------------------------------------------------------------------------
// Named maps and certification

struct MapInfo {
  std::string name;
  std::string description;
  Permutation source;  // domain is F_n(source)
  Permutation target;  // codomain is F_n(target)
  std::function<MapTrace(const Permutation&)> apply;
  std::string inverse;  // name of the map claimed to invert this one, if any
};

inline const std::vector<MapInfo>& map_registry() {
  static const std::vector<MapInfo> maps = [] {
    const Permutation p12{1, 2};
    const Permutation p21{2, 1};
    std::vector<MapInfo> m;
    m.push_back({"phi12", "West's bijection with tau = 12", {1, 2, 3, 4}, {1, 2, 4, 3},
                 [p12](const Permutation& p) { return trace_west_phi(p, p12); }, ""});
    m.push_back({"phi21", "West's bijection with tau = 21", {2, 1, 3, 4}, {2, 1, 4, 3},
                 [p21](const Permutation& p) { return trace_west_phi(p, p21); }, ""});
    m.push_back({"alpha", "alpha on F(1423)", {1, 4, 2, 3}, {1, 2, 4, 3},
                 [](const Permutation& p) { return trace_alpha(p); }, "beta"});
    m.push_back({"alpha-1324", "alpha on F(1324)", {1, 3, 2, 4}, {1, 2, 3, 4},
                 [](const Permutation& p) {
                   return trace_alpha(p, Permutation{1, 3, 2, 4}, Permutation{1, 2, 3, 4});
                 },
                 ""});
    m.push_back({"beta", "beta on F(1243)", {1, 2, 4, 3}, {1, 4, 2, 3},
                 [](const Permutation& p) { return trace_beta(p); }, "alpha"});
    m.push_back({"alpha1", "alpha1 on F(3142)", {3, 1, 4, 2}, {3, 1, 2, 4},
                 [](const Permutation& p) { return trace_alpha1(p); }, ""});
    m.push_back({"alpha2", "alpha2 on F(3124)", {3, 1, 2, 4}, {1, 3, 2, 4},
                 [](const Permutation& p) { return trace_alpha2(p); }, ""});
    m.push_back({"alpha2-alpha1", "alpha2 after alpha1 on F(3142)", {3, 1, 4, 2}, {1, 3, 2, 4},
                 [](const Permutation& p) {
                   MapTrace first = trace_alpha1(p);
                   MapTrace second = trace_alpha2(first.output);
                   first.iterations.insert(first.iterations.end(), second.iterations.begin(),
                                           second.iterations.end());
                   first.output = second.output;
                   return first;
                 },
                 ""});
    m.push_back({"gamma", "gamma on F(3142)", {3, 1, 4, 2}, {2, 1, 4, 3},
                 [](const Permutation& p) { return trace_gamma(p); }, ""});
    return m;
  }();
  return maps;
}

inline const MapInfo& find_map(std::string_view name) {
  for (const auto& m : map_registry()) {
    if (m.name == name) return m;
  }
  throw Error(ErrorCode::UnknownMap, "no map named '" + std::string(name) + "'");
}

struct MapReport {
  std::string name;
  int n = 0;
  std::uint64_t domain_size = 0;
  std::uint64_t codomain_size = 0;
  bool injective = true;
  bool surjective = true;
  std::uint64_t fishburn_preserved = 0;
  std::uint64_t failures = 0;          // inputs on which the map raised
  std::uint64_t inverse_failures = 0;  // inverse(map(x)) != x
  std::vector<std::string> counterexamples;

  bool certified() const {
    return injective && surjective && domain_size == codomain_size && fishburn_preserved == domain_size &&
           failures == 0 && inverse_failures == 0;
  }
};

inline nlohmann::ordered_json to_json(const MapReport& r) {
  return {{"map", r.name},
          {"n", r.n},
          {"domain_size", r.domain_size},
          {"codomain_size", r.codomain_size},
          {"injective", r.injective},
          {"surjective", r.surjective},
          {"fishburn_preserved", r.fishburn_preserved},
          {"failures", r.failures},
          {"inverse_failures", r.inverse_failures},
          {"certified", r.certified()},
          {"counterexamples", r.counterexamples}};
}

/// Applies the named map to every element of F_n(source) and compares the
/// image with F_n(target).
inline MapReport verify_map(std::string_view name, int n, std::size_t max_counterexamples = 5) {
  const MapInfo& info = find_map(name);
  const MapInfo* inverse = info.inverse.empty() ? nullptr : &find_map(info.inverse);
  MapReport r;
  r.name = info.name;
  r.n = n;
  const auto domain = generate(ClassSpec::fishburn_avoiding(n, info.source));
  const auto codomain = generate(ClassSpec::fishburn_avoiding(n, info.target));
  r.domain_size = domain.size();
  r.codomain_size = codomain.size();
  auto note = [&](std::string msg) {
    if (r.counterexamples.size() < max_counterexamples) r.counterexamples.push_back(std::move(msg));
  };

  std::map<Permutation, Permutation> preimage;
  for (const auto& pi : domain) {
    MapTrace t;
    try {
      t = info.apply(pi);
    } catch (const Error& e) {
      ++r.failures;
      note(pi.to_string() + ": " + e.what());
      continue;
    }
    if (is_fishburn(t.output)) {
      ++r.fishburn_preserved;
    } else {
      note(pi.to_string() + " -> " + t.output.to_string() + " is not Fishburn; trace " + to_json(t).dump());
    }
    auto [it, fresh] = preimage.emplace(t.output, pi);
    if (!fresh) {
      r.injective = false;
      note("collision: " + it->second.to_string() + " and " + pi.to_string() + " -> " + t.output.to_string());
    }
    if (inverse) {
      try {
        const Permutation back = inverse->apply(t.output).output;
        if (back != pi) {
          ++r.inverse_failures;
          note(info.inverse + "(" + t.output.to_string() + ") = " + back.to_string() + " != " + pi.to_string());
        }
      } catch (const Error& e) {
        ++r.inverse_failures;
        note(info.inverse + "(" + t.output.to_string() + "): " + e.what());
      }
    }
  }
  std::set<Permutation> target_set(codomain.begin(), codomain.end());
  for (const auto& [img, src] : preimage) {
    if (!target_set.count(img)) {
      r.surjective = false;  // image leaves the codomain
      note(src.to_string() + " -> " + img.to_string() + " lies outside F_n(" + info.target.to_string() + ")");
    }
  }
  if (preimage.size() != target_set.size()) r.surjective = false;
  for (const auto& c : codomain) {
    if (!preimage.count(c)) {
      r.surjective = false;
      note(c.to_string() + " has no preimage");
      break;
    }
  }
  return r;
}

}  // namespace fishburn
