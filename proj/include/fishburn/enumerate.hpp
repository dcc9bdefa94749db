#pragma once

// Exhaustive generation of F_n(sigma), Av_n(sigma) and their indecomposable
// parts by pruned backtracking. This is the counting oracle used by every
// table and claim.

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "fishburn/error.hpp"
#include "fishburn/exact.hpp"
#include "fishburn/intseq.hpp"
#include "fishburn/permutation.hpp"

namespace fishburn {

struct ClassFlags {
  bool fishburn = false;
  bool indecomposable = false;
};

/// Permutations of size n that avoid `pattern` (when set) and satisfy the
/// requested flags.
struct ClassSpec {
  int n = 1;
  std::optional<Permutation> pattern;
  ClassFlags flags;

  static ClassSpec fishburn_avoiding(int n, Permutation sigma, bool indecomposable = false) {
    return ClassSpec{n, std::move(sigma), ClassFlags{true, indecomposable}};
  }

  void validate() const {
    if (n < 1) throw Error(ErrorCode::InvalidSpec, "class size must be >= 1");
    if (pattern && pattern->empty()) throw Error(ErrorCode::InvalidSpec, "pattern must be nonempty");
  }
};

namespace detail {

// Backtracking kernel. Values are appended in increasing order so leaves
// arrive in lexicographic order. `first_letter` > 0 pins the first entry.
// `visit(std::span<const int>)` sees each accepted word.
template <class Visit>
void enumerate_words(const ClassSpec& spec, int first_letter, Visit&& visit) {
  const int n = spec.n;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  const std::span<const int> pattern =
      spec.pattern ? spec.pattern->values() : std::span<const int>{};
  const bool indecomposable = spec.flags.indecomposable;
  const bool fishburn = spec.flags.fishburn;

  auto rec = [&](auto&& self, int depth, int running_max) -> void {
    if (depth == n) {
      if (fishburn && !is_fishburn_word(word)) return;
      visit(std::span<const int>(word));
      return;
    }
    const int lo = (depth == 0 && first_letter > 0) ? first_letter : 1;
    const int hi = (depth == 0 && first_letter > 0) ? first_letter : n;
    for (int v = lo; v <= hi; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      const int next_max = std::max(running_max, v);
      // A proper prefix of length depth+1 equal to {1..depth+1} splits off a
      // direct-sum block.
      if (indecomposable && depth + 1 < n && next_max == depth + 1) continue;
      word[static_cast<std::size_t>(depth)] = v;
      if (!pattern.empty() &&
          ends_with_occurrence(std::span<const int>(word.data(), static_cast<std::size_t>(depth) + 1), pattern)) {
        continue;
      }
      used[static_cast<std::size_t>(v)] = 1;
      self(self, depth + 1, next_max);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0, 0);
}

inline unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

}  // namespace detail

/// Streams each member of the class, in lexicographic order, to
/// `visit(const Permutation&)`.
template <class Visit>
void for_each_in_class(const ClassSpec& spec, Visit&& visit) {
  spec.validate();
  detail::enumerate_words(spec, 0, [&](std::span<const int> w) {
    visit(Permutation::unchecked(std::vector<int>(w.begin(), w.end())));
  });
}

inline std::vector<Permutation> generate(const ClassSpec& spec) {
  std::vector<Permutation> out;
  for_each_in_class(spec, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

/// Cardinality of the class. Work is split by first letter across up to
/// `workers` threads; the sum does not depend on the split.
inline std::uint64_t count(const ClassSpec& spec, unsigned workers = detail::default_workers()) {
  spec.validate();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(spec.n)));
  auto count_letters = [&spec, workers](unsigned worker) {
    std::uint64_t total = 0;
    for (int first = static_cast<int>(worker) + 1; first <= spec.n; first += static_cast<int>(workers)) {
      detail::enumerate_words(spec, first, [&](std::span<const int>) { total = checked_add(total, 1); });
    }
    return total;
  };
  if (workers == 1) return count_letters(0);
  std::vector<std::future<std::uint64_t>> parts;
  for (unsigned w = 0; w < workers; ++w) parts.push_back(std::async(std::launch::async, count_letters, w));
  std::uint64_t total = 0;
  for (auto& f : parts) total = checked_add(total, f.get());
  return total;
}

/// count(spec(n)) for n = 1..n_max.
inline IntSeq counting_sequence(const std::optional<Permutation>& pattern, ClassFlags flags, int n_max,
                                unsigned workers = detail::default_workers()) {
  if (n_max < 1) throw Error(ErrorCode::InvalidSpec, "n_max must be >= 1");
  IntSeq seq(1, {});
  for (int n = 1; n <= n_max; ++n) seq.terms.emplace_back(count(ClassSpec{n, pattern, flags}, workers));
  return seq;
}

/// Element-by-element comparison of the two generated classes.
inline bool classes_equal_as_sets(const ClassSpec& a, const ClassSpec& b) {
  if (a.n != b.n) throw Error(ErrorCode::InvalidSpec, "classes_equal_as_sets needs equal n");
  return generate(a) == generate(b);
}

inline bool classes_equal_as_sets(int n, ClassSpec a, ClassSpec b) {
  a.n = n;
  b.n = n;
  return classes_equal_as_sets(a, b);
}

/// Patterns whose counting sequences agree through n_max.
struct WilfClass {
  std::vector<Permutation> patterns;
  IntSeq sequence;
};

/// Groups appear in order of their first pattern in the input.
inline std::vector<WilfClass> wilf_partition(const std::vector<Permutation>& patterns, int n_max, ClassFlags flags,
                                             unsigned workers = detail::default_workers()) {
  std::vector<WilfClass> groups;
  for (const auto& sigma : patterns) {
    IntSeq seq = counting_sequence(sigma, flags, n_max, workers);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const WilfClass& g) { return g.sequence == seq; });
    if (it == groups.end()) {
      groups.push_back({{sigma}, std::move(seq)});
    } else {
      it->patterns.push_back(sigma);
    }
  }
  return groups;
}

/// All permutations of size k in lexicographic order.
inline std::vector<Permutation> all_permutations(int k) {
  return generate(ClassSpec{k, std::nullopt, {}});
}

}  // namespace fishburn
