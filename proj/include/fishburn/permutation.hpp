#pragma once

// Permutations in one-line notation, sums and decomposition, classical
// pattern containment, and the Fishburn condition.
//
// Positions and values are 1-based at the public surface. Storage is a plain
// 0-indexed vector of the 1-based values.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fishburn/error.hpp"

namespace fishburn {

class Permutation {
 public:
  /// The empty permutation (n = 0).
  Permutation() = default;

  /// Validating constructor. Throws NotAPermutation unless `word` is a
  /// rearrangement of 1..n.
  explicit Permutation(std::vector<int> word) : values_(std::move(word)) {
    validate();
  }

  Permutation(std::initializer_list<int> word) : values_(word) { validate(); }

  /// Skips validation; the caller guarantees the invariant.
  static Permutation unchecked(std::vector<int> word) {
    Permutation p;
    p.values_ = std::move(word);
    return p;
  }

  /// Identity permutation 12...n.
  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return unchecked(std::move(w));
  }

  /// Accepts the digit form ("2135476") and the comma form ("10,1,2,...").
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at 1-based position `pos`.
  int operator()(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }

  std::span<const int> values() const noexcept { return values_; }
  const std::vector<int>& word() const noexcept { return values_; }

  /// inverse()(v) is the position of value v.
  Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
      inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return unchecked(std::move(inv));
  }

  std::string to_string() const {
    std::string out;
    const bool digits = size() <= 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!digits && i > 0) out.push_back(',');
      out += std::to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on the one-line word.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  void validate() const {
    std::vector<bool> seen(values_.size() + 1, false);
    const int n = size();
    for (int v : values_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::NotAPermutation,
                    "word is not a bijection on {1.." + std::to_string(n) + "}");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> values_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

inline Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  auto fail = [&] {
    throw Error(ErrorCode::NotAPermutation,
                "cannot parse '" + std::string(text) + "' as a permutation");
  };
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') fail();
      word.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) fail();
      word.push_back(v);
      start = end + 1;
    }
  }
  return Permutation(std::move(word));
}

/// Order-isomorphic reduction of an arbitrary sequence of distinct integers.
inline Permutation standardize(std::span<const int> seq) {
  std::vector<int> idx(seq.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return seq[static_cast<std::size_t>(a)] < seq[static_cast<std::size_t>(b)];
  });
  std::vector<int> out(seq.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[static_cast<std::size_t>(idx[r])] = static_cast<int>(r) + 1;
  return Permutation::unchecked(std::move(out));
}

// ---------------------------------------------------------------------------
// Sums and decomposition

/// sigma followed by tau shifted up by |sigma|.
inline Permutation direct_sum(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> w(sigma.word());
  w.reserve(static_cast<std::size_t>(sigma.size() + tau.size()));
  for (int v : tau.values()) w.push_back(v + sigma.size());
  return Permutation::unchecked(std::move(w));
}

/// sigma shifted up by |tau|, followed by tau.
inline Permutation skew_sum(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(sigma.size() + tau.size()));
  for (int v : sigma.values()) w.push_back(v + tau.size());
  for (int v : tau.values()) w.push_back(v);
  return Permutation::unchecked(std::move(w));
}

namespace detail {

// Lengths of the maximal direct-sum blocks: a block ends after position k
// iff the prefix of length k maps onto {1..k}.
inline std::vector<int> block_ends(std::span<const int> w) {
  std::vector<int> ends;
  int running_max = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    running_max = std::max(running_max, w[i]);
    if (running_max == static_cast<int>(i) + 1) ends.push_back(static_cast<int>(i) + 1);
  }
  return ends;
}

inline void require_nonempty(const Permutation& p, const char* op) {
  if (p.empty()) throw Error(ErrorCode::EmptyInput, std::string(op) + " needs n >= 1");
}

}  // namespace detail

inline bool is_indecomposable(const Permutation& pi) {
  detail::require_nonempty(pi, "is_indecomposable");
  return detail::block_ends(pi.values()).size() == 1;
}

/// Maximal list of indecomposable blocks whose direct sum is pi.
inline std::vector<Permutation> decompose(const Permutation& pi) {
  detail::require_nonempty(pi, "decompose");
  std::vector<Permutation> blocks;
  int begin = 0;
  for (int end : detail::block_ends(pi.values())) {
    std::vector<int> w;
    for (int i = begin; i < end; ++i) w.push_back(pi.values()[static_cast<std::size_t>(i)] - begin);
    blocks.push_back(Permutation::unchecked(std::move(w)));
    begin = end;
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Classical containment

/// Strictly increasing 1-based positions into a host permutation.
struct Occurrence {
  std::vector<int> positions;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

namespace detail {

// Depth-first search over position tuples in lexicographic order. Each new
// position is accepted only if its relative order against every earlier
// chosen entry matches the pattern, so partial tuples are always
// order-isomorphic to a pattern prefix. `visit` receives 0-based positions
// and returns false to stop. If `forced_last` >= 0 the final pattern entry
// must sit at that position. Returns false iff stopped early.
template <class Visit>
bool search_occurrences(std::span<const int> host, std::span<const int> pattern,
                        int forced_last, Visit&& visit) {
  const int n = static_cast<int>(host.size());
  const int k = static_cast<int>(pattern.size());
  if (k == 0 || k > n) return true;
  const int limit = forced_last >= 0 ? forced_last + 1 : n;
  std::vector<int> pos(static_cast<std::size_t>(k), 0);

  auto compatible = [&](int t, int p) {
    const int hv = host[static_cast<std::size_t>(p)];
    const int pv = pattern[static_cast<std::size_t>(t)];
    for (int s = 0; s < t; ++s) {
      const bool host_less = hv < host[static_cast<std::size_t>(pos[static_cast<std::size_t>(s)])];
      const bool pat_less = pv < pattern[static_cast<std::size_t>(s)];
      if (host_less != pat_less) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int t, int from) -> bool {
    if (t == k) return visit(std::span<const int>(pos));
    if (t == k - 1 && forced_last >= 0) {
      if (from > forced_last || !compatible(t, forced_last)) return true;
      pos[static_cast<std::size_t>(t)] = forced_last;
      return self(self, t + 1, forced_last + 1);
    }
    const int last_start = limit - (k - t);
    for (int p = from; p <= last_start; ++p) {
      if (!compatible(t, p)) continue;
      pos[static_cast<std::size_t>(t)] = p;
      if (!self(self, t + 1, p + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

/// True iff some occurrence of `pattern` in `word` uses the last position.
inline bool ends_with_occurrence(std::span<const int> word, std::span<const int> pattern) {
  if (word.empty()) return false;
  bool found = false;
  search_occurrences(word, pattern, static_cast<int>(word.size()) - 1,
                     [&](std::span<const int>) {
                       found = true;
                       return false;
                     });
  return found;
}

inline bool contains(std::span<const int> word, std::span<const int> pattern) {
  if (pattern.empty()) return true;
  bool found = false;
  search_occurrences(word, pattern, -1, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace detail

/// Visit occurrences of sigma in pi in lexicographic order of position
/// tuples; `visit(const Occurrence&)` returns false to stop.
template <class Visit>
void for_each_occurrence(const Permutation& pi, const Permutation& sigma, Visit&& visit) {
  Occurrence occ;
  occ.positions.resize(static_cast<std::size_t>(sigma.size()));
  detail::search_occurrences(pi.values(), sigma.values(), -1, [&](std::span<const int> pos) {
    for (std::size_t t = 0; t < pos.size(); ++t) occ.positions[t] = pos[t] + 1;
    return static_cast<bool>(visit(std::as_const(occ)));
  });
}

inline std::vector<Occurrence> occurrences(const Permutation& pi, const Permutation& sigma) {
  if (sigma.empty()) throw Error(ErrorCode::EmptyInput, "occurrences needs |sigma| >= 1");
  std::vector<Occurrence> out;
  for_each_occurrence(pi, sigma, [&](const Occurrence& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

/// Early-exit containment test.
inline bool contains(const Permutation& pi, const Permutation& sigma) {
  return detail::contains(pi.values(), sigma.values());
}

inline bool avoids(const Permutation& pi, const Permutation& sigma) { return !contains(pi, sigma); }

// ---------------------------------------------------------------------------
// Fishburn condition

namespace detail {

// A violation is an ascent w[i] < w[i+1] whose value w[i]-1 sits to the right
// of i+1. Works on any word of distinct values 1..n.
inline bool is_fishburn_word(std::span<const int> w) {
  const std::size_t n = w.size();
  if (n < 3) return true;
  std::vector<int> where(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) where[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const int v = w[i];
    if (v > 1 && w[i + 1] > v && where[static_cast<std::size_t>(v - 1)] > static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// True iff pi avoids the bivincular pattern (231, {1}, {1}).
inline bool is_fishburn(const Permutation& pi) { return detail::is_fishburn_word(pi.values()); }

struct PositionValue {
  int position;
  int value;

  friend bool operator==(const PositionValue&, const PositionValue&) = default;
};

inline std::vector<PositionValue> left_to_right_maxima(const Permutation& pi) {
  detail::require_nonempty(pi, "left_to_right_maxima");
  std::vector<PositionValue> out;
  int best = 0;
  for (int i = 1; i <= pi.size(); ++i) {
    if (pi(i) > best) {
      best = pi(i);
      out.push_back({i, best});
    }
  }
  return out;
}

}  // namespace fishburn
