#pragma once

// Dyck paths and the left-to-right-maxima bijection with 321-avoiders.
// U is a unit step up (y+1), D a unit step right (x+1); paths run from
// (0,0) to (n,n) and stay weakly above y = x.

#include <string>
#include <string_view>
#include <vector>

#include "fishburn/error.hpp"
#include "fishburn/permutation.hpp"

namespace fishburn {

class DyckPath {
 public:
  DyckPath() = default;

  /// Throws MalformedPath unless `steps` is a balanced word over {U, D}
  /// whose every prefix has at least as many U as D.
  explicit DyckPath(std::string steps) : steps_(std::move(steps)) {
    int height = 0;
    for (char c : steps_) {
      if (c == 'U') {
        ++height;
      } else if (c == 'D') {
        if (--height < 0) throw Error(ErrorCode::MalformedPath, "'" + steps_ + "' dips below the diagonal");
      } else {
        throw Error(ErrorCode::MalformedPath, "'" + steps_ + "' has a step other than U or D");
      }
    }
    if (height != 0) throw Error(ErrorCode::MalformedPath, "'" + steps_ + "' is unbalanced");
  }

  static DyckPath parse(std::string_view text) { return DyckPath(std::string(text)); }

  const std::string& steps() const noexcept { return steps_; }
  int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
  const std::string& to_string() const noexcept { return steps_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

inline std::ostream& operator<<(std::ostream& os, const DyckPath& p) { return os << p.steps(); }

inline DyckPath perm_to_dyck(const Permutation& pi) {
  if (contains(pi, Permutation{3, 2, 1})) {
    throw Error(ErrorCode::Not321Avoider, pi.to_string() + " contains 321");
  }
  std::string steps;
  if (pi.empty()) return DyckPath{};
  const auto maxima = left_to_right_maxima(pi);
  int previous_value = 0;
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    const int block_end = i + 1 < maxima.size() ? maxima[i + 1].position : pi.size() + 1;
    const int tail = block_end - maxima[i].position - 1;  // |w_i|
    steps.append(static_cast<std::size_t>(maxima[i].value - previous_value), 'U');
    steps.append(static_cast<std::size_t>(tail + 1), 'D');
    previous_value = maxima[i].value;
  }
  return DyckPath(std::move(steps));
}

/// Inverse of perm_to_dyck. Maxima values are the cumulative U-counts at each
/// peak; the remaining positions take the unused values in increasing order.
inline Permutation dyck_to_perm(const DyckPath& p) {
  const int n = p.semilength();
  std::vector<int> word;
  std::vector<char> is_max_slot;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  int ups = 0;
  const std::string& s = p.steps();
  for (std::size_t i = 0; i < s.size();) {
    while (i < s.size() && s[i] == 'U') {
      ++ups;
      ++i;
    }
    std::size_t downs = 0;
    while (i < s.size() && s[i] == 'D') {
      ++downs;
      ++i;
    }
    word.push_back(ups);
    is_max_slot.push_back(1);
    used[static_cast<std::size_t>(ups)] = 1;
    for (std::size_t d = 1; d < downs; ++d) {
      word.push_back(0);
      is_max_slot.push_back(0);
    }
  }
  int next = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (is_max_slot[i]) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    word[i] = next;
    used[static_cast<std::size_t>(next)] = 1;
  }
  Permutation pi = Permutation::unchecked(std::move(word));
  if (perm_to_dyck(pi) != p) {
    throw Error(ErrorCode::MalformedPath, "'" + p.steps() + "' has no 321-avoiding preimage");
  }
  return pi;
}

inline bool avoids_uudu(const DyckPath& p) { return p.steps().find("UUDU") == std::string::npos; }

/// True iff some proper nonempty prefix returns to the diagonal.
inline bool touches_diagonal_strictly_inside(const DyckPath& p) {
  int height = 0;
  const std::string& s = p.steps();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    height += s[i] == 'U' ? 1 : -1;
    if (height == 0) return true;
  }
  return false;
}

/// x-coordinate of the first lattice point (x, x+1) reached after (0,1).
/// Needs semilength >= 2 and no interior contact with y = x.
inline int first_return_split(const DyckPath& p) {
  if (p.semilength() < 2 || touches_diagonal_strictly_inside(p)) {
    throw Error(ErrorCode::NoReturn, "'" + p.steps() + "' has no first return to y = x + 1");
  }
  const std::string& s = p.steps();
  int x = 0;
  int y = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == 'U') {
      ++y;
    } else {
      ++x;
    }
    if (y == x + 1) return x;
  }
  throw Error(ErrorCode::NoReturn, "'" + p.steps() + "' never returns to y = x + 1");
}

/// Every Dyck path of semilength n, in lexicographic order (U < D).
inline std::vector<DyckPath> all_dyck_paths(int n) {
  std::vector<DyckPath> out;
  std::string buf;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      out.push_back(DyckPath::parse(buf));
      return;
    }
    if (ups < n) {
      buf.push_back('U');
      self(self, ups + 1, downs);
      buf.pop_back();
    }
    if (downs < ups) {
      buf.push_back('D');
      self(self, ups, downs + 1);
      buf.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace fishburn
