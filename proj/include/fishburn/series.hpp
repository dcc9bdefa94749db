#pragma once

// Closed forms, recurrences and truncated power series for the counting
// sequences of pattern-avoiding Fishburn permutations.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "fishburn/error.hpp"
#include "fishburn/exact.hpp"
#include "fishburn/intseq.hpp"

namespace fishburn {

/// Coefficients of q^0..q^T; every operation works modulo q^{T+1}.
class PowerSeries {
 public:
  explicit PowerSeries(int truncation_order) : coeffs_(static_cast<std::size_t>(truncation_order) + 1, 0) {
    if (truncation_order < 0) throw Error(ErrorCode::InvalidSpec, "truncation order must be >= 0");
  }

  PowerSeries(int truncation_order, std::vector<BigInt> leading) : PowerSeries(truncation_order) {
    for (std::size_t k = 0; k < std::min(leading.size(), coeffs_.size()); ++k) coeffs_[k] = std::move(leading[k]);
  }

  static PowerSeries constant(int order, BigInt c) { return PowerSeries(order, {std::move(c)}); }

  /// (1 - q)^j expanded by the binomial theorem.
  static PowerSeries one_minus_q_pow(int order, int j) {
    PowerSeries s(order);
    for (int k = 0; k <= std::min(order, j); ++k) {
      BigInt b = binomial(j, k);
      s[k] = (k % 2 == 0) ? b : BigInt(-b);
    }
    return s;
  }

  int truncation_order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const BigInt& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

namespace detail {
inline void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.truncation_order() != b.truncation_order()) {
    throw Error(ErrorCode::InvalidSpec, "power series truncation orders differ");
  }
}
}  // namespace detail

inline PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b);
  PowerSeries r(a.truncation_order());
  for (int k = 0; k <= a.truncation_order(); ++k) r[k] = a[k] + b[k];
  return r;
}

inline PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b);
  PowerSeries r(a.truncation_order());
  for (int k = 0; k <= a.truncation_order(); ++k) r[k] = a[k] - b[k];
  return r;
}

inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b);
  const int t = a.truncation_order();
  PowerSeries r(t);
  for (int i = 0; i <= t; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= t; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline PowerSeries series_pow(const PowerSeries& a, int e) {
  if (e < 0) throw Error(ErrorCode::InvalidSpec, "negative series exponent");
  PowerSeries result = PowerSeries::constant(a.truncation_order(), 1);
  PowerSeries base = a;
  while (e > 0) {
    if (e & 1) result = series_mul(result, base);
    base = series_mul(base, base);
    e >>= 1;
  }
  return result;
}

/// a / b for b with constant term +-1, so every coefficient stays integral.
inline PowerSeries series_div(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b);
  if (b[0] != 1 && b[0] != -1) {
    throw Error(ErrorCode::NonIntegerResult, "series divisor must have constant term +-1");
  }
  const int t = a.truncation_order();
  PowerSeries r(t);
  for (int k = 0; k <= t; ++k) {
    BigInt acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * r[k - j];
    r[k] = acc * b[0];  // b0 is its own inverse
  }
  return r;
}

/// 1 - (1 - q)^j, one factor of the Fishburn product.
inline PowerSeries series_compose_1_minus_q(int order, int j) {
  return series_sub(PowerSeries::constant(order, 1), PowerSeries::one_minus_q_pow(order, j));
}

// ---------------------------------------------------------------------------
// Sequences

/// xi(0..n_max) from 1 + sum_n prod_{j<=n} (1 - (1-q)^j). Each product has
/// valuation n, so the outer sum stops at n_max.
inline IntSeq fishburn_numbers(int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidSpec, "n_max must be >= 0");
  PowerSeries total = PowerSeries::constant(n_max, 1);
  PowerSeries product = PowerSeries::constant(n_max, 1);
  for (int n = 1; n <= n_max; ++n) {
    product = series_mul(product, series_compose_1_minus_q(n_max, n));
    total = series_add(total, product);
  }
  return IntSeq(0, total.coeffs());
}

inline BigInt catalan(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidSpec, "catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

namespace detail {
inline void require_at_least(int n, int lo, const char* op) {
  if (n < lo) throw Error(ErrorCode::InvalidSpec, std::string(op) + " needs n >= " + std::to_string(lo));
}
}  // namespace detail

/// 2^{n-1}
inline BigInt f_pow2(int n) {
  detail::require_at_least(n, 1, "f_pow2");
  return BigInt(1) << (n - 1);
}

/// Number of UUDU-avoiding Dyck paths of semilength n. The summands are
/// rational in general, so the sum is accumulated exactly and checked for
/// integrality.
inline BigInt f321_closed(int n) {
  detail::require_at_least(n, 1, "f321_closed");
  Rational sum = 0;
  for (int j = 0; j <= (n - 1) / 2; ++j) {
    Rational term(binomial(n - j, j) * binomial(2 * n - 3 * j, n - j + 1), BigInt(n - j));
    if (j % 2) term = -term;
    sum += term;
  }
  if (boost::multiprecision::denominator(sum) != 1) {
    throw Error(ErrorCode::NonIntegerResult, "f321_closed(" + std::to_string(n) + ") is not an integer");
  }
  return boost::multiprecision::numerator(sum);
}

/// 2^{n-1} - (n-1), with value 1 at n = 1.
inline BigInt if123(int n) {
  detail::require_at_least(n, 1, "if123");
  if (n == 1) return 1;
  return (BigInt(1) << (n - 1)) - (n - 1);
}

/// 2^{n-2}, with value 1 at n = 1.
inline BigInt if132_213(int n) {
  detail::require_at_least(n, 1, "if132_213");
  if (n == 1) return 1;
  return BigInt(1) << (n - 2);
}

/// a_1 = a_2 = a_3 = 1, a_n = a_{n-1} + sum_{j=3}^{n-1} a_j a_{n-j}.
/// Summing over j = 2..n-2 instead gives a_5 = 4, which is not A082582.
inline IntSeq a082582(int n_max) {
  detail::require_at_least(n_max, 1, "a082582");
  std::vector<BigInt> a(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    if (n <= 3) {
      a[static_cast<std::size_t>(n)] = 1;
      continue;
    }
    BigInt v = a[static_cast<std::size_t>(n - 1)];
    for (int j = 3; j <= n - 1; ++j) v += a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(n - j)];
    a[static_cast<std::size_t>(n)] = v;
  }
  return IntSeq(1, std::vector<BigInt>(a.begin() + 1, a.end()));
}

/// sum_{k=1}^n binom(n-1, k-1) C_{n-k}
inline BigInt f1342(int n) {
  detail::require_at_least(n, 1, "f1342");
  BigInt s = 0;
  for (int k = 1; k <= n; ++k) s += binomial(n - 1, k - 1) * catalan(n - k);
  return s;
}

/// b_n = sum_{k=1}^n binom(n-1, k-1) a_{n-k} for a starting at index 0;
/// the result starts at index 1 and has the same length as `a`.
inline IntSeq binomial_transform(const IntSeq& a) {
  if (a.start != 0) throw Error(ErrorCode::InvalidSpec, "binomial_transform expects a sequence starting at 0");
  IntSeq b(1, {});
  for (int n = 1; n <= a.size(); ++n) {
    BigInt s = 0;
    for (int k = 1; k <= n; ++k) s += binomial(n - 1, k - 1) * a.term(n - k);
    b.terms.push_back(s);
  }
  return b;
}

namespace detail {
inline PowerSeries series_from(const IntSeq& s) {
  if (s.start != 1) throw Error(ErrorCode::InvalidSpec, "invert transforms expect sequences starting at 1");
  PowerSeries p(s.size());
  for (int n = 1; n <= s.size(); ++n) p[n] = s.term(n);
  return p;
}
inline IntSeq drop_constant(const PowerSeries& p) {
  return IntSeq(1, std::vector<BigInt>(p.coeffs().begin() + 1, p.coeffs().end()));
}
}  // namespace detail

/// Coefficients of A_I / (1 - A_I): indecomposable counts -> all counts.
inline IntSeq invert_transform(const IntSeq& indecomposable) {
  const PowerSeries a = detail::series_from(indecomposable);
  const PowerSeries one = PowerSeries::constant(a.truncation_order(), 1);
  return detail::drop_constant(series_div(a, series_sub(one, a)));
}

/// Coefficients of A / (1 + A): all counts -> indecomposable counts.
inline IntSeq inverse_invert_transform(const IntSeq& all) {
  const PowerSeries a = detail::series_from(all);
  const PowerSeries one = PowerSeries::constant(a.truncation_order(), 1);
  return detail::drop_constant(series_div(a, series_add(one, a)));
}

/// Tabulates a closed form over [from, to].
template <class F>
IntSeq tabulate(int from, int to, F&& f) {
  IntSeq s(from, {});
  for (int n = from; n <= to; ++n) s.terms.push_back(f(n));
  return s;
}

}  // namespace fishburn
