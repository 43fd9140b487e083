#pragma once

// Garland's imaginary root vectors as polynomials in commuting variables
// L_k = h (x) t^k, and the sl2 divided-power straightening identity checked
// as a matrix identity on V(N).

#include "lie/exact.hpp"
#include "lie/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <vector>

namespace lie {

/// Polynomial in L_1, L_2, ...; a monomial is the sorted multiset of its indices.
class PowerSumPoly {
 public:
  using Monomial = std::vector<std::size_t>;
  using Terms = std::map<Monomial, Rational>;

  PowerSumPoly() = default;
  static PowerSumPoly constant(const Rational& c) { return term({}, c); }
  static PowerSumPoly variable(std::size_t k) { return term({k}, 1); }
  static PowerSumPoly term(Monomial m, const Rational& c) {
    PowerSumPoly p;
    std::sort(m.begin(), m.end());
    p.add(m, c);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational operator[](Monomial m) const {
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  PowerSumPoly& operator+=(const PowerSumPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  PowerSumPoly& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
  friend PowerSumPoly operator-(PowerSumPoly a, PowerSumPoly b) { return a += (b *= Rational(-1)); }
  friend PowerSumPoly operator*(PowerSumPoly a, const Rational& s) { return a *= s; }
  friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b) {
    PowerSumPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
        out.add(m, ca * cb);
      }
    return out;
  }
  friend bool operator==(const PowerSumPoly&, const PowerSumPoly&) = default;

  /// "c * L1^a L2^b" per monomial, one per line, in monomial order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += "\n";
      out += to_string(c);
      if (m.empty()) continue;
      out += " *";
      for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        out += " L" + std::to_string(m[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

/// Coefficient of u^s in exp(-sum_k L_k u^k / k): a sum over partitions of s
/// with m_k parts equal to k of prod_k (-1)^{m_k} L_k^{m_k} / (k^{m_k} m_k!).
inline PowerSumPoly garland_series(std::size_t s, std::size_t cap = 12) {
  if (s > cap) throw Error(ErrorCode::cap_exceeded, "series order exceeds cap");
  PowerSumPoly out;
  PowerSumPoly::Monomial parts;
  auto rec = [&](auto&& self, std::size_t left, std::size_t max_part) -> void {
    if (left == 0) {
      Rational c = 1;
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const std::size_t k = parts[i], m = j - i;
        for (std::size_t t = 1; t <= m; ++t) c /= -static_cast<std::int64_t>(k * t);
        i = j;
      }
      out.add(PowerSumPoly::Monomial(parts.rbegin(), parts.rend()), c);
      return;
    }
    for (std::size_t k = 1; k <= std::min(left, max_part); ++k) {
      parts.push_back(k);
      self(self, left - k, k);
      parts.pop_back();
    }
  };
  rec(rec, s, s);
  return out;
}

/// s P_s = -sum_{k=1}^{s} L_k P_{s-k}.
inline bool newton_check(std::size_t s, std::size_t cap = 12) {
  if (s == 0) throw Error(ErrorCode::invalid_argument, "Newton check needs s >= 1");
  PowerSumPoly rhs;
  for (std::size_t k = 1; k <= s; ++k) rhs += PowerSumPoly::variable(k) * garland_series(s - k, cap);
  return garland_series(s, cap) * Rational(static_cast<std::int64_t>(s)) == rhs * Rational(-1);
}

/// E, F, H on V(N) in the basis v_0..v_N with H v_k = (N - 2k) v_k and F v_k = v_{k+1}.
struct Sl2RepMatrices {
  std::size_t n = 0;
  RationalMatrix e, f, h;

  explicit Sl2RepMatrices(std::size_t highest) : n(highest), e(n + 1, n + 1), f(n + 1, n + 1), h(n + 1, n + 1) {
    const auto N = static_cast<std::int64_t>(n);
    for (std::size_t k = 0; k <= n; ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      h(k, k) = N - 2 * kk;
      if (k < n) f(k + 1, k) = 1;
      if (k > 0) e(k - 1, k) = kk * (N - kk + 1);
    }
  }

  std::size_t dim() const noexcept { return n + 1; }
};

namespace detail {

inline RationalMatrix power(const RationalMatrix& m, std::size_t k) {
  RationalMatrix out = RationalMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

inline Rational factorial(std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<std::int64_t>(i);
  return r;
}

inline RationalMatrix divided_power(const RationalMatrix& m, std::size_t k) {
  return power(m, k) * (1 / factorial(k));
}

/// binom(M, k) = M (M - 1) ... (M - k + 1) / k!.
inline RationalMatrix matrix_binomial(const RationalMatrix& m, std::size_t k) {
  const auto id = RationalMatrix::identity(m.rows());
  RationalMatrix out = id;
  for (std::size_t j = 0; j < k; ++j) out = out * (m - id * Rational(static_cast<std::int64_t>(j)));
  return out * (1 / factorial(k));
}

}  // namespace detail

/// E^(s) F^(r) = sum_m F^(r-m) binom(H - (r + s - 2m), m) E^(s-m) on V(N).
inline bool zform_check(std::size_t r, std::size_t s, std::size_t n, std::size_t cap = 64) {
  if (r > cap || s > cap || n > cap) throw Error(ErrorCode::cap_exceeded, "zform parameters exceed cap");
  if (n < r + s) throw Error(ErrorCode::invalid_argument, "zform check needs N >= r + s");
  const Sl2RepMatrices rep(n);
  const auto id = RationalMatrix::identity(rep.dim());
  const auto lhs = detail::divided_power(rep.e, s) * detail::divided_power(rep.f, r);
  RationalMatrix rhs(rep.dim(), rep.dim());
  for (std::size_t m = 0; m <= std::min(r, s); ++m) {
    const auto shift = static_cast<std::int64_t>(r + s) - 2 * static_cast<std::int64_t>(m);
    rhs += detail::divided_power(rep.f, r - m) * detail::matrix_binomial(rep.h - id * Rational(shift), m) *
           detail::divided_power(rep.e, s - m);
  }
  return lhs == rhs;
}

}  // namespace lie
