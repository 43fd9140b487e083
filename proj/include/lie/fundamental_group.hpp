#pragma once

// P/Q through the Smith normal form of the transposed Cartan matrix.

#include "lie/exact.hpp"
#include "lie/matrix.hpp"
#include "lie/root_system.hpp"
#include "lie/weight.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace lie {

/// Diagonalization left * m * right = diag with unimodular left/right and
/// each diagonal entry dividing the next.
struct SmithForm {
  Matrix<std::int64_t> left;
  Matrix<std::int64_t> right;
  std::vector<std::int64_t> diag;
};

inline SmithForm smith_normal_form(Matrix<std::int64_t> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto left = Matrix<std::int64_t>::identity(rows);
  auto right = Matrix<std::int64_t>::identity(cols);

  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t j = 0; j < cols; ++j) m(dst, j) += k * m(src, j);
    for (std::size_t j = 0; j < rows; ++j) left(dst, j) += k * left(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t i = 0; i < rows; ++i) m(i, dst) += k * m(i, src);
    for (std::size_t i = 0; i < cols; ++i) right(i, dst) += k * right(i, src);
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(left(a, j), left(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(right(i, a), right(i, b));
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m(i, j) != 0 && (pi == rows || std::llabs(m(i, j)) < std::llabs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        add_row(i, t, -(m(i, t) / m(t, t)));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        add_col(j, t, -(m(t, j) / m(t, t)));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and go again
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) m(t, j) = -m(t, j);
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
  }

  SmithForm out{std::move(left), std::move(right), {}};
  for (std::size_t t = 0; t < n; ++t) out.diag.push_back(m(t, t));
  return out;
}

/// Element of P/Q: residues modulo the nontrivial invariant factors.
struct FundamentalGroupElement {
  std::vector<std::int64_t> residues;

  bool is_zero() const {
    return std::all_of(residues.begin(), residues.end(), [](std::int64_t r) { return r == 0; });
  }
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < residues.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(residues[i]);
    }
    return s + "]";
  }
  friend bool operator==(const FundamentalGroupElement&, const FundamentalGroupElement&) = default;
  friend auto operator<=>(const FundamentalGroupElement&, const FundamentalGroupElement&) = default;
};

class FundamentalGroup {
 public:
  explicit FundamentalGroup(const RootSystem& rs) {
    // the root lattice is spanned by the columns of cartan^T
    auto snf = smith_normal_form(rs.cartan().transposed());
    for (std::size_t i = 0; i < snf.diag.size(); ++i) {
      if (snf.diag[i] == 1) continue;
      rows_.push_back(i);
      moduli_.push_back(snf.diag[i]);
    }
    left_ = std::move(snf.left);
  }

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }

  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto d : moduli_) o *= d;
    return o;
  }

  FundamentalGroupElement reduce(const Weight& w) const {
    FundamentalGroupElement e;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < w.rank(); ++j) s += left_(rows_[k], j) * w[j];
      s %= moduli_[k];
      if (s < 0) s += moduli_[k];
      e.residues.push_back(s);
    }
    return e;
  }

  FundamentalGroupElement add(const FundamentalGroupElement& a, const FundamentalGroupElement& b) const {
    FundamentalGroupElement e;
    for (std::size_t k = 0; k < moduli_.size(); ++k) e.residues.push_back((a.residues[k] + b.residues[k]) % moduli_[k]);
    return e;
  }

 private:
  Matrix<std::int64_t> left_;
  std::vector<std::size_t> rows_;
  std::vector<std::int64_t> moduli_;
};

}  // namespace lie
