#pragma once

// Finite simple root systems of types A-G.
//
// Conventions: Bourbaki numbering for every type except G2, where node 1 is
// the long simple root. cartan(i, j) = 2(a_i, a_j) / (a_j, a_j), so the simple
// root a_i has fundamental-weight coordinates given by row i. The invariant
// form is scaled so that long roots have squared length 2.

#include "lie/exact.hpp"
#include "lie/matrix.hpp"
#include "lie/weight.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lie {

struct CartanType {
  char family = 'A';
  int rank = 1;

  static bool admissible(char family, int rank) {
    switch (family) {
      case 'A': return rank >= 1 && rank <= 8;
      case 'B': return rank >= 2 && rank <= 8;
      case 'C': return rank >= 2 && rank <= 8;
      case 'D': return rank >= 4 && rank <= 8;
      case 'E': return rank >= 6 && rank <= 8;
      case 'F': return rank == 4;
      case 'G': return rank == 2;
      default: return false;
    }
  }

  /// Parses "A1".."E8", "F4", "G2".
  static CartanType parse(std::string_view text) {
    if (text.size() < 2) throw Error(ErrorCode::invalid_type, "bad Cartan type '" + std::string(text) + "'");
    char family = text[0];
    if (family >= 'a' && family <= 'z') family = static_cast<char>(family - 'a' + 'A');
    int rank = 0;
    for (char ch : text.substr(1)) {
      if (ch < '0' || ch > '9') throw Error(ErrorCode::invalid_type, "bad Cartan type '" + std::string(text) + "'");
      rank = rank * 10 + (ch - '0');
      if (rank > 1000) break;
    }
    if (!admissible(family, rank))
      throw Error(ErrorCode::invalid_type, "inadmissible Cartan type '" + std::string(text) + "'");
    return {family, rank};
  }

  std::string str() const { return std::string(1, family) + std::to_string(rank); }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Rational vector in the simple-root basis.
struct RootVector {
  std::vector<Rational> coords;

  friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// A root with its coordinates in both bases.
struct Root {
  Weight simple;  // simple-root coordinates
  Weight weight;  // fundamental-weight coordinates
};

/// Thrown by weyl_orbit when the cap is hit; carries what was found so far.
class PartialOrbitError : public Error {
 public:
  PartialOrbitError(std::vector<Weight> partial, std::size_t cap)
      : Error(ErrorCode::cap_exceeded, "Weyl orbit exceeds cap " + std::to_string(cap)),
        partial_(std::move(partial)) {}
  const std::vector<Weight>& partial() const noexcept { return partial_; }

 private:
  std::vector<Weight> partial_;
};

namespace detail {

inline Matrix<std::int64_t> cartan_matrix(CartanType t) {
  const auto n = static_cast<std::size_t>(t.rank);
  Matrix<std::int64_t> a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = -1; };
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // a_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // a_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(1, 2) = -2;  // a_2 long, a_3 short
      break;
    case 'G':
      a(0, 1) = -3;  // a_1 long
      a(1, 0) = -1;
      break;
    default:
      throw Error(ErrorCode::invalid_type, "unknown family");
  }
  return a;
}

}  // namespace detail

class RootSystem {
 public:
  explicit RootSystem(CartanType type) : type_(type) {
    if (!CartanType::admissible(type.family, type.rank))
      throw Error(ErrorCode::invalid_type, "inadmissible Cartan type " + type.str());
    n_ = static_cast<std::size_t>(type.rank);
    cartan_ = detail::cartan_matrix(type);
    build_form();
    build_roots();
  }

  static RootSystem build(std::string_view type) { return RootSystem(CartanType::parse(type)); }

  const CartanType& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return n_; }
  const Matrix<std::int64_t>& cartan() const noexcept { return cartan_; }
  std::int64_t cartan(std::size_t i, std::size_t j) const { return cartan_(i, j); }
  /// (a_i, a_j).
  const RationalMatrix& form_matrix() const noexcept { return form_; }
  /// Row i holds the simple-root coordinates of the fundamental weight w_i.
  const RationalMatrix& fund_to_root() const noexcept { return fund_to_root_; }
  /// (w_i, w_j).
  const RationalMatrix& weight_form() const noexcept { return weight_form_; }

  const std::vector<Root>& positive_roots() const noexcept { return positive_; }
  const Root& highest_root() const noexcept { return positive_[highest_]; }
  Weight rho() const {
    Weight r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = 1;
    return r;
  }
  std::size_t dim_algebra() const noexcept { return n_ + 2 * positive_.size(); }

  Weight simple_root(std::size_t i) const {
    Weight w(n_);
    for (std::size_t j = 0; j < n_; ++j) w[j] = cartan_(i, j);
    return w;
  }

  Weight root_to_weight(const Weight& simple) const {
    Weight w(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (simple[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) w[j] += simple[i] * cartan_(i, j);
    }
    return w;
  }

  RootVector to_root_vector(const Weight& w) const {
    RootVector r{std::vector<Rational>(n_, Rational(0))};
    for (std::size_t i = 0; i < n_; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t k = 0; k < n_; ++k) r.coords[k] += w[i] * fund_to_root_(i, k);
    }
    return r;
  }

  /// Inverse of to_root_vector; throws if the vector is not integral in the weight basis.
  Weight to_weight(const RootVector& r) const {
    Weight w(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < n_; ++i) s += r.coords[i] * cartan_(i, j);
      w[j] = to_int64(s);
    }
    return w;
  }

  /// Simple-root coordinates when w lies in the root lattice.
  std::optional<Weight> root_coords(const Weight& w) const {
    Weight c(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      std::int64_t num = 0;
      for (std::size_t i = 0; i < n_; ++i) num += w[i] * det_inv_(i, k);
      if (num % det_ != 0) return std::nullopt;
      c[k] = num / det_;
    }
    return c;
  }

  Rational inner_product(const RootVector& x, const RootVector& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (x.coords[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) s += x.coords[i] * form_(i, j) * y.coords[j];
    }
    return s;
  }

  Rational inner_product(const Weight& x, const Weight& y) const {
    return Rational(scaled_inner_product(x, y), form_scale_);
  }

  /// form_scale() * (x, y); always an integer.
  std::int64_t scaled_inner_product(const Weight& x, const Weight& y) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      std::int64_t row = 0;
      for (std::size_t j = 0; j < n_; ++j) row += scaled_weight_form_(i, j) * y[j];
      s += x[i] * row;
    }
    return s;
  }
  std::int64_t form_scale() const noexcept { return form_scale_; }

  /// s_i(w) = w - w(h_i) a_i.
  Weight reflect(Weight w, std::size_t i) const {
    const auto c = w[i];
    if (c == 0) return w;
    for (std::size_t j = 0; j < n_; ++j) w[j] -= c * cartan_(i, j);
    return w;
  }

  /// Straightens w into the dominant chamber by simple reflections, reflecting
  /// at the first negative coordinate each time. Returns the number of steps.
  std::pair<Weight, std::size_t> dominant_representative(Weight w) const {
    std::size_t steps = 0;
    for (;;) {
      std::size_t i = 0;
      while (i < n_ && w[i] >= 0) ++i;
      if (i == n_) return {w, steps};
      w = reflect(w, i);
      ++steps;
    }
  }

  std::vector<Weight> weyl_orbit(const Weight& w, std::size_t cap = 1'000'000) const {
    std::vector<Weight> orbit{w};
    std::unordered_set<Weight, WeightHash> seen{w};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        Weight v = reflect(orbit[k], i);
        if (seen.insert(v).second) {
          orbit.push_back(v);
          if (orbit.size() > cap) throw PartialOrbitError(std::move(orbit), cap);
        }
      }
    }
    return orbit;
  }

  /// -w0(lam) for dominant lam.
  Weight longest_element_dual(const Weight& lam) const {
    if (!lam.is_dominant()) throw Error(ErrorCode::not_dominant, "longest_element_dual needs a dominant weight");
    return dominant_representative(-lam).first;
  }

  /// lam - mu in Q+.
  bool dominates(const Weight& lam, const Weight& mu) const {
    auto c = root_coords(lam - mu);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](std::int64_t x) { return x >= 0; });
  }

  bool is_root(const Weight& w) const { return all_roots_.contains(w); }

  /// All roots (positive and negative) in fundamental-weight coordinates.
  const std::unordered_set<Weight, WeightHash>& roots() const noexcept { return all_roots_; }

  Integer weyl_group_order() const {
    auto fact = [](int k) {
      Integer f = 1;
      for (int i = 2; i <= k; ++i) f *= i;
      return f;
    };
    const int n = type_.rank;
    switch (type_.family) {
      case 'A': return fact(n + 1);
      case 'B':
      case 'C': return (Integer(1) << n) * fact(n);
      case 'D': return (Integer(1) << (n - 1)) * fact(n);
      case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
      case 'F': return 1152;
      case 'G': return 12;
    }
    return 0;
  }

  std::int64_t cartan_determinant() const noexcept { return det_; }

 private:
  void build_form() {
    // symmetrizer d_j with a_ij d_j = a_ji d_i, normalized so long roots have d = 1
    std::vector<Rational> d(n_, Rational(0));
    d[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n_; ++j) {
        if (j == i || cartan_(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * cartan_(j, i) / cartan_(i, j);
        queue.push_back(j);
      }
    }
    Rational longest = *std::max_element(d.begin(), d.end());
    for (auto& x : d) x /= longest;

    form_ = RationalMatrix(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) form_(i, j) = cartan_(i, j) * d[j];

    const auto rat_cartan = to_rational(cartan_);
    fund_to_root_ = inverse(rat_cartan);
    det_ = to_int64(determinant(rat_cartan));
    det_inv_ = Matrix<std::int64_t>(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) det_inv_(i, j) = to_int64(fund_to_root_(i, j) * det_);

    weight_form_ = RationalMatrix(n_, n_);
    Integer scale = 1;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        weight_form_(i, j) = fund_to_root_(i, j) * d[j];
        scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(weight_form_(i, j)));
      }
    form_scale_ = scale.convert_to<std::int64_t>();
    scaled_weight_form_ = Matrix<std::int64_t>(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        scaled_weight_form_(i, j) = to_int64(weight_form_(i, j) * form_scale_);
  }

  void build_roots() {
    // reflection closure of the simple roots, kept in simple-root coordinates
    std::vector<Weight> found;
    std::set<Weight> seen;
    for (std::size_t i = 0; i < n_; ++i) {
      found.push_back(Weight::unit(n_, i));
      seen.insert(found.back());
    }
    for (std::size_t k = 0; k < found.size(); ++k) {
      const Weight beta = found[k];
      const Weight beta_w = root_to_weight(beta);
      for (std::size_t i = 0; i < n_; ++i) {
        if (beta_w[i] == 0) continue;
        Weight img = beta;
        img[i] -= beta_w[i];
        if (img[i] < 0) continue;  // only s_i(a_i) = -a_i leaves the positive cone
        if (seen.insert(img).second) found.push_back(img);
      }
    }
    // sort by height, then lexicographically, for a stable ordering
    std::sort(found.begin(), found.end(), [](const Weight& a, const Weight& b) {
      auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
      auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
      if (ha != hb) return ha < hb;
      return a < b;
    });
    for (const auto& s : found) {
      positive_.push_back({s, root_to_weight(s)});
      all_roots_.insert(positive_.back().weight);
      all_roots_.insert(-positive_.back().weight);
    }
    highest_ = positive_.size() - 1;
  }

  CartanType type_;
  std::size_t n_ = 0;
  Matrix<std::int64_t> cartan_;
  RationalMatrix form_;
  RationalMatrix fund_to_root_;
  RationalMatrix weight_form_;
  Matrix<std::int64_t> scaled_weight_form_;
  Matrix<std::int64_t> det_inv_;
  std::int64_t det_ = 1;
  std::int64_t form_scale_ = 1;
  std::vector<Root> positive_;
  std::unordered_set<Weight, WeightHash> all_roots_;
  std::size_t highest_ = 0;
};

/// Height of a simple-root coordinate vector.
inline std::int64_t height(const Weight& simple) {
  return std::accumulate(simple.begin(), simple.end(), std::int64_t{0});
}

}  // namespace lie
