#pragma once

// Untwisted affine algebras: weights lam_bar + k Lambda_0 + m delta, the
// affine simple roots with alpha_0 = delta - theta, the affine Weyl group near
// rho_hat, and truncated Weyl-Kac characters by exact series division.

#include "lie/character.hpp"
#include "lie/exact.hpp"
#include "lie/root_system.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lie {

struct AffineWeight {
  Weight finite;
  std::int64_t level = 0;
  Rational delta = 0;

  std::string str() const {
    return "(" + finite.str() + ", " + std::to_string(level) + ", " + to_string(delta) + ")";
  }

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  friend bool operator<(const AffineWeight& a, const AffineWeight& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.delta != b.delta) return a.delta > b.delta;  // higher delta first
    return a.finite < b.finite;
  }
  friend AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
    return {a.finite + b.finite, a.level + b.level, a.delta + b.delta};
  }
  friend AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
    return {a.finite - b.finite, a.level - b.level, a.delta - b.delta};
  }
};

/// Coordinates (c_0, ..., c_n) of a nonnegative combination of affine simple roots.
using AffineRootCoords = std::vector<std::int64_t>;

inline std::int64_t height(const AffineRootCoords& c) {
  std::int64_t h = 0;
  for (auto x : c) h += x;
  return h;
}

struct AffineRootCoordsHash {
  std::size_t operator()(const AffineRootCoords& c) const noexcept {
    std::size_t h = c.size();
    for (auto x : c) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Series of weights top - c, one coefficient per root-coordinate vector c of height <= depth.
struct TruncatedAffineSeries {
  AffineWeight top;
  std::size_t depth = 0;
  std::map<AffineRootCoords, std::int64_t> relative;  // nonzero coefficients only
  std::map<AffineWeight, std::int64_t> terms;          // the same series keyed by weight

  std::int64_t operator[](const AffineWeight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }
  std::int64_t at(const AffineRootCoords& c) const {
    auto it = relative.find(c);
    return it == relative.end() ? 0 : it->second;
  }
};

struct WeylBallTerm {
  AffineRootCoords coords;  // rho_hat - w(rho_hat) in simple affine roots
  AffineWeight shift;       // w(rho_hat) - rho_hat
  int sign = 1;             // (-1)^length(w)
};

class AffineAlgebra {
 public:
  explicit AffineAlgebra(const RootSystem& rs, Limits limits = {}) : rs_(&rs), limits_(limits) {
    const std::size_t n = rs.rank();
    const Weight& theta = rs.highest_root().weight;
    theta_pair_.resize(n);
    for (std::size_t j = 0; j < n; ++j)
      theta_pair_[j] = to_int64(rs.inner_product(Weight::unit(n, j), theta));

    // cartan_[i][j] = alpha_i(h_j), i, j = 0..n
    cartan_.assign(n + 1, std::vector<std::int64_t>(n + 1, 0));
    cartan_[0][0] = 2;
    for (std::size_t j = 1; j <= n; ++j) {
      cartan_[0][j] = -theta[j - 1];
      cartan_[j][0] = -pair_theta(rs.simple_root(j - 1));
      for (std::size_t i = 1; i <= n; ++i) cartan_[i][j] = rs.simple_root(i - 1)[j - 1];
    }
  }

  const RootSystem& root_system() const noexcept { return *rs_; }
  std::size_t rank() const noexcept { return rs_->rank() + 1; }
  std::int64_t cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  std::int64_t level_of(const AffineWeight& lam) const noexcept { return lam.level; }

  /// Lambda_0 and the lifts of the fundamental weights (level 0, delta 0).
  AffineWeight lambda0() const { return {Weight(rs_->rank()), 1, 0}; }
  AffineWeight embed(const Weight& w, std::int64_t level = 0, Rational delta = 0) const {
    return {w, level, std::move(delta)};
  }

  std::vector<AffineWeight> simple_roots() const {
    std::vector<AffineWeight> out;
    out.push_back({-rs_->highest_root().weight, 0, 1});
    for (std::size_t i = 0; i < rs_->rank(); ++i) out.push_back({rs_->simple_root(i), 0, 0});
    return out;
  }

  AffineWeight delta() const { return {Weight(rs_->rank()), 0, 1}; }

  /// rho_hat(h_i) = 1 for every i, delta coefficient 0.
  AffineWeight rho_hat() const {
    return {rs_->rho(), 1 + pair_theta(rs_->rho()), 0};
  }

  /// lam(h_i) for i = 0..n; h_0 = c - h_theta.
  std::int64_t pairing(const AffineWeight& lam, std::size_t i) const {
    return i == 0 ? lam.level - pair_theta(lam.finite) : lam.finite[i - 1];
  }

  bool is_dominant(const AffineWeight& lam) const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (pairing(lam, i) < 0) return false;
    return true;
  }

  /// top - sum c_i alpha_i.
  AffineWeight lower(const AffineWeight& top, const AffineRootCoords& c) const {
    AffineWeight out = top;
    out.finite += c[0] * rs_->highest_root().weight;
    out.delta -= c[0];
    for (std::size_t i = 1; i < c.size(); ++i) out.finite -= c[i] * rs_->simple_root(i - 1);
    return out;
  }

  /// Root coordinates of top - w when that difference lies in the affine root lattice.
  std::optional<AffineRootCoords> coords_below(const AffineWeight& top, const AffineWeight& w) const {
    if (top.level != w.level) return std::nullopt;
    const Rational dd = top.delta - w.delta;
    if (!is_integral(dd)) return std::nullopt;
    const std::int64_t c0 = to_int64(dd);
    auto rest = rs_->root_coords(top.finite - w.finite + c0 * rs_->highest_root().weight);
    if (!rest) return std::nullopt;
    AffineRootCoords c{c0};
    for (std::size_t i = 0; i < rs_->rank(); ++i) c.push_back((*rest)[i]);
    return c;
  }

  /// Pairs (w(rho_hat) - rho_hat, (-1)^l(w)) with height(rho_hat - w(rho_hat)) <= depth.
  std::vector<WeylBallTerm> weyl_ball(std::size_t depth) const {
    return ball(rho_hat(), depth);
  }

  TruncatedAffineSeries numerator(const AffineWeight& lam, std::size_t depth) const {
    require_dominant(lam);
    const AffineWeight top = lam + rho_hat();
    TruncatedAffineSeries s{top, depth, {}, {}};
    for (const auto& t : ball(top, depth)) s.relative.emplace(t.coords, t.sign);
    fill_terms(s);
    return s;
  }

  TruncatedAffineSeries character(const AffineWeight& lam, std::size_t depth) const {
    require_dominant(lam);
    const auto num = ball(lam + rho_hat(), depth);
    const auto den = ball(rho_hat(), depth);

    std::unordered_map<AffineRootCoords, std::int64_t, AffineRootCoordsHash> n_map, x;
    for (const auto& t : num) n_map.emplace(t.coords, t.sign);

    // graded division by a series with leading term 1
    for (const auto& beta : lattice_points(depth)) {
      std::int64_t v = 0;
      if (auto it = n_map.find(beta); it != n_map.end()) v = it->second;
      for (const auto& g : den) {
        if (height(g.coords) == 0) continue;
        AffineRootCoords rest(beta.size());
        bool ok = true;
        for (std::size_t i = 0; i < beta.size() && ok; ++i) ok = (rest[i] = beta[i] - g.coords[i]) >= 0;
        if (!ok) continue;
        if (auto it = x.find(rest); it != x.end()) v -= g.sign * it->second;
      }
      if (v != 0) x.emplace(beta, v);
    }

    TruncatedAffineSeries s{lam, depth, {}, {}};
    for (auto& [c, v] : x) s.relative.emplace(c, v);
    fill_terms(s);
    return s;
  }

 private:
  std::int64_t pair_theta(const Weight& w) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < w.rank(); ++j) s += w[j] * theta_pair_[j];
    return s;
  }

  void require_dominant(const AffineWeight& lam) const {
    if (lam.finite.rank() != rs_->rank()) throw Error(ErrorCode::invalid_argument, "affine weight has wrong rank");
    if (!is_dominant(lam)) throw Error(ErrorCode::not_dominant, lam.str() + " is not dominant integral");
  }

  void check_depth(std::size_t depth) const {
    if (depth > limits_.max_depth) throw Error(ErrorCode::cap_exceeded, "depth exceeds cap");
  }

  /// w(top) for w in the affine Weyl group with height(top - w(top)) <= depth;
  /// top must be regular dominant, so images and group elements correspond.
  std::vector<WeylBallTerm> ball(const AffineWeight& top, std::size_t depth) const {
    check_depth(depth);
    const std::size_t m = rank();
    struct Node {
      AffineRootCoords coords;
      std::vector<std::int64_t> pair;  // w(top)(h_j)
      int sign;
    };
    std::vector<Node> nodes;
    std::vector<std::int64_t> p0(m);
    for (std::size_t j = 0; j < m; ++j) p0[j] = pairing(top, j);
    nodes.push_back({AffineRootCoords(m, 0), p0, 1});
    std::unordered_map<AffineRootCoords, std::size_t, AffineRootCoordsHash> seen{{nodes[0].coords, 0}};

    for (std::size_t k = 0; k < nodes.size(); ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t a = nodes[k].pair[i];
        if (a <= 0) continue;  // only length-increasing steps
        if (height(nodes[k].coords) + a > static_cast<std::int64_t>(depth)) continue;
        Node next = nodes[k];
        next.coords[i] += a;
        for (std::size_t j = 0; j < m; ++j) next.pair[j] -= a * cartan_[i][j];
        next.sign = -next.sign;
        if (seen.contains(next.coords)) continue;
        seen.emplace(next.coords, nodes.size());
        nodes.push_back(std::move(next));
        if (nodes.size() > limits_.max_orbit) throw Error(ErrorCode::cap_exceeded, "affine Weyl ball exceeds cap");
      }
    }
    std::vector<WeylBallTerm> out;
    out.reserve(nodes.size());
    for (auto& nd : nodes) {
      AffineWeight zero{Weight(rs_->rank()), 0, 0};
      out.push_back({nd.coords, lower(zero, nd.coords), nd.sign});
    }
    return out;
  }

  /// Nonnegative coordinate vectors ordered by height, up to depth.
  std::vector<AffineRootCoords> lattice_points(std::size_t depth) const {
    const std::size_t m = rank();
    // number of vectors is binom(depth + m, m)
    Integer count = 1;
    for (std::size_t i = 1; i <= m; ++i) count = count * (depth + i) / i;
    if (count > limits_.max_orbit) throw Error(ErrorCode::cap_exceeded, "truncated series exceeds cap");

    std::vector<AffineRootCoords> out;
    AffineRootCoords cur(m, 0);
    for (std::size_t h = 0; h <= depth; ++h) {
      auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == m) {
          cur[i] = left;
          out.push_back(cur);
          return;
        }
        for (std::int64_t v = left; v >= 0; --v) {
          cur[i] = v;
          self(self, i + 1, left - v);
        }
      };
      rec(rec, 0, static_cast<std::int64_t>(h));
    }
    return out;
  }

  void fill_terms(TruncatedAffineSeries& s) const {
    for (const auto& [c, v] : s.relative) s.terms.emplace(lower(s.top, c), v);
  }

  const RootSystem* rs_;
  Limits limits_;
  std::vector<std::int64_t> theta_pair_;          // (w_j, theta)
  std::vector<std::vector<std::int64_t>> cartan_;  // alpha_i(h_j)
};

}  // namespace lie
