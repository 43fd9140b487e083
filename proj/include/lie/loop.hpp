#pragma once

// Finite-dimensional irreducible modules for the loop algebra g[t, 1/t],
// recorded as finitely supported maps from points of Q^x to dominant weights
// (tensor products of evaluation modules at distinct points).

#include "lie/character.hpp"
#include "lie/exact.hpp"
#include "lie/fundamental_group.hpp"
#include "lie/root_system.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace lie {

/// Nonzero evaluation point.
class Point {
 public:
  explicit Point(Rational value) : value_(std::move(value)) {
    if (value_ == 0) throw Error(ErrorCode::zero_point, "evaluation points must be nonzero");
  }
  const Rational& value() const noexcept { return value_; }
  std::string str() const { return to_string(value_); }

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) { return a.value_ < b.value_; }

 private:
  Rational value_;
};

class LoopIrrep {
 public:
  using Support = std::map<Point, Weight>;

  LoopIrrep() = default;

  /// Trivial factors (weight 0) are dropped; points must be distinct.
  static LoopIrrep from_parts(const std::vector<std::pair<Point, Weight>>& parts) {
    LoopIrrep v;
    std::set<Point> seen;
    for (const auto& [a, lam] : parts) {
      if (!seen.insert(a).second) throw Error(ErrorCode::repeated_point, "point " + a.str() + " appears twice");
      v.add(a, lam);
    }
    return v;
  }

  const Support& support() const noexcept { return support_; }
  bool trivial() const noexcept { return support_.empty(); }

  /// Weight at a point; zero off the support.
  Weight at(const Point& a, std::size_t rank) const {
    auto it = support_.find(a);
    return it == support_.end() ? Weight(rank) : it->second;
  }

  friend bool operator==(const LoopIrrep&, const LoopIrrep&) = default;

 private:
  void add(const Point& a, const Weight& lam) {
    if (!lam.is_dominant()) throw Error(ErrorCode::not_dominant, "weight " + lam.str() + " at " + a.str() + " is not dominant");
    if (!lam.is_zero()) support_.emplace(a, lam);
  }

  Support support_;
};

/// Point -> nonzero class in P/Q.
using SpectralCharacter = std::map<Point, FundamentalGroupElement>;

class LoopCategory {
 public:
  explicit LoopCategory(const RootSystem& rs, Limits limits = {})
      : rs_(&rs), ring_(rs, limits), pq_(rs), adjoint_(ring_.adjoint()) {}

  const RootSystem& root_system() const noexcept { return *rs_; }
  const CharacterRing& ring() const noexcept { return ring_; }
  const FundamentalGroup& fundamental_group() const noexcept { return pq_; }

  SpectralCharacter spectral_character(const LoopIrrep& v) const {
    SpectralCharacter chi;
    for (const auto& [a, lam] : v.support()) {
      auto cls = pq_.reduce(lam);
      if (!cls.is_zero()) chi.emplace(a, std::move(cls));
    }
    return chi;
  }

  bool same_block(const LoopIrrep& v, const LoopIrrep& w) const {
    return spectral_character(v) == spectral_character(w);
  }

  /// dim Hom_g(g (x) V(lam), V(mu)).
  std::int64_t hom_adjoint_mult(const Weight& lam, const Weight& mu) const {
    return ring_.tensor_multiplicity(adjoint_, lam, mu);
  }

  /// dim Ext^1 between two irreducibles: nonzero only when they differ at no
  /// more than one point, and then a sum of adjoint multiplicities.
  std::int64_t ext1_dim(const LoopIrrep& v, const LoopIrrep& w) const {
    std::set<Point> points;
    for (const auto& [a, lam] : v.support()) points.insert(a);
    for (const auto& [a, lam] : w.support()) points.insert(a);

    std::vector<Point> differing;
    for (const auto& a : points)
      if (v.at(a, rs_->rank()) != w.at(a, rs_->rank())) differing.push_back(a);

    if (differing.size() >= 2) return 0;
    if (differing.size() == 1) {
      const auto& a = differing.front();
      return hom_adjoint_mult(v.at(a, rs_->rank()), w.at(a, rs_->rank()));
    }
    std::int64_t total = 0;
    for (const auto& a : points) total += hom_adjoint_mult(v.at(a, rs_->rank()), w.at(a, rs_->rank()));
    return total;
  }

  /// Same-point tensor products decompose as g-modules.
  DominantDecomposition tensor_at_point(const Weight& lam, const Weight& mu) const {
    return ring_.tensor_decompose(lam, mu);
  }

  /// Largest r with sum_s lam_s a_s^j = 0 for every 1 <= j < r.
  std::size_t splitting_order(const std::vector<std::pair<Weight, Point>>& parts) const {
    std::set<Point> seen;
    std::size_t nonzero = 0;
    for (const auto& [lam, a] : parts) {
      if (!seen.insert(a).second) throw Error(ErrorCode::repeated_point, "point " + a.str() + " appears twice");
      if (lam.rank() != rs_->rank()) throw Error(ErrorCode::invalid_argument, "weight has wrong rank");
      if (!lam.is_dominant()) throw Error(ErrorCode::not_dominant, "weight " + lam.str() + " is not dominant");
      if (!lam.is_zero()) ++nonzero;
    }
    if (nonzero == 0) throw Error(ErrorCode::invalid_argument, "splitting order needs a nonzero weight");

    std::vector<Rational> power;
    for (const auto& [lam, a] : parts) power.push_back(a.value());
    for (std::size_t j = 1;; ++j) {
      bool vanishes = true;
      for (std::size_t i = 0; i < rs_->rank() && vanishes; ++i) {
        Rational s = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) s += parts[k].first[i] * power[k];
        vanishes = (s == 0);
      }
      if (!vanishes) {
        // a nonsingular Vandermonde system caps the order
        if (j > nonzero) throw Error(ErrorCode::internal, "splitting order exceeds the Vandermonde bound");
        return j;
      }
      for (std::size_t k = 0; k < parts.size(); ++k) power[k] *= parts[k].second.value();
    }
  }

  /// dim Hom(W(lam), v): 1 iff the weights of v sum to lam.
  int weyl_quotient_count(const Weight& lam, const LoopIrrep& v) const {
    if (!lam.is_dominant()) throw Error(ErrorCode::not_dominant, "weight " + lam.str() + " is not dominant");
    Weight total(rs_->rank());
    for (const auto& [a, mu] : v.support()) total += mu;
    return total == lam ? 1 : 0;
  }

 private:
  const RootSystem* rs_;
  CharacterRing ring_;
  FundamentalGroup pq_;
  FormalCharacter adjoint_;
};

}  // namespace lie
