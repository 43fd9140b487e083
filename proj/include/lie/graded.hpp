#pragma once

// The category of N-graded g[t]-modules at the level of multiplicities:
// simples V(lam, r), projective multiplicities, Ext groups between simples,
// the orders on P+ x N, interval-closed sets and their Ext-quivers.

#include "lie/character.hpp"
#include "lie/exact.hpp"
#include "lie/root_system.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lie {

struct GradedSimple {
  Weight weight;
  std::int64_t grade = 0;

  std::string str() const { return "(" + weight.str() + "," + std::to_string(grade) + ")"; }

  friend bool operator==(const GradedSimple&, const GradedSimple&) = default;
  friend auto operator<=>(const GradedSimple& a, const GradedSimple& b) {
    if (auto c = a.grade <=> b.grade; c != 0) return c;
    return a.weight <=> b.weight;
  }
};

enum class OrderKind { full, psi };

/// Finite subset of P+ x N together with the order it is closed for.
struct GammaSet {
  std::set<GradedSimple> elements;
  OrderKind order = OrderKind::full;
  Weight psi;  // only read when order == psi
};

struct Arrow {
  GradedSimple source;
  GradedSimple target;
  std::int64_t multiplicity = 0;
};

/// Arrows point from grade s to grade s - 1.
struct Quiver {
  std::vector<GradedSimple> vertices;
  std::vector<Arrow> arrows;
};

class GradedCategory {
 public:
  explicit GradedCategory(const RootSystem& rs, Limits limits = {})
      : rs_(&rs), ring_(rs, limits), limits_(limits), adjoint_(ring_.adjoint()) {}

  const RootSystem& root_system() const noexcept { return *rs_; }
  const CharacterRing& ring() const noexcept { return ring_; }

  /// Character of U(g[t]_+)[k]: sum over partitions of k of the tensor
  /// products of S^{m_r}(g), m_r the number of parts equal to r.
  FormalCharacter uplus_character(std::size_t k) const {
    if (k > limits_.max_grade) throw Error(ErrorCode::cap_exceeded, "U(g[t]_+) grade exceeds cap");
    std::lock_guard lock(mutex_);
    if (auto it = uplus_cache_.find(k); it != uplus_cache_.end()) return it->second;

    FormalCharacter total;
    std::vector<std::size_t> mult(k + 1, 0);  // mult[r] = number of parts equal to r
    auto recurse = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
      if (remaining == 0) {
        FormalCharacter term = FormalCharacter::monomial(Weight(rs_->rank()));
        for (std::size_t r = 1; r <= k; ++r)
          if (mult[r] > 0) term = term * sym_adjoint(mult[r]);
        total += term;
        return;
      }
      for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
        ++mult[part];
        self(self, remaining - part, part);
        --mult[part];
      }
    };
    recurse(recurse, k, k);
    uplus_cache_.emplace(k, total);
    return total;
  }

  DominantDecomposition uplus_graded_char(std::size_t k) const { return ring_.decompose(uplus_character(k)); }

  /// [P(lam, r) : V(mu, s)].
  std::int64_t projective_mult(const GradedSimple& p, const GradedSimple& s) const {
    require(p);
    require(s);
    if (s.grade < p.grade) return 0;
    return ring_.tensor_multiplicity(uplus_character(static_cast<std::size_t>(s.grade - p.grade)), p.weight, s.weight);
  }

  /// dim Ext^1(V(a), V(b)).
  std::int64_t ext1_graded(const GradedSimple& a, const GradedSimple& b) const {
    require(a);
    require(b);
    if (b.grade != a.grade + 1) return 0;
    return ring_.tensor_multiplicity(adjoint_, a.weight, b.weight);
  }

  /// dim Ext^j(V(a), V(b)) in the subcategory killed by g (x) t^2 C[t].
  std::int64_t ext_j_truncated(const GradedSimple& a, const GradedSimple& b, std::size_t j) const {
    require(a);
    require(b);
    if (b.grade - a.grade != static_cast<std::int64_t>(j)) return 0;
    if (j > rs_->dim_algebra()) return 0;
    return ring_.tensor_multiplicity(ext_adjoint(j), a.weight, b.weight);
  }

  /// b covers a in the full order: one grade up, weight drops by a root or 0.
  bool covers_full(const GradedSimple& a, const GradedSimple& b) const {
    if (b.grade != a.grade + 1) return false;
    const Weight diff = a.weight - b.weight;
    return diff.is_zero() || rs_->is_root(diff);
  }

  /// Positive roots maximizing (psi, .) over all of Phi.
  std::vector<Root> phi_psi(const Weight& psi) const {
    if (psi.rank() != rs_->rank()) throw Error(ErrorCode::invalid_argument, "psi has wrong rank");
    std::int64_t best = 0;  // max over Phi is >= 0 since Phi = -Phi
    for (const auto& a : rs_->positive_roots()) {
      const auto v = rs_->scaled_inner_product(psi, a.weight);
      best = std::max({best, v, -v});
    }
    std::vector<Root> out;
    for (const auto& a : rs_->positive_roots())
      if (rs_->scaled_inner_product(psi, a.weight) == best) out.push_back(a);
    return out;
  }

  /// a <=_psi b: a.weight - b.weight is a sum of exactly
  /// (b.grade - a.grade) roots from phi_psi.
  bool leq_psi(const Weight& psi, const GradedSimple& a, const GradedSimple& b) const {
    const std::int64_t steps = b.grade - a.grade;
    if (steps < 0) return false;
    auto target = rs_->root_coords(a.weight - b.weight);
    if (!target) return false;
    if (steps == 0) return target->is_zero();
    auto roots = phi_psi(psi);

    std::set<Weight> layer{Weight(rs_->rank())};
    for (std::int64_t k = 0; k < steps; ++k) {
      std::set<Weight> next;
      for (const auto& s : layer)
        for (const auto& a : roots) {
          Weight t = s + a.simple;
          bool fits = true;
          for (std::size_t i = 0; i < rs_->rank() && fits; ++i) fits = t[i] <= (*target)[i];
          if (fits) next.insert(t);
        }
      layer = std::move(next);
      if (layer.empty()) return false;
    }
    return layer.contains(*target);
  }

  /// Everything below top in <=_psi, restricted to dominant weights.
  GammaSet lower_set_psi(const Weight& psi, const GradedSimple& top) const {
    require(top);
    auto roots = phi_psi(psi);
    std::set<GradedSimple> seen{top};
    std::vector<GradedSimple> queue{top};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const auto cur = queue[k];
      if (cur.grade == 0) continue;
      for (const auto& a : roots) {
        GradedSimple next{cur.weight + a.weight, cur.grade - 1};
        if (seen.insert(next).second) {
          queue.push_back(next);
          if (seen.size() > limits_.max_set) throw Error(ErrorCode::cap_exceeded, "lower set exceeds cap");
        }
      }
    }
    GammaSet out;
    out.order = OrderKind::psi;
    out.psi = psi;
    for (const auto& x : seen)
      if (x.weight.is_dominant()) out.elements.insert(x);
    return out;
  }

  bool interval_closed(const GammaSet& g) const {
    if (g.elements.empty()) return true;
    std::vector<Weight> steps = cover_steps(g);
    const std::int64_t top = g.elements.rbegin()->grade;
    const std::int64_t bottom = g.elements.begin()->grade;

    // layers[x][grade] = elements reachable from x by dominant cover steps
    std::map<GradedSimple, std::map<std::int64_t, std::set<Weight>>> up, down;
    for (const auto& x : g.elements) {
      up[x] = layers(x, steps, top, +1);
      down[x] = layers(x, steps, bottom, -1);
    }
    for (const auto& x : g.elements)
      for (const auto& z : g.elements) {
        if (z.grade - x.grade < 2) continue;
        for (std::int64_t k = x.grade + 1; k < z.grade; ++k) {
          const auto& fw = up[x][k];
          const auto& bw = down[z][k];
          for (const auto& w : fw)
            if (bw.contains(w) && !g.elements.contains(GradedSimple{w, k})) return false;
        }
      }
    return true;
  }

  Quiver build_quiver(const GammaSet& g) const {
    for (const auto& x : g.elements) require(x);
    if (!interval_closed(g)) throw Error(ErrorCode::not_interval_closed, "vertex set is not interval closed");
    Quiver q;
    // highest grade first, matching the usual top-down picture
    for (auto it = g.elements.rbegin(); it != g.elements.rend(); ++it) q.vertices.push_back(*it);
    for (const auto& src : q.vertices)
      for (const auto& tgt : q.vertices) {
        if (src.grade != tgt.grade + 1) continue;
        if (auto m = ext1_graded(tgt, src); m > 0) q.arrows.push_back({src, tgt, m});
      }
    return q;
  }

 private:
  void require(const GradedSimple& x) const {
    if (x.weight.rank() != rs_->rank()) throw Error(ErrorCode::invalid_argument, "weight has wrong rank");
    if (!x.weight.is_dominant()) throw Error(ErrorCode::not_dominant, x.str() + " has a non-dominant weight");
    if (x.grade < 0) throw Error(ErrorCode::invalid_argument, x.str() + " has a negative grade");
  }

  /// Weight drops allowed by one cover step of the set's order.
  std::vector<Weight> cover_steps(const GammaSet& g) const {
    std::vector<Weight> steps;
    if (g.order == OrderKind::full) {
      steps.push_back(Weight(rs_->rank()));
      for (const auto& a : rs_->positive_roots()) {
        steps.push_back(a.weight);
        steps.push_back(-a.weight);
      }
    } else {
      for (const auto& a : phi_psi(g.psi)) steps.push_back(a.weight);
    }
    return steps;
  }

  std::map<std::int64_t, std::set<Weight>> layers(const GradedSimple& from, const std::vector<Weight>& steps,
                                                  std::int64_t stop, int dir) const {
    std::map<std::int64_t, std::set<Weight>> out;
    std::set<Weight> cur{from.weight};
    std::size_t total = 0;
    for (std::int64_t k = from.grade; k != stop;) {
      std::set<Weight> next;
      for (const auto& w : cur)
        for (const auto& s : steps) {
          Weight v = dir > 0 ? w - s : w + s;
          if (v.is_dominant()) next.insert(v);
        }
      k += dir;
      if (k < 0) break;
      total += next.size();
      if (total > limits_.max_set) throw Error(ErrorCode::cap_exceeded, "interval enumeration exceeds cap");
      out[k] = next;
      cur = std::move(next);
    }
    return out;
  }

  FormalCharacter sym_adjoint(std::size_t m) const {
    if (auto it = sym_cache_.find(m); it != sym_cache_.end()) return it->second;
    auto c = ring_.sym_power(m, adjoint_);
    sym_cache_.emplace(m, c);
    return c;
  }

  FormalCharacter ext_adjoint(std::size_t j) const {
    std::lock_guard lock(mutex_);
    if (auto it = ext_cache_.find(j); it != ext_cache_.end()) return it->second;
    auto c = ring_.ext_power(j, adjoint_);
    ext_cache_.emplace(j, c);
    return c;
  }

  const RootSystem* rs_;
  CharacterRing ring_;
  Limits limits_;
  FormalCharacter adjoint_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, FormalCharacter> uplus_cache_;
  mutable std::map<std::size_t, FormalCharacter> sym_cache_;
  mutable std::map<std::size_t, FormalCharacter> ext_cache_;
};

}  // namespace lie
