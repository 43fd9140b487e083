#pragma once

// Exact formal characters over a fixed root system.
//
// Irreducible characters come from Freudenthal's recursion on the dominant
// chamber; tensor products are decomposed with the Brauer-Klimyk rule. The
// alternating Weyl-group sums are kept for cross-checking.

#include "lie/exact.hpp"
#include "lie/root_system.hpp"
#include "lie/weight.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lie {

/// Size guards. Every expensive routine checks one of these before it starts.
struct Limits {
  std::size_t max_dim = 1'000'000;        // dimension of any character that gets expanded
  std::size_t max_weyl_group = 100'000;   // |W| for alternating sums
  std::size_t max_orbit = 1'000'000;      // Weyl orbit enumeration
  std::size_t max_power = 64;             // symmetric / exterior power degree
  std::size_t max_depth = 12;             // affine truncation depth
  std::size_t max_grade = 6;              // U(g[t]_+) grade
  std::size_t max_set = 100'000;          // BFS sets in the graded category
};

/// Finite map weight -> nonzero integer.
class FormalCharacter {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  FormalCharacter() = default;
  explicit FormalCharacter(Terms terms) {
    for (auto& [w, c] : terms)
      if (c != 0) terms_.emplace(w, c);
  }
  static FormalCharacter monomial(const Weight& w, std::int64_t c = 1) {
    FormalCharacter ch;
    ch.add(w, c);
    return ch;
  }

  void add(const Weight& w, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  std::int64_t operator[](const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// Sum of coefficients; the dimension for a module character.
  std::int64_t mass() const {
    std::int64_t s = 0;
    for (auto& [w, c] : terms_) s += c;
    return s;
  }

  FormalCharacter& operator+=(const FormalCharacter& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  FormalCharacter& operator-=(const FormalCharacter& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  FormalCharacter& operator*=(std::int64_t k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= k;
    return *this;
  }
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator*(std::int64_t k, FormalCharacter a) { return a *= k; }

  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
    std::unordered_map<Weight, std::int64_t, WeightHash> acc;
    acc.reserve(a.size() * 4 + b.size() * 4);
    for (auto& [wa, ca] : a.terms_)
      for (auto& [wb, cb] : b.terms_) acc[wa + wb] += ca * cb;
    FormalCharacter out;
    for (auto& [w, c] : acc)
      if (c != 0) out.terms_.emplace(w, c);
    return out;
  }

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  Terms terms_;
};

/// Finite map dominant weight -> positive multiplicity.
class DominantDecomposition {
 public:
  using Mults = std::map<Weight, std::int64_t>;

  DominantDecomposition() = default;

  void add(const Weight& w, std::int64_t c) {
    if (c == 0) return;
    if (!w.is_dominant()) throw Error(ErrorCode::not_dominant, "decomposition key " + w.str() + " is not dominant");
    auto& slot = mults_[w];
    slot += c;
    if (slot < 0) throw Error(ErrorCode::not_module_character, "negative multiplicity at " + w.str());
    if (slot == 0) mults_.erase(w);
  }

  std::int64_t operator[](const Weight& w) const {
    auto it = mults_.find(w);
    return it == mults_.end() ? 0 : it->second;
  }
  const Mults& mults() const noexcept { return mults_; }
  std::size_t size() const noexcept { return mults_.size(); }
  bool empty() const noexcept { return mults_.empty(); }
  auto begin() const noexcept { return mults_.begin(); }
  auto end() const noexcept { return mults_.end(); }

  friend bool operator==(const DominantDecomposition&, const DominantDecomposition&) = default;

 private:
  Mults mults_;
};

class CharacterRing {
 public:
  explicit CharacterRing(const RootSystem& rs, Limits limits = {}) : rs_(&rs), limits_(limits) {
    // det(A) times the height of w, read off the rows of A^-1
    const auto& fr = rs.fund_to_root();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Rational row = 0;
      for (std::size_t k = 0; k < rs.rank(); ++k) row += fr(i, k);
      level_coef_.push_back(to_int64(row * rs.cartan_determinant()));
    }
  }

  const RootSystem& root_system() const noexcept { return *rs_; }
  const Limits& limits() const noexcept { return limits_; }

  /// Weyl dimension formula.
  Integer dim_irreducible(const Weight& lam) const {
    require_dominant(lam, "dim_irreducible");
    const Weight lr = lam + rs_->rho();
    Rational d = 1;
    for (const auto& a : rs_->positive_roots())
      d *= Rational(rs_->scaled_inner_product(lr, a.weight), rs_->scaled_inner_product(rs_->rho(), a.weight));
    return boost::multiprecision::numerator(d);
  }

  /// Multiplicities of the dominant weights of V(lam) (Freudenthal).
  std::map<Weight, std::int64_t> dominant_multiplicities(const Weight& lam) const {
    require_dominant(lam, "dominant_multiplicities");
    check_dim(lam);

    // dominant weights below lam are connected to lam by single positive-root steps
    std::vector<Weight> doms{lam};
    std::unordered_set<Weight, WeightHash> seen{lam};
    for (std::size_t k = 0; k < doms.size(); ++k)
      for (const auto& a : rs_->positive_roots()) {
        Weight mu = doms[k] - a.weight;
        if (mu.is_dominant() && seen.insert(mu).second) doms.push_back(mu);
      }
    std::vector<std::pair<std::int64_t, Weight>> ordered;
    for (const auto& mu : doms) ordered.emplace_back(level(lam) - level(mu), mu);
    std::sort(ordered.begin(), ordered.end());

    std::unordered_map<Weight, std::int64_t, WeightHash> mult;
    mult[lam] = 1;
    const Weight rho = rs_->rho();
    const Weight lr = lam + rho;
    const std::int64_t top = rs_->scaled_inner_product(lr, lr);
    const auto& pos = rs_->positive_roots();
    // tail[r][x] = sum_{k >= 1} m(x + k a_r) (x + k a_r, a_r)
    std::vector<std::unordered_map<Weight, __int128, WeightHash>> tail(pos.size());
    auto string_sum = [&](const Weight& mu, std::size_t r) {
      const Weight& a = pos[r].weight;
      auto& cache = tail[r];
      std::vector<std::pair<Weight, __int128>> walk;
      __int128 base = 0;
      for (Weight x = mu;;) {
        if (auto hit = cache.find(x); hit != cache.end()) {
          base = hit->second;
          break;
        }
        Weight y = x + a;
        auto it = mult.find(rs_->dominant_representative(y).first);
        if (it == mult.end()) {
          cache.emplace(x, 0);
          break;
        }
        walk.emplace_back(x, static_cast<__int128>(it->second) * rs_->scaled_inner_product(y, a));
        x = std::move(y);
      }
      for (auto k = walk.size(); k-- > 0;) {
        base += walk[k].second;
        cache.emplace(std::move(walk[k].first), base);
      }
      return base;
    };
    for (const auto& [depth, mu] : ordered) {
      if (depth == 0) continue;
      __int128 num = 0;
      for (std::size_t r = 0; r < pos.size(); ++r) num += string_sum(mu, r);
      const Weight mr = mu + rho;
      const std::int64_t den = top - rs_->scaled_inner_product(mr, mr);
      if (den <= 0 || (2 * num) % den != 0)
        throw Error(ErrorCode::internal, "Freudenthal recursion failed at " + mu.str());
      mult[mu] = static_cast<std::int64_t>(2 * num / den);
    }
    std::map<Weight, std::int64_t> out;
    for (auto& [w, c] : mult)
      if (c != 0) out.emplace(w, c);
    return out;
  }

  FormalCharacter char_irreducible(const Weight& lam) const {
    FormalCharacter ch;
    for (const auto& [mu, c] : dominant_multiplicities(lam))
      for (const auto& w : rs_->weyl_orbit(mu, limits_.max_orbit)) ch.add(w, c);
    return ch;
  }

  /// Character of the adjoint representation.
  FormalCharacter adjoint() const { return char_irreducible(rs_->highest_root().weight); }

  /// sum over W of (-1)^l(w) e(w(lam + rho)).
  FormalCharacter weyl_numerator(const Weight& lam) const {
    require_dominant(lam, "weyl_numerator");
    if (rs_->weyl_group_order() > limits_.max_weyl_group)
      throw Error(ErrorCode::cap_exceeded, "Weyl group of " + rs_->type().str() + " exceeds the enumeration cap");
    // lam + rho is regular, so its orbit is a copy of W and BFS depth is the length
    const Weight start = lam + rs_->rho();
    std::vector<std::pair<Weight, int>> layer{{start, 0}};
    std::unordered_set<Weight, WeightHash> seen{start};
    FormalCharacter out;
    for (std::size_t k = 0; k < layer.size(); ++k) {
      auto [v, len] = layer[k];
      out.add(v, len % 2 == 0 ? 1 : -1);
      for (std::size_t i = 0; i < rs_->rank(); ++i) {
        Weight u = rs_->reflect(v, i);
        if (seen.insert(u).second) layer.emplace_back(u, len + 1);
      }
    }
    return out;
  }

  /// Multiplicities of V(nu) in chi (x) V(lam), chi any W-invariant character.
  DominantDecomposition tensor_with(const FormalCharacter& chi, const Weight& lam) const {
    require_dominant(lam, "tensor_with");
    const Weight rho = rs_->rho();
    std::map<Weight, std::int64_t> acc;
    for (const auto& [beta, c] : chi) {
      auto [sign, nu] = dot_straighten(lam + beta + rho);
      if (sign != 0) acc[nu - rho] += sign * c;
    }
    DominantDecomposition out;
    for (auto& [w, c] : acc) {
      if (c < 0) throw Error(ErrorCode::not_module_character, "negative multiplicity at " + w.str());
      out.add(w, c);
    }
    return out;
  }

  /// Multiplicity of V(mu) in chi (x) V(lam), without building the whole decomposition.
  std::int64_t tensor_multiplicity(const FormalCharacter& chi, const Weight& lam, const Weight& mu) const {
    require_dominant(lam, "tensor_multiplicity");
    require_dominant(mu, "tensor_multiplicity");
    const Weight rho = rs_->rho();
    const Weight target = mu + rho;
    std::int64_t m = 0;
    for (const auto& [beta, c] : chi) {
      auto [sign, nu] = dot_straighten(lam + beta + rho);
      if (sign != 0 && nu == target) m += sign * c;
    }
    return m;
  }

  DominantDecomposition tensor_decompose(const Weight& lam, const Weight& mu) const {
    require_dominant(lam, "tensor_decompose");
    require_dominant(mu, "tensor_decompose");
    // expand the smaller factor
    if (dim_irreducible(lam) < dim_irreducible(mu)) return tensor_with(char_irreducible(lam), mu);
    return tensor_with(char_irreducible(mu), lam);
  }

  /// Iterated extraction of highest dominant weights.
  DominantDecomposition decompose(const FormalCharacter& ch) const {
    // W-invariance: checked on the simple reflections
    std::map<Weight, std::int64_t> dom;
    for (const auto& [w, c] : ch) {
      for (std::size_t i = 0; i < rs_->rank(); ++i)
        if (ch[rs_->reflect(w, i)] != c)
          throw Error(ErrorCode::not_module_character, "character is not Weyl-invariant at " + w.str());
      if (w.is_dominant()) dom.emplace(w, c);
    }
    DominantDecomposition out;
    while (!dom.empty()) {
      auto top = dom.begin();
      for (auto it = dom.begin(); it != dom.end(); ++it) {
        auto lt = level(it->first), ltop = level(top->first);
        if (lt > ltop || (lt == ltop && it->first > top->first)) top = it;
      }
      const Weight lam = top->first;
      const std::int64_t c = top->second;
      if (c < 0) throw Error(ErrorCode::not_module_character, "negative multiplicity at " + lam.str());
      out.add(lam, c);
      for (const auto& [mu, m] : dominant_multiplicities(lam)) {
        auto& slot = dom[mu];
        slot -= c * m;
        if (slot == 0) dom.erase(mu);
      }
    }
    return out;
  }

  /// sum of mults(lam) * ch V(lam).
  FormalCharacter expand(const DominantDecomposition& d) const {
    FormalCharacter out;
    for (const auto& [lam, c] : d) out += c * char_irreducible(lam);
    return out;
  }

  /// e(mu) -> e(k mu).
  FormalCharacter adams(std::int64_t k, const FormalCharacter& ch) const {
    if (k <= 0) throw Error(ErrorCode::invalid_argument, "Adams operation needs k >= 1");
    FormalCharacter out;
    for (const auto& [w, c] : ch) out.add(k * w, c);
    return out;
  }

  FormalCharacter sym_power(std::size_t k, const FormalCharacter& ch) const { return power(k, ch, false); }
  FormalCharacter ext_power(std::size_t k, const FormalCharacter& ch) const { return power(k, ch, true); }

  /// (lam, lam + 2 rho) in the normalized form.
  Rational casimir(const Weight& lam) const {
    require_dominant(lam, "casimir");
    return rs_->inner_product(lam, lam + 2 * rs_->rho());
  }

  /// Strictly increasing along the dominance order; integral.
  std::int64_t level(const Weight& w) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rs_->rank(); ++i) s += level_coef_[i] * w[i];
    return s;
  }

 private:
  void require_dominant(const Weight& w, const char* op) const {
    if (w.rank() != rs_->rank()) throw Error(ErrorCode::invalid_argument, std::string(op) + ": weight has wrong rank");
    if (!w.is_dominant()) throw Error(ErrorCode::not_dominant, std::string(op) + ": " + w.str() + " is not dominant");
  }

  void check_dim(const Weight& lam) const {
    if (dim_irreducible(lam) > limits_.max_dim)
      throw Error(ErrorCode::cap_exceeded, "dim V(" + lam.str() + ") exceeds cap " + std::to_string(limits_.max_dim));
  }

  /// w with w(v) dominant; sign (-1)^l(w), or 0 when v lies on a wall.
  std::pair<int, Weight> dot_straighten(Weight v) const {
    int sign = 1;
    for (;;) {
      std::size_t i = 0;
      while (i < rs_->rank() && v[i] > 0) ++i;
      if (i == rs_->rank()) return {sign, v};
      if (v[i] == 0) return {0, v};
      v = rs_->reflect(v, i);
      sign = -sign;
    }
  }

  FormalCharacter power(std::size_t k, const FormalCharacter& ch, bool exterior) const {
    if (k > limits_.max_power) throw Error(ErrorCode::cap_exceeded, "power degree exceeds cap");
    const std::int64_t d = ch.mass();
    if (d >= 0) {
      Integer dim = exterior ? binomial(d, k) : binomial(d + static_cast<std::int64_t>(k) - 1, k);
      if (k > 0 && dim > limits_.max_dim) throw Error(ErrorCode::cap_exceeded, "power dimension exceeds cap");
    }
    // Newton: k P_k = sum_j (+-1)^(j-1) psi_j P_(k-j)
    std::vector<FormalCharacter> p{FormalCharacter::monomial(Weight::zero(rs_->rank()))};
    for (std::size_t m = 1; m <= k; ++m) {
      FormalCharacter acc;
      for (std::size_t j = 1; j <= m; ++j) {
        FormalCharacter term = adams(static_cast<std::int64_t>(j), ch) * p[m - j];
        if (exterior && j % 2 == 0) term *= -1;
        acc += term;
      }
      FormalCharacter next;
      for (const auto& [w, c] : acc) {
        if (c % static_cast<std::int64_t>(m) != 0) throw Error(ErrorCode::internal, "Newton recursion not integral");
        next.add(w, c / static_cast<std::int64_t>(m));
      }
      p.push_back(std::move(next));
    }
    return p[k];
  }

  static Integer binomial(std::int64_t n, std::size_t k) {
    if (n < 0 || static_cast<std::int64_t>(k) > n) return 0;
    Integer r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - static_cast<std::int64_t>(i)) / (i + 1);
    return r;
  }

  const RootSystem* rs_;
  Limits limits_;
  std::vector<std::int64_t> level_coef_;
};

}  // namespace lie
