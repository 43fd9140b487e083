#pragma once

// Integral lattice vectors of rank at most 8, used both for weights in the
// fundamental-weight basis and for root-lattice coordinates.

#include "lie/exact.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lie {

inline constexpr std::size_t kMaxRank = 9;  // 8 finite nodes plus the affine node

class Weight {
 public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::size_t rank) : rank_(static_cast<std::uint8_t>(rank)) {
    if (rank > kMaxRank) throw Error(ErrorCode::invalid_argument, "rank too large");
  }
  Weight(std::initializer_list<value_type> coords) : Weight(coords.size()) {
    std::copy(coords.begin(), coords.end(), c_.begin());
  }
  explicit Weight(std::span<const value_type> coords) : Weight(coords.size()) {
    std::copy(coords.begin(), coords.end(), c_.begin());
  }

  static Weight zero(std::size_t rank) { return Weight(rank); }
  static Weight unit(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w[i] = 1;
    return w;
  }

  std::size_t rank() const noexcept { return rank_; }
  value_type& operator[](std::size_t i) noexcept { return c_[i]; }
  value_type operator[](std::size_t i) const noexcept { return c_[i]; }

  std::span<const value_type> coords() const noexcept { return {c_.data(), rank_}; }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.begin() + rank_; }

  bool is_zero() const noexcept {
    return std::all_of(begin(), end(), [](value_type x) { return x == 0; });
  }
  bool is_dominant() const noexcept {
    return std::all_of(begin(), end(), [](value_type x) { return x >= 0; });
  }
  bool is_regular_dominant() const noexcept {
    return std::all_of(begin(), end(), [](value_type x) { return x > 0; });
  }

  Weight& operator+=(const Weight& o) noexcept {
    for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) noexcept {
    for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(value_type k) noexcept {
    for (std::size_t i = 0; i < rank_; ++i) c_[i] *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) noexcept { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) noexcept { return a -= b; }
  friend Weight operator*(value_type k, Weight a) noexcept { return a *= k; }
  friend Weight operator-(Weight a) noexcept { return a *= -1; }

  friend bool operator==(const Weight& a, const Weight& b) noexcept {
    return a.rank_ == b.rank_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend auto operator<=>(const Weight& a, const Weight& b) noexcept {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ rank_;
    for (auto x : coords()) {
      h ^= std::hash<value_type>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  /// Compact "[a,b,c]" form; also the key format of serialized characters.
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rank_; ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s + "]";
  }

 private:
  std::array<value_type, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept { return w.hash(); }
};

}  // namespace lie
