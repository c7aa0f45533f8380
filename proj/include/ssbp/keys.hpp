#pragma once

#include <compare>
#include <cmath>
#include <cstdint>
#include <limits>

namespace ssbp {

using NodeId = std::uint32_t;
using EdgeIndex = std::uint32_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Weight of an unrestricted edge. Every finite weight compares below it.
inline constexpr double kUnrestricted = kInf;

inline bool is_restricted(double weight) noexcept { return weight < kUnrestricted; }

/// Strictly ordered comparison key for weights and capacities.
///
/// Keys compare lexicographically on (value, id). Edge weights use the edge id,
/// which makes every pair of edges comparable without ties. Capacities given by
/// the caller use id -1, so a capacity numerically equal to an edge weight sorts
/// strictly below that edge. Infinite values always carry id -1: there is one
/// +inf key and one -inf key.
class TieKey {
public:
  constexpr TieKey() noexcept : value_(-kInf), id_(-1) {}
  constexpr TieKey(double value, std::int64_t id) noexcept
      : value_(value), id_(value == kInf || value == -kInf ? -1 : id) {}

  static constexpr TieKey capacity(double value) noexcept { return {value, -1}; }
  static constexpr TieKey pos_inf() noexcept { return {kInf, -1}; }
  static constexpr TieKey neg_inf() noexcept { return {-kInf, -1}; }

  constexpr double value() const noexcept { return value_; }
  constexpr std::int64_t id() const noexcept { return id_; }
  constexpr bool is_pos_inf() const noexcept { return value_ == kInf; }
  constexpr bool is_neg_inf() const noexcept { return value_ == -kInf; }

  friend constexpr bool operator==(const TieKey&, const TieKey&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const TieKey& a, const TieKey& b) noexcept {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return a.id_ <=> b.id_;
  }

private:
  double value_;
  std::int64_t id_;
};

constexpr const TieKey& min_key(const TieKey& a, const TieKey& b) noexcept { return b < a ? b : a; }
constexpr const TieKey& max_key(const TieKey& a, const TieKey& b) noexcept { return a < b ? b : a; }

}  // namespace ssbp
