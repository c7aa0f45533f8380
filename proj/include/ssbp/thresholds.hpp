#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssbp/keys.hpp"

namespace ssbp {

/// Sorted threshold keys lambda_1 < ... < lambda_l, with the implicit sentinels
/// lambda_0 = -inf and lambda_{l+1} = +inf.
class Thresholds {
public:
  Thresholds() : keys_{TieKey::neg_inf(), TieKey::pos_inf()} {}

  /// `sorted` must be strictly increasing and finite.
  explicit Thresholds(const std::vector<TieKey>& sorted) {
    keys_.reserve(sorted.size() + 2);
    keys_.push_back(TieKey::neg_inf());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i].is_pos_inf() || sorted[i].is_neg_inf()) {
        throw std::invalid_argument("thresholds must be finite");
      }
      if (i > 0 && !(sorted[i - 1] < sorted[i])) {
        throw std::invalid_argument("thresholds must be strictly increasing");
      }
      keys_.push_back(sorted[i]);
    }
    keys_.push_back(TieKey::pos_inf());
  }

  /// Number of real thresholds, l.
  std::size_t size() const noexcept { return keys_.size() - 2; }

  /// lambda_i for 0 <= i <= l + 1.
  const TieKey& operator[](std::size_t i) const noexcept { return keys_[i]; }

  /// I(x): the unique i with lambda_i <= x < lambda_{i+1}; I(-inf) = 0, I(+inf) = l.
  std::uint32_t index_of(const TieKey& x) const noexcept {
    if (x.is_pos_inf()) return static_cast<std::uint32_t>(size());
    auto it = std::upper_bound(keys_.begin() + 1, keys_.end() - 1, x);
    return static_cast<std::uint32_t>(it - keys_.begin() - 1);
  }

  std::uint32_t index_of(const TieKey& x, std::uint64_t& evaluations) const noexcept {
    ++evaluations;
    return index_of(x);
  }

private:
  std::vector<TieKey> keys_;
};

}  // namespace ssbp
