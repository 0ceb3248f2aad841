#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcdfp {

using Time = std::uint64_t;
using Prob = double;

// Tolerance for probability-mass checks. Values are exact integers; only
// probabilities carry floating error.
inline constexpr double kMassTol = 1e-9;

// Finite discrete distribution over non-negative integer time values.
// Entries are kept with strictly ascending values and strictly positive
// probabilities. Total mass may be < 1 (partial distribution); a mass of 0
// (empty distribution) is legal. Immutable after construction.
class DiscreteDist {
 public:
  DiscreteDist() = default;

  // Entries must be ascending by value with no duplicates, probs > 0,
  // total mass <= 1 + tol. Throws std::invalid_argument otherwise.
  explicit DiscreteDist(std::vector<std::pair<Time, Prob>> entries);

  static DiscreteDist point(Time value, Prob p = 1.0);

  const std::vector<std::pair<Time, Prob>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Time min_value() const;
  Time max_value() const;

  Prob mass() const { return mass_; }
  bool is_complete(double tol = kMassTol) const;

  // Probability of exactly `value` (0 if not in the support).
  Prob at(Time value) const;

 private:
  std::vector<std::pair<Time, Prob>> entries_;
  Prob mass_ = 0.0;

  friend DiscreteDist convolve(const DiscreteDist&, const DiscreteDist&);
  friend DiscreteDist coalesce(const DiscreteDist&, const DiscreteDist&);
  friend std::pair<DiscreteDist, DiscreteDist> split_at(const DiscreteDist&, Time);
  // Internal: adopt already-sorted entries without re-validation.
  static DiscreteDist from_sorted(std::vector<std::pair<Time, Prob>> entries);
};

// Distribution of the sum of two independent variables.
// mass(result) = mass(a) * mass(b); duplicate sums are merged.
DiscreteDist convolve(const DiscreteDist& a, const DiscreteDist& b);

// Union of the supports, summing probabilities of equal values.
// mass(result) = mass(a) + mass(b); throws if that exceeds 1 + tol.
DiscreteDist coalesce(const DiscreteDist& a, const DiscreteDist& b);

// Splits into (values <= t, values > t). Coalescing the parts restores d.
std::pair<DiscreteDist, DiscreteDist> split_at(const DiscreteDist& d, Time t);

// Sum of probabilities of entries with value >= t, plus `residual` mass that
// is known to lie at or above every truncation point. Conservative tail.
Prob tail_geq(const DiscreteDist& d, Time t, Prob residual = 0.0);

// Strict variant: entries with value > t, plus residual.
Prob exceed_gt(const DiscreteDist& d, Time t, Prob residual = 0.0);

}  // namespace wcdfp
