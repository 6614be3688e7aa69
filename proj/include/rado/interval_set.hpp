#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rado {

// Closed integer interval [lo, hi].
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return hi < lo; }
  std::int64_t count() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const Interval&) const = default;
};

// Sorted union of disjoint closed integer intervals.
//
// Doubles as the compact representation of colour classes (greedy colourings
// cover billions of consecutive integers) and as the sum-set representation
// inside the balanced-equation solver, where j-fold Minkowski sums of a
// bounded set stay small as interval unions even when they are huge as sets.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet single(std::int64_t lo, std::int64_t hi);
  static IntervalSet from_values(std::span<const std::int64_t> values);
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  bool empty() const { return ivs_.empty(); }
  std::int64_t count() const;
  bool contains(std::int64_t v) const;
  std::int64_t min_value() const;  // throws on empty
  std::int64_t max_value() const;

  const std::vector<Interval>& intervals() const { return ivs_; }

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  // {a + b : a in this, b in other}
  IntervalSet minkowski_add(const IntervalSet& other) const;
  IntervalSet negate() const;
  IntervalSet shift(std::int64_t delta) const;

  // Smallest element of this ∩ window, if any.
  std::optional<std::int64_t> min_in(const IntervalSet& window) const;

  // Materialize; throws std::length_error if count() > cap.
  std::vector<std::int64_t> values(std::size_t cap) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  explicit IntervalSet(std::vector<Interval> normalized) : ivs_(std::move(normalized)) {}
  static std::vector<Interval> normalize(std::vector<Interval> raw);

  std::vector<Interval> ivs_;
};

}  // namespace rado
