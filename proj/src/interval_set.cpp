#include "rado/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace rado {

namespace {
constexpr std::size_t kMaxIntervals = 1u << 20;
}

std::vector<Interval> IntervalSet::normalize(std::vector<Interval> raw) {
  std::erase_if(raw, [](const Interval& iv) { return iv.empty(); });
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  out.reserve(raw.size());
  for (const Interval& iv : raw) {
    // merge overlapping and adjacent runs
    if (!out.empty() && iv.lo <= out.back().hi + 1) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  if (out.size() > kMaxIntervals)
    throw std::length_error("IntervalSet: interval count limit exceeded");
  return out;
}

IntervalSet IntervalSet::single(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return IntervalSet{};
  return IntervalSet{{Interval{lo, hi}}};
}

IntervalSet IntervalSet::from_values(std::span<const std::int64_t> values) {
  std::vector<Interval> raw;
  raw.reserve(values.size());
  for (std::int64_t v : values) raw.push_back({v, v});
  return IntervalSet{normalize(std::move(raw))};
}

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  return IntervalSet{normalize(std::move(intervals))};
}

std::int64_t IntervalSet::count() const {
  std::int64_t total = 0;
  for (const Interval& iv : ivs_) total += iv.count();
  return total;
}

bool IntervalSet::contains(std::int64_t v) const {
  auto it = std::upper_bound(ivs_.begin(), ivs_.end(), v,
                             [](std::int64_t x, const Interval& iv) { return x < iv.lo; });
  if (it == ivs_.begin()) return false;
  --it;
  return v <= it->hi;
}

std::int64_t IntervalSet::min_value() const {
  if (ivs_.empty()) throw std::logic_error("IntervalSet::min_value on empty set");
  return ivs_.front().lo;
}

std::int64_t IntervalSet::max_value() const {
  if (ivs_.empty()) throw std::logic_error("IntervalSet::max_value on empty set");
  return ivs_.back().hi;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> raw = ivs_;
  raw.insert(raw.end(), other.ivs_.begin(), other.ivs_.end());
  return IntervalSet{normalize(std::move(raw))};
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < ivs_.size() && j < other.ivs_.size()) {
    const Interval& a = ivs_[i];
    const Interval& b = other.ivs_[j];
    std::int64_t lo = std::max(a.lo, b.lo);
    std::int64_t hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a.hi < b.hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet{std::move(out)};  // already sorted & disjoint
}

IntervalSet IntervalSet::minkowski_add(const IntervalSet& other) const {
  std::vector<Interval> raw;
  raw.reserve(ivs_.size() * other.ivs_.size());
  for (const Interval& a : ivs_)
    for (const Interval& b : other.ivs_) raw.push_back({a.lo + b.lo, a.hi + b.hi});
  return IntervalSet{normalize(std::move(raw))};
}

IntervalSet IntervalSet::negate() const {
  std::vector<Interval> raw;
  raw.reserve(ivs_.size());
  for (auto it = ivs_.rbegin(); it != ivs_.rend(); ++it) raw.push_back({-it->hi, -it->lo});
  return IntervalSet{std::move(raw)};
}

IntervalSet IntervalSet::shift(std::int64_t delta) const {
  std::vector<Interval> raw = ivs_;
  for (Interval& iv : raw) {
    iv.lo += delta;
    iv.hi += delta;
  }
  return IntervalSet{std::move(raw)};
}

std::optional<std::int64_t> IntervalSet::min_in(const IntervalSet& window) const {
  IntervalSet both = intersect(window);
  if (both.empty()) return std::nullopt;
  return both.min_value();
}

std::vector<std::int64_t> IntervalSet::values(std::size_t cap) const {
  std::int64_t total = count();
  if (total < 0 || static_cast<std::uint64_t>(total) > cap)
    throw std::length_error("IntervalSet::values: set too large to materialize");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(total));
  for (const Interval& iv : ivs_)
    for (std::int64_t v = iv.lo; v <= iv.hi; ++v) out.push_back(v);
  return out;
}

}  // namespace rado
