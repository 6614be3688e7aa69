#include <doctest.h>

#include <stdexcept>

#include "rado/interval_set.hpp"

using rado::Interval;
using rado::IntervalSet;

TEST_CASE("interval set normalizes, merges and counts") {
  auto s = IntervalSet::from_intervals({{5, 7}, {1, 2}, {3, 4}, {10, 10}});
  CHECK(s.intervals().size() == 2);  // [1,7] and [10,10]
  CHECK(s.count() == 8);
  CHECK(s.contains(6));
  CHECK(!s.contains(8));
  CHECK(s.min_value() == 1);
  CHECK(s.max_value() == 10);
}

TEST_CASE("from_values collapses runs") {
  std::vector<std::int64_t> v{4, 1, 2, 2, 9};
  auto s = IntervalSet::from_values(v);
  CHECK(s.intervals().size() == 3);
  CHECK(s.count() == 4);
  CHECK(s.values(10) == std::vector<std::int64_t>{1, 2, 4, 9});
}

TEST_CASE("set algebra") {
  auto a = IntervalSet::single(1, 5);
  auto b = IntervalSet::single(4, 8);
  CHECK(a.intersect(b) == IntervalSet::single(4, 5));
  CHECK(a.unite(b) == IntervalSet::single(1, 8));
  CHECK(a.shift(10) == IntervalSet::single(11, 15));
  CHECK(a.negate() == IntervalSet::single(-5, -1));

  auto odd = IntervalSet::from_values(std::vector<std::int64_t>{1, 3, 5});
  auto sum = odd.minkowski_add(odd);  // {2,4,6,8,10}
  CHECK(sum.count() == 5);
  CHECK(sum.contains(10));
  CHECK(!sum.contains(3));
}

TEST_CASE("min_in picks the smallest feasible element") {
  auto dom = IntervalSet::from_values(std::vector<std::int64_t>{2, 5, 9});
  CHECK(dom.min_in(IntervalSet::single(3, 100)) == 5);
  CHECK(dom.min_in(IntervalSet::single(10, 12)) == std::nullopt);
}

TEST_CASE("values respects the cap") {
  auto big = IntervalSet::single(1, 1'000'000'000);
  CHECK_THROWS_AS(big.values(100), std::length_error);
}
