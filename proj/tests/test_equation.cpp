#include <doctest.h>

#include <stdexcept>

#include <random>

#include "rado/equation.hpp"

using namespace rado;

namespace {

// reference oracle: plain odometer over value tuples in lexicographic order
std::optional<SolutionWitness> odometer_find(const LinearEquation& eq,
                                             std::vector<std::int64_t> dom) {
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  if (dom.empty()) return std::nullopt;
  const auto& cs = eq.coefficients();
  std::vector<std::size_t> idx(cs.size(), 0);
  while (true) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) sum += cs[i] * dom[idx[i]];
    if (sum == 0) {
      std::vector<std::int64_t> vals;
      for (std::size_t i : idx) vals.push_back(dom[i]);
      return SolutionWitness{vals};
    }
    std::size_t pos = cs.size();
    while (pos > 0 && idx[pos - 1] + 1 == dom.size()) idx[--pos] = 0;
    if (pos == 0) return std::nullopt;
    ++idx[pos - 1];
  }
}

}  // namespace

TEST_CASE("parsing and balanced form") {
  auto eq = LinearEquation::parse("1 1 -1");
  CHECK(eq.arity() == 3);
  CHECK(eq.balanced_form() == BalancedForm{2, 1});
  CHECK(eq.text() == "1 1 -1");

  auto b = LinearEquation::parse("balanced 3 2");
  CHECK(b == LinearEquation::balanced(3, 2));
  CHECK(b.text() == "1 1 1 -1 -1");

  CHECK(!LinearEquation::parse("1 2 -3").balanced_form());
  CHECK_THROWS_AS(LinearEquation::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(LinearEquation::parse("1 0 -1"), std::invalid_argument);
  CHECK_THROWS_AS(LinearEquation::parse("1 x"), std::invalid_argument);
}

TEST_CASE("invariant and regular classification") {
  CHECK(is_invariant(LinearEquation::parse("1 1 -2")));
  CHECK(!is_invariant(LinearEquation::parse("1 1 -1")));
  CHECK(!is_invariant(LinearEquation::parse("1 1 1 -1 -1")));

  CHECK(is_regular(LinearEquation::parse("1 1 1 -1 -1")));
  CHECK(is_regular(LinearEquation::parse("1 2 1 -1 -1")));
  CHECK(!is_regular(LinearEquation::parse("1 2")));

  // enumeration backs the (1,2) example: none of the 3 nonempty subsets is 0
  for (std::int64_t mask = 1; mask < 4; ++mask) {
    std::int64_t sum = 0;
    if (mask & 1) sum += 1;
    if (mask & 2) sum += 2;
    CHECK(sum != 0);
  }

  // invariant implies regular on random small equations
  std::mt19937_64 rng(7);
  for (int it = 0; it < 500; ++it) {
    std::vector<std::int64_t> cs;
    int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
      std::int64_t c = static_cast<std::int64_t>(rng() % 9) - 4;
      cs.push_back(c == 0 ? 1 : c);
    }
    LinearEquation eq(cs);
    if (is_invariant(eq)) CHECK(is_regular(eq));
  }
}

TEST_CASE("check_solution") {
  CHECK(check_solution(LinearEquation::parse("1 1 1 -1 -1"), {{1, 1, 1, 1, 2}}));
  CHECK(check_solution(LinearEquation::parse("1 1 -1"), {{2, 3, 5}}));
  CHECK(check_solution(LinearEquation::parse("1 2 1 -1 -1"), {{1, 1, 1, 2, 2}}));
  CHECK(!check_solution(LinearEquation::parse("1 1 -1"), {{2, 3, 6}}));
  CHECK_THROWS_AS(check_solution(LinearEquation::parse("1 1 -1"), {{1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("find_solution_in_set examples") {
  auto schur = LinearEquation::parse("1 1 -1");
  std::vector<std::int64_t> a{1, 2, 4};
  auto w = find_solution_in_set(schur, a);
  REQUIRE(w);
  CHECK(w->values == std::vector<std::int64_t>{1, 1, 2});

  std::vector<std::int64_t> b{1, 4};
  CHECK(!find_solution_in_set(schur, b));

  auto eq32 = LinearEquation::balanced(3, 2);
  std::vector<std::int64_t> c{1, 2};
  auto w2 = find_solution_in_set(eq32, c);
  REQUIRE(w2);
  CHECK(w2->values == std::vector<std::int64_t>{1, 1, 1, 1, 2});

  std::vector<std::int64_t> empty;
  CHECK(!find_solution_in_set(schur, empty));
}

TEST_CASE("witnesses stay inside the domain and verify") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    std::vector<std::int64_t> dom;
    std::size_t size = 1 + rng() % 8;
    for (std::size_t i = 0; i < size; ++i) dom.push_back(1 + static_cast<std::int64_t>(rng() % 20));
    int l = 1 + static_cast<int>(rng() % 3), r = 1 + static_cast<int>(rng() % 2);
    auto eq = LinearEquation::balanced(l, r);
    if (auto w = find_solution_in_set(eq, dom)) {
      CHECK(check_solution(eq, *w));
      for (std::int64_t v : w->values)
        CHECK(std::find(dom.begin(), dom.end(), v) != dom.end());
    }
  }
}

TEST_CASE("all three routes agree with the odometer oracle") {
  std::vector<LinearEquation> eqs{LinearEquation::balanced(2, 1), LinearEquation::balanced(2, 2),
                                  LinearEquation::balanced(3, 2),
                                  LinearEquation::parse("1 2 1 -1 -1")};
  for (const auto& eq : eqs) {
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
      std::vector<std::int64_t> dom;
      for (int v = 1; v <= 8; ++v)
        if (mask >> (v - 1) & 1) dom.push_back(v);
      auto expect = odometer_find(eq, dom);
      auto naive = find_solution_naive(eq, dom);
      CHECK(naive == expect);
      if (eq.balanced_form()) {
        auto split = find_solution_balanced_split(eq, dom);
        CHECK(split == expect);
      }
    }
  }
}

TEST_CASE("extend_solution examples") {
  auto eq21 = LinearEquation::balanced(2, 1);
  SolutionWitness w{{1, 1, 2}};
  auto big = extend_solution(eq21, w, 3, 6);
  CHECK(big.values.size() == 21);
  CHECK(check_solution(LinearEquation::balanced(12, 9), big));

  CHECK(extend_solution(eq21, w, 1, 0) == w);

  auto eq32 = LinearEquation::balanced(3, 2);
  SolutionWitness w2{{1, 1, 1, 1, 2}};
  auto ext = extend_solution(eq32, w2, 2, 1);
  CHECK(ext.values.size() == 12);  // (7,5)
  auto eq75 = LinearEquation::balanced(7, 5);
  CHECK(check_solution(eq75, ext));
  std::int64_t lhs = 0;
  for (int i = 0; i < 7; ++i) lhs += ext.values[static_cast<std::size_t>(i)];
  CHECK(lhs == 7);

  CHECK_THROWS_AS(extend_solution(LinearEquation::parse("1 2 -1"), w, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(extend_solution(eq21, w, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(extend_solution(eq21, SolutionWitness{{1, 1, 3}}, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("extension property over random witnesses") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 400; ++it) {
    int l = 1 + static_cast<int>(rng() % 4), r = 1 + static_cast<int>(rng() % 3);
    // build a valid witness directly: y values random, x values split the total
    std::vector<std::int64_t> xs(static_cast<std::size_t>(l), 1), ys;
    std::int64_t total = l;
    for (int i = 0; i < r - 1; ++i) {
      std::int64_t y = 1 + static_cast<std::int64_t>(rng() % 5);
      ys.push_back(y);
    }
    std::int64_t rest = total;
    for (std::int64_t y : ys) rest -= y;
    if (rest < 1) {
      xs[0] += 1 - rest;  // raise the first x so the last y can be >= 1
      total = 0;
      for (std::int64_t x : xs) total += x;
      rest = total;
      for (std::int64_t y : ys) rest -= y;
    }
    ys.push_back(rest);
    std::vector<std::int64_t> vals = xs;
    vals.insert(vals.end(), ys.begin(), ys.end());
    auto eq = LinearEquation::balanced(l, r);
    SolutionWitness w{vals};
    REQUIRE(check_solution(eq, w));
    int t = 1 + static_cast<int>(rng() % 5);
    int pad = static_cast<int>(rng() % 6);
    auto ext = extend_solution(eq, w, t, pad);
    CHECK(check_solution(LinearEquation::balanced(l * t + pad, r * t + pad), ext));
    for (std::int64_t v : ext.values)
      CHECK(std::find(vals.begin(), vals.end(), v) != vals.end());
  }
}
