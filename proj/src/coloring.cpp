#include "rado/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rado {

Coloring::Coloring(int num_colors, const std::vector<int>& assignments) {
  if (num_colors < 1) throw std::invalid_argument("coloring: need at least one colour");
  n_colors_ = num_colors;
  n_elements_ = static_cast<std::int64_t>(assignments.size());
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    int col = assignments[i];
    if (col < 1 || col > num_colors)
      throw std::invalid_argument("coloring: colour of element " + std::to_string(i + 1) +
                                  " out of range");
    std::int64_t v = static_cast<std::int64_t>(i) + 1;
    if (!runs_.empty() && runs_.back().color == col && runs_.back().hi == v - 1)
      runs_.back().hi = v;
    else
      runs_.push_back({v, v, col});
  }
}

Coloring Coloring::from_runs(int num_colors, std::vector<ColorRun> runs) {
  if (num_colors < 1) throw std::invalid_argument("coloring: need at least one colour");
  std::sort(runs.begin(), runs.end(),
            [](const ColorRun& a, const ColorRun& b) { return a.lo < b.lo; });
  Coloring c;
  c.n_colors_ = num_colors;
  std::int64_t expect = 1;
  for (const ColorRun& r : runs) {
    if (r.hi < r.lo) continue;  // empty runs allowed in the input
    if (r.lo != expect) throw std::invalid_argument("coloring: runs must cover [1..N] contiguously");
    if (r.color < 1 || r.color > num_colors)
      throw std::invalid_argument("coloring: run colour out of range");
    if (!c.runs_.empty() && c.runs_.back().color == r.color)
      c.runs_.back().hi = r.hi;
    else
      c.runs_.push_back(r);
    expect = r.hi + 1;
  }
  c.n_elements_ = expect - 1;
  if (c.n_elements_ < 1) throw std::invalid_argument("coloring: empty ground set");
  return c;
}

Coloring Coloring::all_one(std::int64_t n_elements) {
  if (n_elements < 1) throw std::invalid_argument("coloring: empty ground set");
  Coloring c;
  c.n_colors_ = 1;
  c.n_elements_ = n_elements;
  c.runs_ = {{1, n_elements, 1}};
  return c;
}

int Coloring::color_of(std::int64_t v) const {
  if (v < 1 || v > n_elements_)
    throw std::out_of_range("coloring: element " + std::to_string(v) + " outside ground set");
  auto it = std::upper_bound(runs_.begin(), runs_.end(), v,
                             [](std::int64_t x, const ColorRun& r) { return x < r.lo; });
  --it;
  return it->color;
}

IntervalSet Coloring::class_set(int color) const {
  if (color < 1 || color > n_colors_) throw std::out_of_range("coloring: colour index out of range");
  std::vector<Interval> ivs;
  for (const ColorRun& r : runs_)
    if (r.color == color) ivs.push_back({r.lo, r.hi});
  return IntervalSet::from_intervals(std::move(ivs));
}

std::int64_t Coloring::class_size(int color) const {
  if (color < 1 || color > n_colors_) throw std::out_of_range("coloring: colour index out of range");
  std::int64_t total = 0;
  for (const ColorRun& r : runs_)
    if (r.color == color) total += r.hi - r.lo + 1;
  return total;
}

std::vector<std::int64_t> Coloring::class_elements(int color, std::size_t cap) const {
  return class_set(color).values(cap);
}

std::vector<int> Coloring::assignments(std::size_t cap) const {
  if (static_cast<std::uint64_t>(n_elements_) > cap)
    throw std::length_error("coloring: too large to materialize per-element assignments");
  std::vector<int> out(static_cast<std::size_t>(n_elements_));
  for (const ColorRun& r : runs_)
    for (std::int64_t v = r.lo; v <= r.hi; ++v) out[static_cast<std::size_t>(v - 1)] = r.color;
  return out;
}

ValidationResult validate(const Coloring& c, const LinearEquation& eq) {
  auto form = eq.balanced_form();
  for (int col = 1; col <= c.num_colors(); ++col) {
    IntervalSet cls = c.class_set(col);
    if (cls.empty()) continue;
    std::optional<SolutionWitness> w;
    if (form) {
      w = find_balanced_solution(cls, *form);
    } else {
      std::vector<std::int64_t> elems = cls.values(2'000'000);
      w = find_solution_in_set(eq, elems);
    }
    if (w) return {false, col, std::move(*w)};
  }
  return {};
}

Coloring greedy_coloring(const LinearEquation& eq, int num_colors) {
  auto form = eq.balanced_form();
  if (!form || form->rhs < 1 || form->lhs <= form->rhs)
    throw std::invalid_argument("greedy colouring needs a balanced equation with l > r >= 1");
  if (num_colors < 1) throw std::invalid_argument("greedy colouring: need at least one colour");

  const __int128 l = form->lhs, r = form->rhs;
  __int128 lp = 1, rp = 1;
  std::vector<ColorRun> runs;
  std::int64_t prev_bound = 1;  // ceil((l/r)^0) = 1
  for (int i = 1; i <= num_colors; ++i) {
    lp *= l;
    rp *= r;
    if (lp > static_cast<__int128>(4) * 1000000000000000000LL)
      throw std::overflow_error("greedy colouring: ground set exceeds the representable range");
    __int128 b = (lp + rp - 1) / rp;  // ceil(l^i / r^i)
    std::int64_t bound = static_cast<std::int64_t>(b);
    if (bound - 1 >= prev_bound) runs.push_back({prev_bound, bound - 1, i});
    prev_bound = bound;
  }
  Coloring c = Coloring::from_runs(num_colors, std::move(runs));
  ValidationResult check = validate(c, eq);
  if (!check.ok) throw std::logic_error("greedy colouring produced an invalid colouring");
  return c;
}

std::int64_t ColorClassStats::sigma_at(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > sigma.size())
    throw std::out_of_range("sigma index out of range");
  return sigma[static_cast<std::size_t>(k) - 1];
}

ColorClassStats class_stats(const Coloring& c) {
  std::vector<std::pair<std::int64_t, int>> by_size;
  by_size.reserve(static_cast<std::size_t>(c.num_colors()));
  for (int col = 1; col <= c.num_colors(); ++col) by_size.push_back({c.class_size(col), col});
  std::stable_sort(by_size.begin(), by_size.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  ColorClassStats stats;
  for (auto& [size, col] : by_size) {
    stats.sizes.push_back(size);
    stats.original_color.push_back(col);
  }
  stats.sigma.assign(stats.sizes.size(), 0);
  std::int64_t acc = 0;
  for (std::size_t i = stats.sizes.size(); i-- > 0;) {
    stats.sigma[i] = acc;
    acc += stats.sizes[i];
  }
  return stats;
}

bool factorial_size_check(const ColorClassStats& stats, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > stats.sizes.size())
    throw std::out_of_range("factorial_size_check: k out of range");
  const std::int64_t a1 = stats.sizes.empty() ? 0 : stats.sizes.front();
  const std::int64_t ak = stats.sizes[static_cast<std::size_t>(k) - 1];
  const std::int64_t sk = stats.sigma_at(k);

  // |A_k| >= |A_1|/(k-1)! - 2(sigma_k+1)  <=>  (k-1)! * (|A_k| + 2 sigma_k + 2) >= |A_1|
  __int128 fact = 1;
  for (int j = 2; j < k; ++j) {
    fact *= j;
    if (fact > a1) return true;  // RHS already below zero
  }
  return fact * (static_cast<__int128>(ak) + 2 * static_cast<__int128>(sk) + 2) >=
         static_cast<__int128>(a1);
}

LargeColorSelection select_large_colors(const ColorClassStats& stats, std::int64_t num_colors,
                                        std::int64_t n_elements) {
  if (num_colors < 1) throw std::invalid_argument("select_large_colors: need at least one colour");
  // largest j with (j!)^10 <= n, exact in integers
  int k = 1;
  __int128 fact = 1;
  for (int j = 2;; ++j) {
    fact *= j;
    bool fits = true;
    __int128 p = 1;
    for (int e = 0; e < 10 && fits; ++e) {
      p *= fact;
      if (p > num_colors) fits = false;
    }
    if (!fits) break;
    k = j;
  }
  if (k > num_colors) k = static_cast<int>(num_colors);

  LargeColorSelection sel;
  sel.k = k;
  if (static_cast<std::size_t>(k) <= stats.sizes.size()) {
    long double threshold = static_cast<long double>(n_elements) /
                            std::pow(static_cast<long double>(num_colors), 1.3L);
    sel.size_bound_holds =
        static_cast<long double>(stats.sizes[static_cast<std::size_t>(k) - 1]) >= threshold;
  }
  return sel;
}

}  // namespace rado
