#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rado/equation.hpp"
#include "rado/interval_set.hpp"

namespace rado {

// Maximal run of consecutive integers sharing one colour.
struct ColorRun {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  int color = 0;
  bool operator==(const ColorRun&) const = default;
};

// An n-colouring of {1..N}. Stored run-length encoded: colour classes of
// constructive colourings are long intervals, and N can run into the billions.
class Coloring {
 public:
  // assignments[i] is the colour of integer i+1; colours are 1-based.
  Coloring(int num_colors, const std::vector<int>& assignments);
  static Coloring from_runs(int num_colors, std::vector<ColorRun> runs);
  static Coloring all_one(std::int64_t n_elements);

  std::int64_t ground_size() const { return n_elements_; }
  int num_colors() const { return n_colors_; }
  int color_of(std::int64_t v) const;  // throws if v outside [1..N]

  IntervalSet class_set(int color) const;
  std::int64_t class_size(int color) const;
  std::vector<std::int64_t> class_elements(int color, std::size_t cap = 2'000'000) const;

  const std::vector<ColorRun>& runs() const { return runs_; }
  std::vector<int> assignments(std::size_t cap = 10'000'000) const;

  bool operator==(const Coloring&) const = default;

 private:
  Coloring() = default;
  std::int64_t n_elements_ = 0;
  int n_colors_ = 0;
  std::vector<ColorRun> runs_;  // ascending, contiguous cover of [1..N]
};

struct ValidationResult {
  bool ok = true;
  int color = 0;                // smallest offending colour when !ok
  SolutionWitness witness;      // lexicographically smallest in that class
};

// ok iff no colour class contains a solution of eq.
ValidationResult validate(const Coloring& c, const LinearEquation& eq);

// Interval colouring for a balanced equation with l > r: with a = l/r, colour i
// covers [ceil(a^(i-1)), ceil(a^i) - 1]; the whole colouring spans
// N = ceil(a^n) - 1 and admits no monochromatic solution.
Coloring greedy_coloring(const LinearEquation& eq, int num_colors);

// Class sizes sorted descending, suffix sums, and the size-sorted original
// colour indices.
struct ColorClassStats {
  std::vector<std::int64_t> sizes;       // descending
  std::vector<std::int64_t> sigma;       // sigma[k-1] = sum of sizes[k..]
  std::vector<int> original_color;       // original_color[j] = colour with j-th largest class
  std::int64_t sigma_at(int k) const;    // 1-based
};

ColorClassStats class_stats(const Coloring& c);

// |A_k| >= |A_1|/(k-1)! - 2*(sigma_k + 1), evaluated exactly in integers.
// A property-test harness for sum-free partitions, not a proof device.
bool factorial_size_check(const ColorClassStats& stats, int k);

struct LargeColorSelection {
  int k = 1;
  bool size_bound_holds = false;  // |A_k| >= N / n^1.3 for the given stats
};

// k = max{ j >= 1 : j! <= n^0.1 } clamped to [1..n]; the factorial rule is
// evaluated exactly as (j!)^10 <= n.
LargeColorSelection select_large_colors(const ColorClassStats& stats, std::int64_t num_colors,
                                        std::int64_t n_elements);

}  // namespace rado
