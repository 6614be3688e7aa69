#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rado/interval_set.hpp"

namespace rado {

// x_1 + ... + x_lhs = y_1 + ... + y_rhs, all coefficients ±1.
struct BalancedForm {
  int lhs = 0;
  int rhs = 0;
  bool operator==(const BalancedForm&) const = default;
};

// Linear equation a_1 x_1 + ... + a_k x_k = 0 over positive integer variables.
// Positive coefficients are left-hand-side variables, negative ones right-hand-side.
class LinearEquation {
 public:
  explicit LinearEquation(std::vector<std::int64_t> coefficients);

  static LinearEquation balanced(int lhs, int rhs);
  // "1 1 -1" or the shorthand "balanced L R".
  static LinearEquation parse(std::string_view text);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  int arity() const { return static_cast<int>(coeffs_.size()); }
  std::optional<BalancedForm> balanced_form() const;
  std::string text() const;

  bool operator==(const LinearEquation&) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

// Values assigned to the equation's variables, in coefficient order.
struct SolutionWitness {
  std::vector<std::int64_t> values;
  bool operator==(const SolutionWitness&) const = default;
};

// Sum of coefficients is zero (solution sets are shift-invariant).
bool is_invariant(const LinearEquation& eq);

// Some nonempty subset of coefficients sums to zero.
bool is_regular(const LinearEquation& eq);

// Throws std::invalid_argument on arity mismatch.
bool check_solution(const LinearEquation& eq, const SolutionWitness& w);

// Lexicographically smallest witness with values drawn from `values`
// (repeats allowed), or nullopt. Dispatches between the naive search and the
// LHS/RHS sum-split below.
std::optional<SolutionWitness> find_solution_in_set(const LinearEquation& eq,
                                                    std::span<const std::int64_t> values);

// Depth-first enumeration in lexicographic value order with bound pruning.
// Correct for every equation; the reference route.
std::optional<SolutionWitness> find_solution_naive(const LinearEquation& eq,
                                                   std::span<const std::int64_t> values);

// Meet-in-the-middle over LHS sums vs RHS sums; balanced equations only.
std::optional<SolutionWitness> find_solution_balanced_split(const LinearEquation& eq,
                                                            std::span<const std::int64_t> values);

// Same split, operating directly on an interval-set domain (used by the
// colouring validator so interval classes of any size can be checked).
std::optional<SolutionWitness> find_balanced_solution(const IntervalSet& values, BalancedForm form);

// Turns a witness of the (l, r) balanced equation into one of the
// (l*t + pad, r*t + pad) equation: every value repeated t times, then `pad`
// copies of the first LHS value appended to both sides.
SolutionWitness extend_solution(const LinearEquation& eq, const SolutionWitness& w, int t, int pad);

}  // namespace rado
