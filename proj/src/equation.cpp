#include "rado/equation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace rado {

LinearEquation::LinearEquation(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("equation: empty coefficient list");
  for (std::int64_t c : coeffs_)
    if (c == 0) throw std::invalid_argument("equation: zero coefficient");
}

LinearEquation LinearEquation::balanced(int lhs, int rhs) {
  if (lhs < 0 || rhs < 0 || lhs + rhs == 0)
    throw std::invalid_argument("balanced equation: need nonnegative sides, at least one variable");
  std::vector<std::int64_t> cs;
  cs.reserve(static_cast<std::size_t>(lhs + rhs));
  cs.insert(cs.end(), static_cast<std::size_t>(lhs), 1);
  cs.insert(cs.end(), static_cast<std::size_t>(rhs), -1);
  return LinearEquation(std::move(cs));
}

LinearEquation LinearEquation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string first;
  if (!(in >> first)) throw std::invalid_argument("equation: empty string");
  if (first == "balanced") {
    long l = 0, r = 0;
    if (!(in >> l >> r)) throw std::invalid_argument("equation: expected \"balanced L R\"");
    std::string extra;
    if (in >> extra) throw std::invalid_argument("equation: trailing tokens after \"balanced L R\"");
    if (l < 1 || r < 0 || l > 1000 || r > 1000)
      throw std::invalid_argument("equation: balanced sides out of range");
    return balanced(static_cast<int>(l), static_cast<int>(r));
  }
  std::vector<std::int64_t> cs;
  std::istringstream again{std::string(text)};
  std::int64_t c = 0;
  while (again >> c) cs.push_back(c);
  if (!again.eof()) throw std::invalid_argument("equation: non-integer token");
  return LinearEquation(std::move(cs));
}

std::optional<BalancedForm> LinearEquation::balanced_form() const {
  BalancedForm f;
  for (std::int64_t c : coeffs_) {
    if (c == 1)
      ++f.lhs;
    else if (c == -1)
      ++f.rhs;
    else
      return std::nullopt;
  }
  return f;
}

std::string LinearEquation::text() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

bool is_invariant(const LinearEquation& eq) {
  std::int64_t sum = 0;
  for (std::int64_t c : eq.coefficients()) sum += c;
  return sum == 0;
}

bool is_regular(const LinearEquation& eq) {
  // Subset sums of nonempty subsets; the set of reachable sums is bounded by
  // the coefficient magnitude range, so this stays small.
  std::unordered_set<std::int64_t> sums;
  for (std::int64_t c : eq.coefficients()) {
    std::unordered_set<std::int64_t> next = sums;
    next.insert(c);
    for (std::int64_t s : sums) next.insert(s + c);
    sums = std::move(next);
    if (sums.count(0)) return true;
  }
  return false;
}

bool check_solution(const LinearEquation& eq, const SolutionWitness& w) {
  if (w.values.size() != eq.coefficients().size())
    throw std::invalid_argument("check_solution: witness length does not match equation arity");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < w.values.size(); ++i) sum += eq.coefficients()[i] * w.values[i];
  return sum == 0;
}

namespace {

std::vector<std::int64_t> sorted_unique(std::span<const std::int64_t> values) {
  std::vector<std::int64_t> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

struct NaiveSearch {
  const std::vector<std::int64_t>& coeffs;
  const std::vector<std::int64_t>& dom;  // sorted ascending
  std::vector<std::int64_t> suf_min, suf_max;
  std::vector<std::int64_t> picked;

  bool run(std::size_t idx, std::int64_t partial) {
    if (idx == coeffs.size()) return partial == 0;
    // c*v must land in [lo, hi] for the suffix to stay completable
    std::int64_t lo = -partial - suf_max[idx + 1];
    std::int64_t hi = -partial - suf_min[idx + 1];
    std::int64_t c = coeffs[idx];
    std::int64_t vlo, vhi;
    if (c > 0) {
      vlo = ceil_div(lo, c);
      vhi = floor_div(hi, c);
    } else {
      vlo = ceil_div(hi, c);
      vhi = floor_div(lo, c);
    }
    auto from = std::lower_bound(dom.begin(), dom.end(), vlo);
    auto to = std::upper_bound(from, dom.end(), vhi);
    for (auto it = from; it != to; ++it) {
      picked.push_back(*it);
      if (run(idx + 1, partial + c * *it)) return true;
      picked.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<SolutionWitness> find_solution_naive(const LinearEquation& eq,
                                                   std::span<const std::int64_t> values) {
  std::vector<std::int64_t> dom = sorted_unique(values);
  if (dom.empty()) return std::nullopt;
  const auto& cs = eq.coefficients();
  std::size_t k = cs.size();
  NaiveSearch s{cs, dom, {}, {}, {}};
  s.suf_min.assign(k + 1, 0);
  s.suf_max.assign(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) {
    std::int64_t a = cs[i] > 0 ? cs[i] * dom.front() : cs[i] * dom.back();
    std::int64_t b = cs[i] > 0 ? cs[i] * dom.back() : cs[i] * dom.front();
    s.suf_min[i] = s.suf_min[i + 1] + a;
    s.suf_max[i] = s.suf_max[i + 1] + b;
  }
  s.picked.reserve(k);
  if (!s.run(0, 0)) return std::nullopt;
  return SolutionWitness{std::move(s.picked)};
}

std::optional<SolutionWitness> find_balanced_solution(const IntervalSet& values,
                                                      BalancedForm form) {
  if (values.empty()) return std::nullopt;
  const int l = form.lhs, r = form.rhs;
  if (l < 0 || r < 0 || l + r == 0) throw std::invalid_argument("balanced form out of range");

  std::vector<IntervalSet> mx(static_cast<std::size_t>(l) + 1);
  std::vector<IntervalSet> my(static_cast<std::size_t>(r) + 1);
  mx[0] = IntervalSet::single(0, 0);
  my[0] = IntervalSet::single(0, 0);
  for (int j = 1; j <= l; ++j) mx[j] = mx[j - 1].minkowski_add(values);
  for (int j = 1; j <= r; ++j) my[j] = my[j - 1].minkowski_add(values);

  // diff[a][b] = all achievable (sum of a LHS values) − (sum of b RHS values)
  std::vector<std::vector<IntervalSet>> diff(static_cast<std::size_t>(l) + 1,
                                             std::vector<IntervalSet>(static_cast<std::size_t>(r) + 1));
  for (int a = 0; a <= l; ++a)
    for (int b = 0; b <= r; ++b) diff[a][b] = mx[a].minkowski_add(my[b].negate());

  if (!diff[l][r].contains(0)) return std::nullopt;

  std::vector<std::int64_t> vals;
  vals.reserve(static_cast<std::size_t>(l + r));
  std::int64_t need = 0;  // remaining LHS sum − remaining RHS sum must equal this
  for (int i = 0; i < l; ++i) {
    // smallest v in the domain with (need − v) still achievable
    IntervalSet window = diff[l - 1 - i][r].negate().shift(need);
    auto v = values.min_in(window);
    if (!v) throw std::logic_error("balanced solver: reconstruction lost feasibility");
    vals.push_back(*v);
    need -= *v;
  }
  for (int j = 0; j < r; ++j) {
    IntervalSet window = diff[0][r - 1 - j].shift(-need);
    auto v = values.min_in(window);
    if (!v) throw std::logic_error("balanced solver: reconstruction lost feasibility");
    vals.push_back(*v);
    need += *v;
  }
  if (need != 0) throw std::logic_error("balanced solver: non-zero residue");
  return SolutionWitness{std::move(vals)};
}

std::optional<SolutionWitness> find_solution_balanced_split(const LinearEquation& eq,
                                                            std::span<const std::int64_t> values) {
  auto form = eq.balanced_form();
  if (!form) throw std::invalid_argument("balanced split requires a ±1 equation");
  std::vector<std::int64_t> dom = sorted_unique(values);
  return find_balanced_solution(IntervalSet::from_values(dom), *form);
}

std::optional<SolutionWitness> find_solution_in_set(const LinearEquation& eq,
                                                    std::span<const std::int64_t> values) {
  auto form = eq.balanced_form();
  if (form && form->lhs >= 1 && form->rhs >= 1 && eq.arity() >= 4) {
    // crossover threshold, plus a guard for domains where full enumeration
    // is out of the question (|A|^arity blows up long before |A| hits 64)
    double naive_cost = std::pow(static_cast<double>(values.size()),
                                 static_cast<double>(eq.arity()));
    if (values.size() >= 64 || naive_cost > 2e6)
      return find_solution_balanced_split(eq, values);
  }
  return find_solution_naive(eq, values);
}

SolutionWitness extend_solution(const LinearEquation& eq, const SolutionWitness& w, int t,
                                int pad) {
  auto form = eq.balanced_form();
  if (!form) throw std::invalid_argument("extend_solution: equation is not balanced");
  if (t < 1 || pad < 0) throw std::invalid_argument("extend_solution: need t >= 1, pad >= 0");
  if (form->lhs < 1) throw std::invalid_argument("extend_solution: need at least one LHS value");
  if (!check_solution(eq, w))
    throw std::invalid_argument("extend_solution: input witness does not solve the equation");

  const int l = form->lhs, r = form->rhs;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>((l + r) * t + 2 * pad));
  for (int i = 0; i < l; ++i) out.insert(out.end(), static_cast<std::size_t>(t), w.values[i]);
  out.insert(out.end(), static_cast<std::size_t>(pad), w.values[0]);
  for (int i = 0; i < r; ++i) out.insert(out.end(), static_cast<std::size_t>(t), w.values[l + i]);
  out.insert(out.end(), static_cast<std::size_t>(pad), w.values[0]);
  return SolutionWitness{std::move(out)};
}

}  // namespace rado
