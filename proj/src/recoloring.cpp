#include "rado/recoloring.hpp"

#include <cmath>
#include <stdexcept>

namespace rado {

namespace {
constexpr std::size_t kGroundCap = 2'000'000;
}

RecoloringState::RecoloringState(const Coloring& original, int levels) {
  if (levels < 1) throw std::invalid_argument("recoloring: need at least one level");
  n_colors_ = original.num_colors();
  levels_ = levels;
  cells_.assign(static_cast<std::size_t>(n_colors_) * static_cast<std::size_t>(levels_), {});
  for (int col = 1; col <= n_colors_; ++col) {
    auto elems = original.class_elements(col, kGroundCap);
    cell_mut(col, 1).insert(elems.begin(), elems.end());
  }
}

std::set<std::int64_t>& RecoloringState::cell_mut(int color, int level) {
  if (color < 1 || color > n_colors_ || level < 1 || level > levels_)
    throw std::out_of_range("recoloring: cell index out of range");
  return cells_[static_cast<std::size_t>(color - 1) * static_cast<std::size_t>(levels_) +
                static_cast<std::size_t>(level - 1)];
}

const std::set<std::int64_t>& RecoloringState::cell(int color, int level) const {
  return const_cast<RecoloringState*>(this)->cell_mut(color, level);
}

std::optional<std::pair<std::int64_t, std::int64_t>> RecoloringState::provenance(
    std::int64_t element, int level) const {
  auto it = provenance_.find({element, level});
  if (it == provenance_.end()) return std::nullopt;
  return it->second;
}

void RecoloringState::move_up(int color, int level, std::int64_t element, std::int64_t p1,
                              std::int64_t p2) {
  if (level + 1 > levels_) throw std::out_of_range("recoloring: move above the top level");
  auto& from = cell_mut(color, level);
  auto it = from.find(element);
  if (it == from.end()) throw std::logic_error("recoloring: moved element not in source cell");
  from.erase(it);
  cell_mut(color, level + 1).insert(element);
  provenance_[{element, level + 1}] = {p1, p2};
  log_.push_back({color, level, level + 1, element, p1, p2});
}

std::optional<RecoloringState::Triple> RecoloringState::find_smallest_triple() const {
  for (int col = 1; col <= n_colors_; ++col) {
    for (int lvl = 1; lvl <= levels_; ++lvl) {
      const auto& cs = cell(col, lvl);
      // lexicographic by (c, a): c ascending, a ascending with a <= c-a
      for (std::int64_t c : cs) {
        for (std::int64_t a : cs) {
          if (2 * a > c) break;
          if (cs.count(c - a)) return Triple{col, lvl, c, a, c - a};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::int64_t> RecoloringState::decompose_exact_k(std::int64_t element, int level,
                                                             std::int64_t k) const {
  if (level < 1 || level > levels_) throw std::out_of_range("decompose: level out of range");
  if (k < 1 || (level - 1 < 62 && k > (std::int64_t{1} << (level - 1))))
    throw std::out_of_range("decompose: k outside [1, 2^(level-1)]");
  if (k == 1) return {element};
  auto prov = provenance(element, level);
  if (!prov)
    throw std::logic_error("decompose: element has no provenance at this level");
  std::int64_t k1 = k / 2, k2 = k - k1;
  std::vector<std::int64_t> out = decompose_exact_k(prov->first, level - 1, k1);
  std::vector<std::int64_t> right = decompose_exact_k(prov->second, level - 1, k2);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

namespace {

WitnessReport make_report(const LinearEquation& eq, const RecoloringState& st) {
  WitnessReport rep;
  rep.equation = eq;
  rep.moves = static_cast<std::int64_t>(st.log().size());
  rep.log = st.log();
  return rep;
}

}  // namespace

WitnessReport find_witness_sum3(const Coloring& c) {
  const LinearEquation eq(std::vector<std::int64_t>{1, 1, 1, -1});
  RecoloringState st(c, 2);
  while (true) {
    auto triple = st.find_smallest_triple();
    if (!triple) {
      WitnessReport rep = make_report(eq, st);
      rep.stalled = true;
      return rep;
    }
    if (triple->level == 1) {
      st.move_up(triple->color, 1, triple->c, triple->a, triple->b);
      continue;
    }
    // triple inside the auxiliary cell: a arrived as x1 + x2
    auto prov = st.provenance(triple->a, 2);
    if (!prov) throw std::logic_error("sum3: auxiliary element without provenance");
    WitnessReport rep = make_report(eq, st);
    rep.witness = SolutionWitness{{prov->first, prov->second, triple->b, triple->c}};
    rep.witness_color = triple->color;
    if (!check_solution(eq, *rep.witness))
      throw std::logic_error("sum3: produced witness fails verification");
    return rep;
  }
}

WitnessReport find_witness_imbalanced(const Coloring& c, int l) {
  if (l < 3) throw std::invalid_argument("imbalanced: need l >= 3");
  const int levels = static_cast<int>(std::ceil(std::log2(static_cast<double>(l))));
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(l), 1);
  coeffs.push_back(-1);
  const LinearEquation eq(std::move(coeffs));

  RecoloringState st(c, levels);
  while (true) {
    auto triple = st.find_smallest_triple();
    if (!triple) {
      WitnessReport rep = make_report(eq, st);
      rep.stalled = true;
      return rep;
    }
    if (triple->level < levels) {
      st.move_up(triple->color, triple->level, triple->c, triple->a, triple->b);
      continue;
    }
    // top-level triple: write a as floor(l/2) and b as ceil(l/2) base values
    std::vector<std::int64_t> xs = st.decompose_exact_k(triple->a, levels, l / 2);
    std::vector<std::int64_t> right = st.decompose_exact_k(triple->b, levels, l - l / 2);
    xs.insert(xs.end(), right.begin(), right.end());
    WitnessReport rep = make_report(eq, st);
    xs.push_back(triple->c);
    rep.witness = SolutionWitness{std::move(xs)};
    rep.witness_color = triple->color;
    if (!check_solution(eq, *rep.witness))
      throw std::logic_error("imbalanced: produced witness fails verification");
    return rep;
  }
}

WitnessReport find_witness_coefficient2(const Coloring& c) {
  const LinearEquation eq(std::vector<std::int64_t>{1, 2, 1, -1, -1});
  RecoloringState st(c, 2);
  while (true) {
    auto triple = st.find_smallest_triple();
    if (!triple) {
      WitnessReport rep = make_report(eq, st);
      rep.stalled = true;
      return rep;
    }
    if (triple->level == 1) {
      // the smaller summand moves, remembering (other summand, sum)
      st.move_up(triple->color, 1, triple->a, triple->b, triple->c);
      continue;
    }
    auto prov = st.provenance(triple->a, 2);
    if (!prov) throw std::logic_error("coefficient2: auxiliary element without provenance");
    // a' + x1 = y1 and a' + b' = c' give x1 + 2a' + b' = y1 + c'
    WitnessReport rep = make_report(eq, st);
    rep.witness =
        SolutionWitness{{prov->first, triple->a, triple->b, prov->second, triple->c}};
    rep.witness_color = triple->color;
    if (!check_solution(eq, *rep.witness))
      throw std::logic_error("coefficient2: produced witness fails verification");
    return rep;
  }
}

}  // namespace rado
