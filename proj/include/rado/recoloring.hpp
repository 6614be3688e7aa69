#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rado/coloring.hpp"
#include "rado/equation.hpp"

namespace rado {

// One element promoted one level up inside its base colour. For the sum
// procedures p1 + p2 = element; for the coefficient procedure
// element + p1 = p2.
struct MoveRecord {
  int color = 0;
  int from_level = 0;
  int to_level = 0;
  std::int64_t element = 0;
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
};

// Level cells (base colour, level) with provenance per arrival. Elements never
// leave their base colour and only ever move up, so each (element, level)
// arrival happens at most once.
class RecoloringState {
 public:
  RecoloringState(const Coloring& original, int levels);

  int levels() const { return levels_; }
  int colors() const { return n_colors_; }
  const std::set<std::int64_t>& cell(int color, int level) const;

  // provenance of the arrival of `element` at `level` (absent for level 1)
  std::optional<std::pair<std::int64_t, std::int64_t>> provenance(std::int64_t element,
                                                                  int level) const;

  void move_up(int color, int level, std::int64_t element, std::int64_t p1, std::int64_t p2);
  const std::vector<MoveRecord>& log() const { return log_; }

  struct Triple {
    int color = 0;
    int level = 0;
    std::int64_t c = 0, a = 0, b = 0;  // a + b = c, a <= b
  };
  // Smallest triple by (c, a) within the first cell, in (colour, level)
  // order, that holds one.
  std::optional<Triple> find_smallest_triple() const;

  // Writes `element` (sitting at `level`) as exactly k values from the base
  // colour's cells, splitting k as floor/ceil over the provenance children.
  // Requires 1 <= k <= 2^(level-1).
  std::vector<std::int64_t> decompose_exact_k(std::int64_t element, int level,
                                              std::int64_t k) const;

 private:
  int n_colors_ = 0;
  int levels_ = 0;
  std::vector<std::set<std::int64_t>> cells_;  // [color-1][level-1] flattened
  std::map<std::pair<std::int64_t, int>, std::pair<std::int64_t, std::int64_t>> provenance_;
  std::vector<MoveRecord> log_;

  std::set<std::int64_t>& cell_mut(int color, int level);
};

struct WitnessReport {
  bool stalled = false;
  std::optional<SolutionWitness> witness;
  int witness_color = 0;
  LinearEquation equation{std::vector<std::int64_t>{1}};
  std::int64_t moves = 0;
  std::vector<MoveRecord> log;
};

// x1 + x2 + x3 = y via one auxiliary colour per base colour: Schur triples in
// a base cell push their sum up; a triple in an auxiliary cell unwinds through
// the sum's provenance into a four-value witness.
WitnessReport find_witness_sum3(const Coloring& c);

// x1 + ... + x_l = y via ceil(log2 l) levels per base colour; a top-level
// triple splits l into floor/ceil halves over the provenance tree.
WitnessReport find_witness_imbalanced(const Coloring& c, int l);

// x1 + 2 x2 + x3 = y1 + y2: the smaller summand of a Schur triple moves up,
// remembering (other summand, sum); a triple among moved elements unwinds into
// a five-value witness.
WitnessReport find_witness_coefficient2(const Coloring& c);

}  // namespace rado
