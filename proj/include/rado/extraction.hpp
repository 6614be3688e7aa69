#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rado/coloring.hpp"
#include "rado/diffgraph.hpp"
#include "rado/equation.hpp"

namespace rado {

// One step of an extraction chain: a colour is consumed and the working set
// shrinks to a subset guaranteed (or observed) to stay above `required`.
struct ChainStep {
  int color = 0;
  std::int64_t before = 0;
  std::int64_t after = 0;
  double required = 0;
  bool bound_held = false;
  std::string set_source;  // "neighborhood" | "exact" | "candidates" | "greedy"
  std::int64_t anchor = 0;
  std::vector<std::int64_t> next_set;
};

// |X_{T-m}| <= m! * sum_{i<=m} 1/i!, evaluated exactly; only meaningful for
// chains that consumed every colour without finding a witness.
struct CumulativeRow {
  int m = 0;
  std::int64_t set_size = 0;
  std::int64_t bound = 0;
  bool held = false;
};

struct ExtractionOutcome {
  LinearEquation equation{std::vector<std::int64_t>{1}};
  std::vector<std::int64_t> initial_set;
  std::vector<ChainStep> steps;
  std::optional<SolutionWitness> witness;
  int witness_color = 0;
  std::string witness_source;  // "scan" | "validate" | "family:<name>"
  std::vector<CumulativeRow> cumulative;
};

// Classical inductive extraction for x + y = z: anchor at the smallest
// element, descend into its largest monochromatic out-neighbourhood, and scan
// for a same-colour edge (a monochromatic triangle = a Schur triple of
// differences). The chain alone misses degenerate triples at small N, so a
// terminal per-class check backs it up; the outcome records which path fired.
ExtractionOutcome schur_extract(const Coloring& c);

// Chain extraction for the balanced (3,2) equation: per step, pick the colour
// with the most edges inside the working set, build its difference graph, and
// take the best independent set available (exact solver under the cap, else
// signed-sum candidate families, else greedy). A family that fails its
// independence check yields a (3,2) witness inside that colour class.
ExtractionOutcome shearer_chain_extract(const Coloring& c, std::size_t mis_cap = 200);

// Extends a colouring of [1..N] to [1..2N] with three fresh colours covering
// [N+1, floor(2^(1/3) N)], (.., floor(2^(2/3) N)], (.., 2N]; each new class is
// verified free of the balanced (12,9) equation.
Coloring augment_with_auxiliary_colors(const Coloring& c);

struct ShiftIntersection {
  std::vector<std::int64_t> shifts;         // first entry always 0
  std::vector<std::int64_t> intersection;   // elements of [1..2N]
  std::int64_t required = 0;                // ceil of the tuple-average bound
  std::int64_t avg_num = 0, avg_den = 1;    // the exact average 2N*prod|S_i| / (4N+1)^k
  bool exhaustive = true;
  std::uint64_t samples = 0;
};

// Shifts t_1 = 0, t_2..t_k in [-2N, 2N] such that the shifted intersection
// within [1..2N] reaches the ceiling of the average over all shift tuples.
// Exhaustive scan (deterministic argmax, ties to the lexicographically
// smallest tuple) while (4N+1)^(k-1) <= 1e6, else seeded sampling until the
// bound is met.
ShiftIntersection shift_intersection(const std::vector<std::vector<std::int64_t>>& sets,
                                     std::int64_t half_n, std::uint64_t seed = 0, int threads = 1);

struct PipelineGraphRecord {
  int color = 0;  // original colour index
  std::vector<std::int64_t> connection;
  bool cycle_free = true;
  std::vector<std::int64_t> cycle;
  std::vector<std::int64_t> independent_set;
  std::string set_source;
};

struct PipelinePhase6 {
  std::vector<std::int64_t> difference_set;  // {s_j - s_1 : j >= 2}
  bool clean = true;
  std::int64_t offending_element = 0;  // when !clean: element of X coloured by a chosen colour
  int offending_color = 0;
  std::int64_t edge_u = 0, edge_v = 0;  // the independent-set edge this would force
};

struct PipelineReport {
  std::int64_t doubled_size = 0;  // 2N
  Coloring augmented{1, std::vector<int>{1}};
  int k = 0;
  bool large_class_bound_holds = false;
  std::vector<int> chosen_colors;  // k largest original colours, by size
  std::vector<PipelineGraphRecord> graphs;
  std::optional<ShiftIntersection> shift;
  std::optional<PipelinePhase6> phase6;
  std::vector<ChainStep> chain;
  std::optional<SolutionWitness> witness;
  int witness_color = 0;
  std::string witness_phase;  // "cycle" | "family" | "chain-family"
};

// Staged pipeline for the balanced (12,9) equation: auxiliary colours,
// large-colour selection, short-odd-cycle screening of the k largest colours,
// independent sets, shift intersection, normalization to a difference set
// free of the consumed colours, then a (3,2)-style chain on what remains.
PipelineReport long_equation_pipeline(const Coloring& c, std::uint64_t seed = 0,
                                      std::size_t mis_cap = 200, int threads = 1);

}  // namespace rado
