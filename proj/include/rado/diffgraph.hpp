#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rado/equation.hpp"

namespace rado {

// Graph on a finite set of integers where u ~ v iff |u - v| lies in a fixed
// connection set.
class DifferenceGraph {
 public:
  static DifferenceGraph build(std::vector<std::int64_t> vertices,
                               std::vector<std::int64_t> connection);

  std::size_t size() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<std::int64_t>& vertices() const { return verts_; }
  const std::vector<std::int64_t>& connection() const { return conn_; }

  bool has_vertex(std::int64_t v) const;
  int index_of(std::int64_t v) const;  // throws if absent
  std::int64_t vertex(int idx) const { return verts_[static_cast<std::size_t>(idx)]; }
  const std::vector<int>& neighbors(int idx) const { return adj_[static_cast<std::size_t>(idx)]; }
  bool adjacent(int a, int b) const;
  bool in_connection(std::int64_t diff) const;

 private:
  std::vector<std::int64_t> verts_;  // sorted unique
  std::vector<std::int64_t> conn_;   // sorted unique, positive
  std::vector<std::vector<int>> adj_;
  std::size_t edges_ = 0;
};

// Thrown when a bound that requires large odd girth meets a short odd cycle.
class ShortOddCycleError : public std::runtime_error {
 public:
  ShortOddCycleError(std::vector<std::int64_t> cycle, const std::string& what)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}
  const std::vector<std::int64_t>& cycle() const { return cycle_; }

 private:
  std::vector<std::int64_t> cycle_;
};

// Sizes of the BFS layers around v: counts of vertices at distance exactly
// 1..depth.
std::vector<std::int64_t> distance_profile(const DifferenceGraph& g, std::int64_t v, int depth);

// A triangle if one exists, else a 5-cycle if one exists, else nullopt.
// Deterministic: the lexicographically smallest vertex sequence.
std::optional<std::vector<std::int64_t>> find_short_odd_cycle(const DifferenceGraph& g);

// Globally shortest odd cycle (any length) via all-source BFS, or nullopt on
// bipartite graphs.
std::optional<std::vector<std::int64_t>> shortest_odd_cycle(const DifferenceGraph& g);

// A 3- or 5-cycle of a difference graph pins down five (with repetition)
// connection-set members whose signed sum vanishes; splitting by sign and
// padding yields a witness of the balanced (12, 9) equation with all values
// in the connection set.
SolutionWitness cycle_to_solution(std::span<const std::int64_t> cycle,
                                  const std::vector<std::int64_t>& connection);

// Lower bound on the independence number of a triangle-free graph:
// sum over v of d1(v) / (1 + d1(v) + d2(v)). Throws ShortOddCycleError if a
// triangle is present.
double shearer_triangle_free_bound(const DifferenceGraph& g);

// Girth form, for graphs with no odd cycle of length <= 2m+1 (m >= 2):
// sum over v of [ d1(v) * 2^-(m-2) / (1 + d1(v) + ... + dm(v)) ]^(1/(m-1)).
// Vertices with d1 = 0 contribute 0.
double shearer_girth_bound(const DifferenceGraph& g, int m);

// Exact maximum independent set, branch and bound on the max-degree vertex
// with greedy clique-cover pruning. Throws std::length_error above the cap.
std::vector<std::int64_t> max_independent_set_exact(const DifferenceGraph& g,
                                                    std::size_t cap = 200);

// Greedy independent set in ascending vertex order (the cheap fallback).
std::vector<std::int64_t> greedy_independent_set(const DifferenceGraph& g);

struct CandidateFamily {
  std::string label;                     // R1/R2, S1/S2/S3, T1..T4
  std::vector<std::int64_t> members;     // vertex values, ascending
};

// Two family members at difference d in the connection set contradict
// independence and pin a balanced (depth+1, depth) relation inside the
// connection set.
struct FamilyEdgeViolation {
  std::string family;
  std::int64_t u = 0, v = 0, diff = 0;
  SolutionWitness relation;   // values for the (depth+1, depth) balanced equation
  BalancedForm relation_form;
};

struct CandidateSetsResult {
  std::vector<CandidateFamily> families;
  int best_index = -1;   // largest family verified independent; -1 on violation
  double guarantee = 0;  // d1/2, (1+d2)/3 or d3/4 depending on depth
  std::optional<FamilyEdgeViolation> violation;
};

// Signed-sum families around an anchor: depth 1 gives {a±x}, depth 2 gives
// {a±x±y} (3 sign patterns), depth 3 gives {a±x±y±z} (4 patterns), each
// intersected with the vertex set and checked for independence.
CandidateSetsResult candidate_independent_sets(const DifferenceGraph& g, std::int64_t anchor,
                                               int depth);

}  // namespace rado
