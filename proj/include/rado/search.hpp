#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rado/coloring.hpp"
#include "rado/equation.hpp"

namespace rado {

enum class SearchStatus { Found, Impossible, BudgetExhausted };

struct PartitionOutcome {
  SearchStatus status = SearchStatus::Impossible;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

// Depth-first search for an n-colouring of [1..N] whose classes avoid the
// equation. Elements are assigned in order; a new element only needs checking
// against solutions whose maximum value is that element. Symmetry breaking:
// element 1 is colour 1 and new colour indices appear in increasing order.
// node_budget == 0 means unbounded.
PartitionOutcome search_partition(const LinearEquation& eq, int num_colors, std::int64_t n,
                                  std::uint64_t node_budget = 0);

// Convenience wrapper returning just the colouring (nullopt covers both
// impossible and budget-exhausted; use search_partition to distinguish).
std::optional<Coloring> is_partitionable(const LinearEquation& eq, int num_colors, std::int64_t n);

// Largest N (up to cap) admitting a valid colouring. `fail_certified` is set
// when the search at largest_valid_N + 1 ran to exhaustion.
struct SearchResult {
  LinearEquation equation{std::vector<std::int64_t>{1}};
  int num_colors = 1;
  std::int64_t largest_valid_n = 0;
  std::optional<Coloring> witness;
  bool complete = false;        // false when cap or budget stopped the scan
  bool fail_certified = false;  // exhaustive refutation at largest_valid_n + 1
  std::uint64_t nodes = 0;
  double wall_ms = 0;
  std::int64_t cap = 0;
};

SearchResult exact_extremal_n(const LinearEquation& eq, int num_colors, std::int64_t cap,
                              std::uint64_t node_budget = 0);

}  // namespace rado
