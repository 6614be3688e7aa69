#include "rado/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace rado {

namespace {

// Does the class (sorted, all values <= m, m included) contain a solution of
// eq that uses the value m at least once? Earlier solutions were excluded when
// their own maximum was assigned, so this is the only check a new element needs.
class IncrementalChecker {
 public:
  explicit IncrementalChecker(const LinearEquation& eq) : eq_(eq), form_(eq.balanced_form()) {}

  bool solution_using(const std::vector<std::int64_t>& cls, std::int64_t m) const {
    if (form_ && form_->lhs >= 1 && form_->rhs >= 1) return balanced_using(cls, m);
    return general_using(cls, m);
  }

 private:
  // reach[t] = bitset of sums of exactly t class values
  static std::vector<std::vector<std::uint64_t>> sum_sets(const std::vector<std::int64_t>& cls,
                                                          int count, std::int64_t max_sum) {
    std::size_t words = static_cast<std::size_t>(max_sum / 64 + 1);
    std::vector<std::vector<std::uint64_t>> reach(static_cast<std::size_t>(count) + 1,
                                                  std::vector<std::uint64_t>(words, 0));
    reach[0][0] = 1;
    for (int t = 1; t <= count; ++t) {
      auto& cur = reach[static_cast<std::size_t>(t)];
      const auto& prev = reach[static_cast<std::size_t>(t) - 1];
      for (std::int64_t v : cls) {
        // cur |= prev << v, clipped to max_sum
        std::size_t word_shift = static_cast<std::size_t>(v / 64);
        unsigned bit_shift = static_cast<unsigned>(v % 64);
        for (std::size_t w = words; w-- > 0;) {
          if (w < word_shift) break;
          std::uint64_t lo = prev[w - word_shift];
          std::uint64_t chunk = bit_shift ? (lo << bit_shift) : lo;
          if (bit_shift && w > word_shift) chunk |= prev[w - word_shift - 1] >> (64 - bit_shift);
          cur[w] |= chunk;
        }
      }
    }
    return reach;
  }

  static bool intersects_with_offset(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b, std::int64_t offset,
                                     std::int64_t max_sum) {
    // any s with a[s] and b[s + offset]?
    for (std::int64_t s = 0; s <= max_sum; ++s) {
      std::size_t w = static_cast<std::size_t>(s / 64);
      if (!(a[w] >> (s % 64) & 1)) continue;
      std::int64_t t = s + offset;
      if (t < 0 || t > max_sum) continue;
      std::size_t w2 = static_cast<std::size_t>(t / 64);
      if (b[w2] >> (t % 64) & 1) return true;
    }
    return false;
  }

  bool balanced_using(const std::vector<std::int64_t>& cls, std::int64_t m) const {
    const int l = form_->lhs, r = form_->rhs;
    const std::int64_t max_sum = static_cast<std::int64_t>(std::max(l, r)) * m;
    auto reach = sum_sets(cls, std::max(l, r), max_sum);
    // jx LHS slots and jy RHS slots pinned to m
    for (int jx = 0; jx <= l; ++jx) {
      for (int jy = 0; jy <= r; ++jy) {
        if (jx + jy == 0) continue;
        // sum_{l-jx}(sigma) + jx*m == sum_{r-jy}(tau) + jy*m
        std::int64_t offset = static_cast<std::int64_t>(jx - jy) * m;
        if (intersects_with_offset(reach[static_cast<std::size_t>(l - jx)],
                                   reach[static_cast<std::size_t>(r - jy)], offset, max_sum))
          return true;
      }
    }
    return false;
  }

  bool general_using(const std::vector<std::int64_t>& cls, std::int64_t m) const {
    const auto& cs = eq_.coefficients();
    std::size_t k = cs.size();
    std::vector<std::int64_t> suf_min(k + 1, 0), suf_max(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) {
      std::int64_t a = cs[i] > 0 ? cs[i] * cls.front() : cs[i] * cls.back();
      std::int64_t b = cs[i] > 0 ? cs[i] * cls.back() : cs[i] * cls.front();
      suf_min[i] = suf_min[i + 1] + a;
      suf_max[i] = suf_max[i + 1] + b;
    }
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t partial, bool used_m) -> bool {
      if (idx == k) return partial == 0 && used_m;
      std::int64_t lo = -partial - suf_max[idx + 1];
      std::int64_t hi = -partial - suf_min[idx + 1];
      for (std::int64_t v : cls) {
        std::int64_t c = cs[idx] * v;
        if (c < lo || c > hi) continue;
        if (self(self, idx + 1, partial + c, used_m || v == m)) return true;
      }
      return false;
    };
    return rec(rec, 0, 0, false);
  }

  const LinearEquation& eq_;
  std::optional<BalancedForm> form_;
};

struct Searcher {
  const LinearEquation& eq;
  int n_colors;
  std::int64_t n;
  std::uint64_t budget;
  IncrementalChecker checker;
  std::vector<int> assign;
  std::vector<std::vector<std::int64_t>> classes;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  bool dfs(std::int64_t m, int max_used) {
    if (m > n) return true;
    int limit = std::min(n_colors, max_used + 1);
    for (int col = 1; col <= limit; ++col) {
      ++nodes;
      if (budget && nodes > budget) {
        out_of_budget = true;
        return false;
      }
      auto& cls = classes[static_cast<std::size_t>(col) - 1];
      cls.push_back(m);
      if (!checker.solution_using(cls, m)) {
        assign[static_cast<std::size_t>(m) - 1] = col;
        if (dfs(m + 1, std::max(max_used, col))) return true;
        if (out_of_budget) {
          cls.pop_back();
          return false;
        }
      }
      cls.pop_back();
    }
    return false;
  }
};

}  // namespace

PartitionOutcome search_partition(const LinearEquation& eq, int num_colors, std::int64_t n,
                                  std::uint64_t node_budget) {
  if (num_colors < 1) throw std::invalid_argument("search: need at least one colour");
  if (n < 1) throw std::invalid_argument("search: need a nonempty ground set");
  if (n > 1'000'000) throw std::invalid_argument("search: ground set too large for backtracking");

  Searcher s{eq,        num_colors, n, node_budget, IncrementalChecker(eq), {}, {}, 0,
             false};
  s.assign.assign(static_cast<std::size_t>(n), 0);
  s.classes.assign(static_cast<std::size_t>(num_colors), {});
  PartitionOutcome out;
  bool found = s.dfs(1, 0);
  out.nodes = s.nodes;
  if (found) {
    out.status = SearchStatus::Found;
    out.coloring = Coloring(num_colors, s.assign);
  } else if (s.out_of_budget) {
    out.status = SearchStatus::BudgetExhausted;
  } else {
    out.status = SearchStatus::Impossible;
  }
  return out;
}

std::optional<Coloring> is_partitionable(const LinearEquation& eq, int num_colors,
                                         std::int64_t n) {
  return search_partition(eq, num_colors, n).coloring;
}

SearchResult exact_extremal_n(const LinearEquation& eq, int num_colors, std::int64_t cap,
                              std::uint64_t node_budget) {
  if (cap < 1) throw std::invalid_argument("search: cap must be positive");
  auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.equation = eq;
  result.num_colors = num_colors;
  result.cap = cap;
  for (std::int64_t n = 1; n <= cap; ++n) {
    PartitionOutcome o = search_partition(eq, num_colors, n, node_budget);
    result.nodes += o.nodes;
    if (o.status == SearchStatus::Found) {
      result.largest_valid_n = n;
      result.witness = std::move(o.coloring);
      if (n == cap) result.complete = false;  // flagged ">= cap"
    } else if (o.status == SearchStatus::Impossible) {
      result.complete = true;
      result.fail_certified = true;
      break;
    } else {
      result.complete = false;  // budget ran out, verdict unknown from here up
      break;
    }
  }
  auto end = std::chrono::steady_clock::now();
  result.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
  return result;
}

}  // namespace rado
