#include "rado/diffgraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <queue>

namespace rado {

DifferenceGraph DifferenceGraph::build(std::vector<std::int64_t> vertices,
                                       std::vector<std::int64_t> connection) {
  for (std::int64_t a : connection)
    if (a <= 0) throw std::invalid_argument("difference graph: connection set must be positive");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(connection.begin(), connection.end());
  connection.erase(std::unique(connection.begin(), connection.end()), connection.end());

  DifferenceGraph g;
  g.verts_ = std::move(vertices);
  g.conn_ = std::move(connection);
  const int n = static_cast<int>(g.verts_.size());
  g.adj_.assign(g.verts_.size(), {});
  for (int i = 0; i < n; ++i) {
    for (std::int64_t d : g.conn_) {
      std::int64_t target = g.verts_[static_cast<std::size_t>(i)] + d;
      auto it = std::lower_bound(g.verts_.begin(), g.verts_.end(), target);
      if (it != g.verts_.end() && *it == target) {
        int j = static_cast<int>(it - g.verts_.begin());
        g.adj_[static_cast<std::size_t>(i)].push_back(j);
        g.adj_[static_cast<std::size_t>(j)].push_back(i);
        ++g.edges_;
      }
    }
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool DifferenceGraph::has_vertex(std::int64_t v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

int DifferenceGraph::index_of(std::int64_t v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v)
    throw std::invalid_argument("difference graph: vertex " + std::to_string(v) + " absent");
  return static_cast<int>(it - verts_.begin());
}

bool DifferenceGraph::adjacent(int a, int b) const {
  const auto& nb = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool DifferenceGraph::in_connection(std::int64_t diff) const {
  return std::binary_search(conn_.begin(), conn_.end(), diff);
}

std::vector<std::int64_t> distance_profile(const DifferenceGraph& g, std::int64_t v, int depth) {
  if (depth < 0) throw std::invalid_argument("distance_profile: negative depth");
  int src = g.index_of(v);
  std::vector<int> dist(g.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(src)] = 0;
  q.push(src);
  std::vector<std::int64_t> layers(static_cast<std::size_t>(depth), 0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    int du = dist[static_cast<std::size_t>(u)];
    if (du >= depth) continue;
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = du + 1;
        layers[static_cast<std::size_t>(du)] += 1;
        q.push(w);
      }
    }
  }
  return layers;
}

std::optional<std::vector<std::int64_t>> find_short_odd_cycle(const DifferenceGraph& g) {
  const int n = static_cast<int>(g.size());
  // triangles first, in sorted-triple order
  for (int i = 0; i < n; ++i) {
    const auto& ni = g.neighbors(i);
    for (int j : ni) {
      if (j <= i) continue;
      for (int k : ni) {
        if (k <= j) continue;
        if (g.adjacent(j, k))
          return std::vector<std::int64_t>{g.vertex(i), g.vertex(j), g.vertex(k)};
      }
    }
  }
  // 5-cycles: DFS over ascending paths whose start is the cycle minimum
  std::vector<int> path;
  for (int v0 = 0; v0 < n; ++v0) {
    path.assign(1, v0);
    std::vector<char> used(g.size(), 0);
    used[static_cast<std::size_t>(v0)] = 1;
    auto dfs = [&](auto&& self, int at, int len) -> std::optional<std::vector<std::int64_t>> {
      if (len == 5) {
        if (g.adjacent(at, v0)) {
          std::vector<std::int64_t> cyc;
          for (int idx : path) cyc.push_back(g.vertex(idx));
          return cyc;
        }
        return std::nullopt;
      }
      for (int w : g.neighbors(at)) {
        if (w <= v0 || used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        if (auto res = self(self, w, len + 1)) return res;
        path.pop_back();
        used[static_cast<std::size_t>(w)] = 0;
      }
      return std::nullopt;
    };
    if (auto res = dfs(dfs, v0, 1)) return res;
  }
  return std::nullopt;
}

std::optional<std::vector<std::int64_t>> shortest_odd_cycle(const DifferenceGraph& g) {
  const int n = static_cast<int>(g.size());
  int best_len = -1, best_src = -1, best_u = -1, best_v = -1;
  std::vector<int> dist(g.size()), parent(g.size());
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    for (int u = 0; u < n; ++u) {
      if (dist[static_cast<std::size_t>(u)] < 0) continue;
      for (int w : g.neighbors(u)) {
        if (w <= u || dist[static_cast<std::size_t>(w)] < 0) continue;
        if (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(w)]) {
          int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best_len < 0 || len < best_len) {
            best_len = len;
            best_src = s;
            best_u = u;
            best_v = w;
          }
        }
      }
    }
  }
  if (best_len < 0) return std::nullopt;

  // rebuild BFS parents from the winning source and stitch the two paths
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(parent.begin(), parent.end(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(best_src)] = 0;
  q.push(best_src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(w)] = u;
        q.push(w);
      }
    }
  }
  std::vector<int> up;  // best_u .. src
  for (int x = best_u; x >= 0; x = parent[static_cast<std::size_t>(x)]) up.push_back(x);
  std::vector<int> down;  // best_v .. src
  for (int x = best_v; x >= 0; x = parent[static_cast<std::size_t>(x)]) down.push_back(x);
  std::reverse(up.begin(), up.end());  // src .. best_u
  std::vector<std::int64_t> cyc;
  for (int x : up) cyc.push_back(g.vertex(x));
  for (std::size_t i = 0; i + 1 < down.size(); ++i) cyc.push_back(g.vertex(down[i]));
  // A shortest odd closed walk is a simple cycle; defend against the
  // impossible anyway.
  if (static_cast<int>(cyc.size()) != best_len)
    throw std::logic_error("shortest_odd_cycle: walk reconstruction mismatch");
  std::vector<std::int64_t> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("shortest_odd_cycle: reconstructed walk is not simple");
  return cyc;
}

SolutionWitness cycle_to_solution(std::span<const std::int64_t> cycle,
                                  const std::vector<std::int64_t>& connection) {
  const std::size_t len = cycle.size();
  if (len != 3 && len != 5)
    throw std::invalid_argument("cycle_to_solution: cycle must have length 3 or 5");
  std::vector<std::int64_t> conn = connection;
  std::sort(conn.begin(), conn.end());
  auto in_conn = [&](std::int64_t d) { return std::binary_search(conn.begin(), conn.end(), d); };
  for (std::size_t i = 0; i < len; ++i) {
    std::int64_t d = std::llabs(cycle[i] - cycle[(i + 1) % len]);
    if (d == 0 || !in_conn(d))
      throw std::invalid_argument("cycle_to_solution: sequence is not a cycle of the graph");
  }
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      if (cycle[i] == cycle[j])
        throw std::invalid_argument("cycle_to_solution: repeated vertex in cycle");

  SolutionWitness base;
  BalancedForm base_form;
  int t = 0, pad = 0;
  if (len == 3) {
    // a + b = c with a, b, c the three pairwise differences
    std::vector<std::int64_t> v(cycle.begin(), cycle.end());
    std::sort(v.begin(), v.end());
    base.values = {v[1] - v[0], v[2] - v[1], v[2] - v[0]};
    base_form = {2, 1};
    t = 3;
    pad = 6;  // (2,1) -> (12,9)
  } else {
    // orient the cycle; signed edge differences sum to zero
    std::vector<std::int64_t> plus, minus;
    for (std::size_t i = 0; i < 5; ++i) {
      std::int64_t d = cycle[(i + 1) % 5] - cycle[i];
      if (d > 0)
        plus.push_back(d);
      else
        minus.push_back(-d);
    }
    if (plus.size() < minus.size()) std::swap(plus, minus);
    std::sort(plus.begin(), plus.end());
    std::sort(minus.begin(), minus.end());
    base.values = plus;
    base.values.insert(base.values.end(), minus.begin(), minus.end());
    base_form = {static_cast<int>(plus.size()), static_cast<int>(minus.size())};
    if (base_form.lhs == 4) {  // (4,1) -> (12,9)
      t = 1;
      pad = 8;
    } else {  // (3,2) -> (12,9)
      t = 3;
      pad = 3;
    }
  }
  SolutionWitness out =
      extend_solution(LinearEquation::balanced(base_form.lhs, base_form.rhs), base, t, pad);
  if (!check_solution(LinearEquation::balanced(12, 9), out))
    throw std::logic_error("cycle_to_solution: produced witness fails verification");
  return out;
}

namespace {

// d1..dm for every vertex
std::vector<std::vector<std::int64_t>> all_profiles(const DifferenceGraph& g, int depth) {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(g.size());
  for (std::int64_t v : g.vertices()) out.push_back(distance_profile(g, v, depth));
  return out;
}

}  // namespace

double shearer_triangle_free_bound(const DifferenceGraph& g) {
  // cheap triangle probe before summing
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i) {
    const auto& ni = g.neighbors(i);
    for (int j : ni) {
      if (j <= i) continue;
      for (int k : ni) {
        if (k <= j) continue;
        if (g.adjacent(j, k))
          throw ShortOddCycleError({g.vertex(i), g.vertex(j), g.vertex(k)},
                                   "graph contains a triangle");
      }
    }
  }
  double sum = 0;
  for (const auto& prof : all_profiles(g, 2)) {
    double d1 = static_cast<double>(prof[0]), d2 = static_cast<double>(prof[1]);
    if (d1 == 0) continue;
    sum += d1 / (1.0 + d1 + d2);
  }
  return sum;
}

double shearer_girth_bound(const DifferenceGraph& g, int m) {
  if (m < 2) throw std::invalid_argument("shearer_girth_bound: need m >= 2");
  if (auto cyc = shortest_odd_cycle(g)) {
    if (static_cast<int>(cyc->size()) <= 2 * m + 1)
      throw ShortOddCycleError(*cyc, "graph has an odd cycle of length " +
                                         std::to_string(cyc->size()) +
                                         " <= " + std::to_string(2 * m + 1));
  }
  const double scale = std::pow(2.0, -(m - 2));
  const double root = 1.0 / (m - 1);
  double sum = 0;
  for (const auto& prof : all_profiles(g, m)) {
    double d1 = static_cast<double>(prof[0]);
    if (d1 == 0) continue;
    double denom = 1.0;
    for (int i = 0; i < m; ++i) denom += static_cast<double>(prof[static_cast<std::size_t>(i)]);
    sum += std::pow(d1 * scale / denom, root);
  }
  return sum;
}

namespace {

struct MisSolver {
  const DifferenceGraph& g;
  std::vector<int> best;

  int clique_cover_bound(const std::vector<int>& active) const {
    int cliques = 0;
    std::vector<char> assigned(active.size(), 0);
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (assigned[i]) continue;
      ++cliques;
      std::vector<int> clique{active[i]};
      assigned[i] = 1;
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        if (assigned[j]) continue;
        bool all = true;
        for (int c : clique)
          if (!g.adjacent(c, active[j])) {
            all = false;
            break;
          }
        if (all) {
          clique.push_back(active[j]);
          assigned[j] = 1;
        }
      }
    }
    return cliques;
  }

  void solve(std::vector<int> active, std::vector<int>& current) {
    if (active.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (current.size() + active.size() <= best.size()) return;
    if (static_cast<int>(current.size()) + clique_cover_bound(active) <=
        static_cast<int>(best.size()))
      return;

    // branch on the max-degree vertex within the remaining subgraph
    int pick = active[0], pick_deg = -1;
    for (int v : active) {
      int deg = 0;
      for (int w : active)
        if (w != v && g.adjacent(v, w)) ++deg;
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    // include
    std::vector<int> reduced;
    reduced.reserve(active.size());
    for (int v : active)
      if (v != pick && !g.adjacent(v, pick)) reduced.push_back(v);
    current.push_back(pick);
    solve(std::move(reduced), current);
    current.pop_back();
    // exclude
    std::vector<int> rest;
    rest.reserve(active.size() - 1);
    for (int v : active)
      if (v != pick) rest.push_back(v);
    solve(std::move(rest), current);
  }
};

}  // namespace

std::vector<std::int64_t> max_independent_set_exact(const DifferenceGraph& g, std::size_t cap) {
  if (g.size() > cap)
    throw std::length_error("max_independent_set_exact: graph above the exact-solver cap (" +
                            std::to_string(cap) + " vertices); use the heuristic");
  MisSolver solver{g, {}};
  std::vector<int> all(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) all[i] = static_cast<int>(i);
  // greedy seed so pruning bites immediately
  {
    std::vector<int> seed;
    for (int v : all) {
      bool ok = true;
      for (int w : seed)
        if (g.adjacent(v, w)) {
          ok = false;
          break;
        }
      if (ok) seed.push_back(v);
    }
    solver.best = std::move(seed);
  }
  std::vector<int> current;
  solver.solve(all, current);
  std::vector<std::int64_t> out;
  out.reserve(solver.best.size());
  for (int idx : solver.best) out.push_back(g.vertex(idx));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> greedy_independent_set(const DifferenceGraph& g) {
  std::vector<std::int64_t> out;
  std::vector<int> chosen;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool ok = true;
    for (int w : chosen)
      if (g.adjacent(static_cast<int>(i), w)) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(static_cast<int>(i));
      out.push_back(g.vertex(static_cast<int>(i)));
    }
  }
  return out;
}

namespace {

struct FamilySpec {
  std::string label;
  std::vector<int> signs;
};

std::vector<FamilySpec> family_specs(int depth) {
  switch (depth) {
    case 1:
      return {{"R1", {+1}}, {"R2", {-1}}};
    case 2:
      return {{"S1", {+1, +1}}, {"S2", {+1, -1}}, {"S3", {-1, -1}}};
    case 3:
      return {{"T1", {+1, +1, +1}}, {"T2", {+1, +1, -1}}, {"T3", {+1, -1, -1}},
              {"T4", {-1, -1, -1}}};
    default:
      throw std::invalid_argument("candidate_independent_sets: depth must be 1, 2 or 3");
  }
}

}  // namespace

CandidateSetsResult candidate_independent_sets(const DifferenceGraph& g, std::int64_t anchor,
                                               int depth) {
  if (!g.has_vertex(anchor))
    throw std::invalid_argument("candidate_independent_sets: anchor is not a vertex");
  const auto specs = family_specs(depth);
  const auto& conn = g.connection();

  CandidateSetsResult result;
  for (const FamilySpec& spec : specs) {
    // value -> generating connection-set terms (first generation wins)
    std::map<std::int64_t, std::vector<std::int64_t>> members;
    std::vector<std::int64_t> terms(static_cast<std::size_t>(depth));
    auto gen = [&](auto&& self, int pos, std::int64_t value) -> void {
      if (pos == depth) {
        if (g.has_vertex(value)) members.try_emplace(value, terms);
        return;
      }
      for (std::int64_t x : conn) {
        terms[static_cast<std::size_t>(pos)] = x;
        self(self, pos + 1, value + spec.signs[static_cast<std::size_t>(pos)] * x);
      }
    };
    gen(gen, 0, anchor);

    CandidateFamily fam{spec.label, {}};
    for (const auto& [value, _] : members) fam.members.push_back(value);

    // verify independence; a violating pair yields the implied relation
    for (std::size_t i = 0; i < fam.members.size() && !result.violation; ++i) {
      for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
        std::int64_t lo = fam.members[i], hi = fam.members[j];
        std::int64_t d = hi - lo;
        if (!g.in_connection(d)) continue;
        // hi - lo = sum of signed terms(hi) - signed terms(lo) = d
        std::vector<std::int64_t> lhs, rhs;
        const auto& thi = members.at(hi);
        const auto& tlo = members.at(lo);
        for (int p = 0; p < depth; ++p) {
          std::size_t sp = static_cast<std::size_t>(p);
          if (spec.signs[sp] > 0) {
            lhs.push_back(thi[sp]);
            rhs.push_back(tlo[sp]);
          } else {
            lhs.push_back(tlo[sp]);
            rhs.push_back(thi[sp]);
          }
        }
        rhs.push_back(d);
        if (lhs.size() < rhs.size()) std::swap(lhs, rhs);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        FamilyEdgeViolation viol;
        viol.family = spec.label;
        viol.u = lo;
        viol.v = hi;
        viol.diff = d;
        viol.relation_form = {static_cast<int>(lhs.size()), static_cast<int>(rhs.size())};
        viol.relation.values = lhs;
        viol.relation.values.insert(viol.relation.values.end(), rhs.begin(), rhs.end());
        if (!check_solution(
                LinearEquation::balanced(viol.relation_form.lhs, viol.relation_form.rhs),
                viol.relation))
          throw std::logic_error("candidate families: implied relation fails verification");
        result.violation = std::move(viol);
        break;
      }
    }
    result.families.push_back(std::move(fam));
    if (result.violation) return result;
  }

  for (std::size_t i = 0; i < result.families.size(); ++i)
    if (result.best_index < 0 ||
        result.families[i].members.size() >
            result.families[static_cast<std::size_t>(result.best_index)].members.size())
      result.best_index = static_cast<int>(i);

  auto prof = distance_profile(g, anchor, depth);
  if (depth == 1)
    result.guarantee = static_cast<double>(prof[0]) / 2.0;
  else if (depth == 2)
    result.guarantee = (1.0 + static_cast<double>(prof[1])) / 3.0;
  else
    result.guarantee = static_cast<double>(prof[2]) / 4.0;
  return result;
}

}  // namespace rado
