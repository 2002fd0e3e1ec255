#include "idealgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <sstream>

namespace idealgraph {

const char* to_string(CycleCheck c) {
  switch (c) {
    case CycleCheck::ok: return "ok";
    case CycleCheck::too_short: return "too_short";
    case CycleCheck::index_out_of_range: return "index_out_of_range";
    case CycleCheck::repeated_vertex: return "repeated_vertex";
    case CycleCheck::missing_edge: return "missing_edge";
  }
  return "?";
}

IntersectionGraph::IntersectionGraph(Ring ring, int vertex_cap) : ring_(std::move(ring)) {
  long long count = ring_.nontrivial_ideal_count();
  if (count > vertex_cap)
    throw CapExceeded("graph construction cap exceeded: " + std::to_string(count) +
                      " vertices > " + std::to_string(vertex_cap));
  vertices_ = ring_.nontrivial_ideals(count + 2);
  int n = vertex_count();
  adj_ = BitMatrix(n);
  degrees_.assign(n, 0);

  // adjacency[i][j] <=> i != j and meet(v_i, v_j) != 0; per-block early exit
  const int blocks = ring_.block_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool nonzero = false;
      for (int b = 0; b < blocks && !nonzero; ++b) {
        const BlockLattice& bl = ring_.block(b);
        nonzero = bl.meet(vertices_[i].coords[b], vertices_[j].coords[b]) != bl.zero_index();
      }
      if (nonzero) {
        adj_.set(i, j);
        ++degrees_[i];
        ++degrees_[j];
        ++edge_count_;
      }
    }
  }
}

int IntersectionGraph::vertex_index(const Ideal& a) const {
  if (!ring_.is_nontrivial(a)) throw std::invalid_argument("trivial ideal is not a vertex");
  return static_cast<int>(ring_.ideal_rank(a)) - 1;  // unit has rank 0
}

IntersectionGraph build_intersection_graph(const Ring& ring, int vertex_cap) {
  return IntersectionGraph(ring, vertex_cap);
}

PropertyRecord compute_properties(const IntersectionGraph& g) {
  PropertyRecord rec;
  int n = g.vertex_count();
  rec.vertex_count = n;
  rec.edge_count = g.edge_count();
  rec.degrees = g.degrees();

  for (int i = 0; i < n; ++i)
    if (g.degree(i) == 1) rec.pendant_vertices.push_back(i);
  rec.flags.has_pendant = !rec.pendant_vertices.empty();

  rec.flags.is_complete = rec.edge_count == static_cast<long long>(n) * (n - 1) / 2;
  rec.flags.is_regular =
      n == 0 || std::all_of(rec.degrees.begin(), rec.degrees.end(),
                            [&](int d) { return d == rec.degrees[0]; });

  // star: one center adjacent to everything else, all others of degree 1
  rec.flags.is_star = false;
  if (n >= 2 && rec.edge_count == n - 1) {
    int max_deg = *std::max_element(rec.degrees.begin(), rec.degrees.end());
    int leaves = static_cast<int>(std::count(rec.degrees.begin(), rec.degrees.end(), 1));
    rec.flags.is_star = max_deg == n - 1 && (n == 2 ? leaves == 2 : leaves == n - 1);
  }

  // triangle scan via neighborhood intersection per edge
  rec.flags.is_triangle_free = true;
  const BitMatrix& adj = g.adjacency();
  int words = adj.words_per_row();
  for (int i = 0; i < n && rec.flags.is_triangle_free; ++i) {
    for (int j = i + 1; j < n && rec.flags.is_triangle_free; ++j) {
      if (!adj.get(i, j)) continue;
      for (int w = 0; w < words; ++w) {
        if (adj.row(i)[w] & adj.row(j)[w]) {
          rec.flags.is_triangle_free = false;
          break;
        }
      }
    }
  }

  // bipartite by BFS 2-coloring over components
  rec.flags.is_bipartite = true;
  std::vector<int> color(n, -1);
  for (int s = 0; s < n && rec.flags.is_bipartite; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty() && rec.flags.is_bipartite) {
      int v = queue.front();
      queue.pop_front();
      for (int u = 0; u < n; ++u) {
        if (!g.adjacent(v, u)) continue;
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          rec.flags.is_bipartite = false;
          break;
        }
      }
    }
  }
  return rec;
}

namespace {

void require_small(const IntersectionGraph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw CapExceeded("subgraph search cap exceeded: " + std::to_string(g.vertex_count()) +
                      " vertices > " + std::to_string(vertex_cap));
}

}  // namespace

std::optional<CycleWitness> find_induced_cycle(const IntersectionGraph& g, int n, int max_n,
                                               int vertex_cap) {
  if (n < 3) throw std::invalid_argument("induced cycle length must be >= 3");
  if (n > max_n)
    throw CapExceeded("induced cycle search cap exceeded: n = " + std::to_string(n) + " > " +
                      std::to_string(max_n));
  require_small(g, std::min(vertex_cap, 64));
  int V = g.vertex_count();
  if (n > V) return std::nullopt;

  std::vector<int> path;
  path.reserve(n);
  std::uint64_t used = 0;

  // Lowest-index vertex first; the rest of the cycle uses larger indices only.
  auto dfs = [&](auto&& self, int last) -> bool {
    int depth = static_cast<int>(path.size());
    if (depth == n) return true;
    bool closing = depth == n - 1;
    std::uint64_t candidates = g.adjacency().row64(last) & ~used;
    while (candidates) {
      int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (v < path[0]) continue;
      bool ok = true;
      for (int i = 0; i + 1 < depth && ok; ++i) {
        bool adj = g.adjacent(v, path[i]);
        if (i == 0 && closing) {
          ok = adj;  // closing edge back to the start
        } else {
          ok = !adj;  // induced: no chords
        }
      }
      if (!ok) continue;
      path.push_back(v);
      used |= std::uint64_t(1) << v;
      if (self(self, v)) return true;
      used &= ~(std::uint64_t(1) << v);
      path.pop_back();
    }
    return false;
  };

  for (int s = 0; s + n <= V; ++s) {
    path = {s};
    used = std::uint64_t(1) << s;
    if (dfs(dfs, s)) return CycleWitness{path};
  }
  return std::nullopt;
}

std::optional<ClawWitness> find_induced_claw(const IntersectionGraph& g, int n, int vertex_cap) {
  if (n < 1) throw std::invalid_argument("claw size must be >= 1");
  require_small(g, std::min(vertex_cap, 64));
  int V = g.vertex_count();

  std::vector<int> leaves;
  auto dfs = [&](auto&& self, int center, int next) -> bool {
    if (static_cast<int>(leaves.size()) == n) return true;
    for (int v = next; v < V; ++v) {
      if (!g.adjacent(center, v)) continue;
      bool independent = true;
      for (int leaf : leaves)
        if (g.adjacent(v, leaf)) { independent = false; break; }
      if (!independent) continue;
      leaves.push_back(v);
      if (self(self, center, v + 1)) return true;
      leaves.pop_back();
    }
    return false;
  };

  for (int c = 0; c < V; ++c) {
    leaves.clear();
    if (dfs(dfs, c, 0)) return ClawWitness{c, leaves};
  }
  return std::nullopt;
}

namespace {

// Shared backtracking core: a cycle of exactly `target` vertices. The lowest
// cycle vertex is the anchor; symmetric traversals are cut by requiring the
// second vertex to be smaller than the last.
std::optional<CycleWitness> exact_cycle_search(const IntersectionGraph& g, int target) {
  int V = g.vertex_count();
  if (target < 3 || target > V) return std::nullopt;
  assert(V <= 64);

  std::vector<int> path;
  path.reserve(target);
  std::uint64_t used = 0;

  auto dfs = [&](auto&& self, int last) -> bool {
    int depth = static_cast<int>(path.size());
    if (depth == target) return path[1] < path.back() && g.adjacent(last, path[0]);
    std::uint64_t candidates = g.adjacency().row64(last) & ~used;
    while (candidates) {
      int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (v < path[0]) continue;
      path.push_back(v);
      used |= std::uint64_t(1) << v;
      if (self(self, v)) return true;
      used &= ~(std::uint64_t(1) << v);
      path.pop_back();
    }
    return false;
  };

  for (int s = 0; s + target <= V; ++s) {
    path = {s};
    used = std::uint64_t(1) << s;
    if (dfs(dfs, s)) return CycleWitness{path};
  }
  return std::nullopt;
}

bool connected(const IntersectionGraph& g) {
  int V = g.vertex_count();
  if (V == 0) return true;
  std::uint64_t seen = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    std::uint64_t next = g.adjacency().row64(v) & ~seen;
    seen |= next;
    while (next) {
      queue.push_back(std::countr_zero(next));
      next &= next - 1;
    }
  }
  return std::popcount(seen) == V;
}

}  // namespace

std::optional<CycleWitness> hamiltonian_oracle(const IntersectionGraph& g, int vertex_cap) {
  int V = g.vertex_count();
  if (V > vertex_cap)
    throw CapExceeded("hamiltonian oracle cap exceeded: " + std::to_string(V) + " vertices > " +
                      std::to_string(vertex_cap));
  if (V > 64) throw CapExceeded("hamiltonian oracle supports at most 64 vertices");
  if (V < 3) return std::nullopt;
  for (int v = 0; v < V; ++v)
    if (g.degree(v) < 2) return std::nullopt;
  if (!connected(g)) return std::nullopt;

  std::vector<int> path{0};
  std::uint64_t used = 1;

  auto dfs = [&](auto&& self, int last) -> bool {
    if (static_cast<int>(path.size()) == V)
      return path[1] < path.back() && g.adjacent(last, 0);

    // Every unvisited vertex still needs two cycle neighbors among the
    // unvisited vertices, the current endpoint and the start.
    std::uint64_t open = ~used & ((V == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << V) - 1));
    std::uint64_t avail_mask = open | 1 | (std::uint64_t(1) << last);
    std::uint64_t scan = open;
    while (scan) {
      int u = std::countr_zero(scan);
      scan &= scan - 1;
      if (std::popcount(g.adjacency().row64(u) & avail_mask) < 2) return false;
    }
    // Connectivity: all unvisited vertices reachable from the endpoint.
    std::uint64_t seen = std::uint64_t(1) << last;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t grow = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        grow |= g.adjacency().row64(v) & open & ~seen;
      }
      seen |= grow;
      frontier = grow;
    }
    if ((open & ~seen) != 0) return false;

    std::uint64_t candidates = g.adjacency().row64(last) & ~used;
    while (candidates) {
      int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      path.push_back(v);
      used |= std::uint64_t(1) << v;
      if (self(self, v)) return true;
      used &= ~(std::uint64_t(1) << v);
      path.pop_back();
    }
    return false;
  };

  if (dfs(dfs, 0)) return CycleWitness{path};
  return std::nullopt;
}

std::optional<CycleWitness> find_cycle_of_length(const IntersectionGraph& g, int length) {
  require_small(g, 64);
  return exact_cycle_search(g, length);
}

std::set<int> cycle_spectrum_oracle(const IntersectionGraph& g, int vertex_cap) {
  int V = g.vertex_count();
  if (V > vertex_cap)
    throw CapExceeded("cycle spectrum cap exceeded: " + std::to_string(V) + " vertices > " +
                      std::to_string(vertex_cap));
  if (V > 64) throw CapExceeded("cycle spectrum oracle supports at most 64 vertices");
  std::set<int> lengths;
  for (int L = 3; L <= V; ++L)
    if (exact_cycle_search(g, L)) lengths.insert(L);
  return lengths;
}

CycleCheck validate_cycle_detailed(const IntersectionGraph& g, const CycleWitness& w) {
  const auto& seq = w.vertex_indices;
  if (seq.size() < 3) return CycleCheck::too_short;
  std::set<int> seen;
  for (int v : seq) {
    if (v < 0 || v >= g.vertex_count()) return CycleCheck::index_out_of_range;
    if (!seen.insert(v).second) return CycleCheck::repeated_vertex;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int a = seq[i];
    int b = seq[(i + 1) % seq.size()];
    if (!g.adjacent(a, b)) return CycleCheck::missing_edge;
  }
  return CycleCheck::ok;
}

bool validate_cycle(const IntersectionGraph& g, const CycleWitness& w) {
  return validate_cycle_detailed(g, w) == CycleCheck::ok;
}

std::string export_dot(const IntersectionGraph& g, DotLabels labels) {
  std::ostringstream out;
  out << "graph ideals {\n";
  for (int i = 0; i < g.vertex_count(); ++i) {
    out << "  " << i << " [label=\"";
    if (labels == DotLabels::index)
      out << i;
    else
      out << g.vertex_label(i);
    out << "\"];\n";
  }
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json property_record_json(const PropertyRecord& rec) {
  nlohmann::ordered_json j;
  j["vertex_count"] = rec.vertex_count;
  j["edge_count"] = rec.edge_count;
  j["degrees"] = rec.degrees;
  j["flags"] = {
      {"is_complete", rec.flags.is_complete},
      {"is_regular", rec.flags.is_regular},
      {"is_star", rec.flags.is_star},
      {"is_bipartite", rec.flags.is_bipartite},
      {"has_pendant", rec.flags.has_pendant},
      {"is_triangle_free", rec.flags.is_triangle_free},
  };
  j["pendant_vertices"] = rec.pendant_vertices;
  return j;
}

nlohmann::ordered_json cycle_witness_json(const CycleWitness& w) {
  nlohmann::ordered_json j;
  j["cycle"] = w.vertex_indices;
  return j;
}

}  // namespace idealgraph
