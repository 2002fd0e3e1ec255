#include "idealgraph/hamcycle.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace idealgraph {

// ---------------------------------------------------------------------------
// Grid snake construction
// ---------------------------------------------------------------------------

namespace {

using Cell = std::pair<int, int>;

// Boustrophedon over columns 1..2, rows `top`..`bottom`: a horizontal edge in
// every row, vertical connectors alternating between columns 2 and 1.
void emit_ladder(std::vector<Cell>& cells, int top, int bottom) {
  for (int i = top; i <= bottom; ++i) {
    if (i % 2 == 1) {
      cells.emplace_back(i, 1);
      cells.emplace_back(i, 2);
    } else {
      cells.emplace_back(i, 2);
      cells.emplace_back(i, 1);
    }
  }
}

GridCycle snake_two_columns(int m) {
  // n == 2, m >= 3. Row m only has the cell (m, 1); the closing edge
  // (m,1)--(1,1) runs inside column 1.
  GridCycle gc;
  gc.rows = m;
  gc.cols = 2;
  emit_ladder(gc.cells, 1, m - 1);
  gc.cells.emplace_back(m, 1);
  int L = static_cast<int>(gc.cells.size());
  for (int i = 1; i <= m - 1; ++i) gc.row_edges[i] = 2 * (i - 1);
  gc.row_edges[m] = L - 2;  // transition into row m; universal row
  gc.col_edges[1] = L - 1;  // closing edge (m,1)--(1,1)
  gc.col_edges[2] = 1;      // ladder vertical (1,2)--(2,2)
  return gc;
}

GridCycle snake_general(int m, int n) {
  // m >= 3, n >= 3. Ladder over columns 1..2 (a row edge in every row), then
  // a vertical serpentine over columns 3..n-1, then up the short column n.
  GridCycle gc;
  gc.rows = m;
  gc.cols = n;
  emit_ladder(gc.cells, 1, m);
  for (int i = 1; i <= m; ++i) gc.row_edges[i] = 2 * (i - 1);
  gc.col_edges[1] = 3;  // (2,1)--(3,1)
  gc.col_edges[2] = 1;  // (1,2)--(2,2)

  bool ascend = true;
  for (int j = 3; j <= n - 1; ++j) {
    gc.col_edges[j] = static_cast<int>(gc.cells.size());
    if (ascend) {
      for (int i = m; i >= 1; --i) gc.cells.emplace_back(i, j);
    } else {
      for (int i = 1; i <= m; ++i) gc.cells.emplace_back(i, j);
    }
    ascend = !ascend;
  }
  gc.col_edges[n] = static_cast<int>(gc.cells.size());
  for (int i = m - 1; i >= 1; --i) gc.cells.emplace_back(i, n);
  return gc;
}

GridCycle transpose(const GridCycle& gc) {
  GridCycle t;
  t.rows = gc.cols;
  t.cols = gc.rows;
  t.cells.reserve(gc.cells.size());
  for (auto [i, j] : gc.cells) t.cells.emplace_back(j, i);
  t.row_edges = gc.col_edges;
  t.col_edges = gc.row_edges;
  return t;
}

}  // namespace

GridCycle grid_snake_cycle(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("grid needs m, n >= 2");
  if (m == 2 && n == 2) {
    // Degenerate branch: three cells closed through the full-coordinate
    // adjacency (1,2)--(2,1). Only three edges exist, so the column-n entry
    // aliases the column-1 edge; the splice inserts both column ideals there.
    GridCycle gc;
    gc.rows = gc.cols = 2;
    gc.cells = {{1, 1}, {1, 2}, {2, 1}};
    gc.row_edges = {{1, 0}, {2, 1}};
    gc.col_edges = {{1, 2}, {2, 2}};
    return gc;
  }
  if (n == 2) return snake_two_columns(m);
  if (m == 2) return transpose(snake_two_columns(n));
  return snake_general(m, n);
}

namespace {

std::logic_error grid_error(const GridCycle& gc, const std::string& what) {
  return std::logic_error("grid cycle (" + std::to_string(gc.rows) + "," +
                          std::to_string(gc.cols) + "): " + what);
}

}  // namespace

void check_grid_cycle(const GridCycle& gc) {
  int m = gc.rows, n = gc.cols;
  if (m < 2 || n < 2) throw grid_error(gc, "rows/cols below 2");
  int L = static_cast<int>(gc.cells.size());
  if (L != m * n - 1) throw grid_error(gc, "cell count is not m*n-1");

  std::set<Cell> seen;
  for (auto [i, j] : gc.cells) {
    if (i < 1 || i > m || j < 1 || j > n) throw grid_error(gc, "cell out of range");
    if (i == m && j == n) throw grid_error(gc, "the excluded corner appears");
    if (!seen.insert({i, j}).second) throw grid_error(gc, "cell visited twice");
  }

  auto legal_move = [&](Cell a, Cell b) {
    return a.first == b.first || a.second == b.second || a.first == m || b.first == m ||
           a.second == n || b.second == n;
  };
  for (int p = 0; p < L; ++p) {
    if (!legal_move(gc.cells[p], gc.cells[(p + 1) % L]))
      throw grid_error(gc, "illegal move at position " + std::to_string(p));
  }

  auto edge_cells = [&](int p) {
    return std::pair<Cell, Cell>(gc.cells[p], gc.cells[(p + 1) % L]);
  };
  std::vector<int> positions;
  for (int i = 1; i <= m; ++i) {
    auto it = gc.row_edges.find(i);
    if (it == gc.row_edges.end()) throw grid_error(gc, "missing row edge " + std::to_string(i));
    int p = it->second;
    if (p < 0 || p >= L) throw grid_error(gc, "row edge position out of range");
    auto [a, b] = edge_cells(p);
    bool valid = i == m || ((a.first == i || a.first == m) && (b.first == i || b.first == m));
    if (!valid) throw grid_error(gc, "row edge " + std::to_string(i) + " not splice-safe");
    positions.push_back(p);
  }
  for (int j = 1; j <= n; ++j) {
    auto it = gc.col_edges.find(j);
    if (it == gc.col_edges.end()) throw grid_error(gc, "missing column edge " + std::to_string(j));
    int p = it->second;
    if (p < 0 || p >= L) throw grid_error(gc, "column edge position out of range");
    auto [a, b] = edge_cells(p);
    bool valid = j == n || ((a.second == j || a.second == n) && (b.second == j || b.second == n));
    if (!valid) throw grid_error(gc, "column edge " + std::to_string(j) + " not splice-safe");
    positions.push_back(p);
  }
  if (static_cast<int>(gc.row_edges.size()) != m || static_cast<int>(gc.col_edges.size()) != n)
    throw grid_error(gc, "registry has extra entries");

  if (m == 2 && n == 2) {
    if (gc.row_edges.at(1) == gc.col_edges.at(1))
      throw grid_error(gc, "row-1 and column-1 edges must differ");
    return;  // three edges cannot carry four distinct entries
  }
  std::set<int> uniq(positions.begin(), positions.end());
  if (uniq.size() != positions.size()) throw grid_error(gc, "registered edges are not distinct");
}

// ---------------------------------------------------------------------------
// Factor maps and boundary splicing
// ---------------------------------------------------------------------------

namespace {

// Partial coordinate tuples over a subset of blocks, in the same canonical
// order as full enumeration (all-full first, all-zero last).
std::vector<std::vector<int>> enumerate_side(const Ring& ring, const std::vector<int>& blocks) {
  long long total = 1;
  for (int b : blocks) total *= ring.block(b).size();
  std::vector<std::vector<int>> out;
  out.reserve(total);
  for (long long rank = 0; rank < total; ++rank) {
    std::vector<int> coords(blocks.size());
    long long r = rank;
    for (int idx = static_cast<int>(blocks.size()) - 1; idx >= 0; --idx) {
      int sz = ring.block(blocks[idx]).size();
      coords[idx] = static_cast<int>(r % sz);
      r /= sz;
    }
    out.push_back(std::move(coords));
  }
  return out;
}

// Nonzero side ideals ordered with the side unit last (it plays the
// universal row/column of the grid).
std::vector<std::vector<int>> nonzero_side_ideals(const Ring& ring,
                                                  const std::vector<int>& blocks) {
  auto all = enumerate_side(ring, blocks);
  std::vector<std::vector<int>> out(all.begin() + 1, all.end() - 1);
  out.push_back(all.front());
  return out;
}

Ideal combine(const Ring& ring, const std::vector<int>& side1, const std::vector<int>& s1coords,
              const std::vector<int>& side2, const std::vector<int>& s2coords) {
  Ideal a = ring.zero();
  for (std::size_t idx = 0; idx < side1.size(); ++idx) a.coords[side1[idx]] = s1coords[idx];
  for (std::size_t idx = 0; idx < side2.size(); ++idx) a.coords[side2[idx]] = s2coords[idx];
  return a;
}

}  // namespace

FactorMap build_factor_map(const IntersectionGraph& g, const std::vector<int>& side1_blocks) {
  const Ring& ring = g.ring();
  int B = ring.block_count();
  std::set<int> side1(side1_blocks.begin(), side1_blocks.end());
  if (side1.empty() || static_cast<int>(side1.size()) == B ||
      static_cast<int>(side1.size()) != static_cast<int>(side1_blocks.size()))
    throw std::invalid_argument("side must be a proper nonempty subset of blocks");
  for (int b : side1)
    if (b < 0 || b >= B) throw std::invalid_argument("block index out of range");

  FactorMap fm;
  fm.side1_blocks.assign(side1.begin(), side1.end());
  for (int b = 0; b < B; ++b)
    if (!side1.count(b)) fm.side2_blocks.push_back(b);

  auto a_list = nonzero_side_ideals(ring, fm.side1_blocks);
  auto b_list = nonzero_side_ideals(ring, fm.side2_blocks);
  fm.rows = static_cast<int>(a_list.size());
  fm.cols = static_cast<int>(b_list.size());

  std::vector<int> zero1(fm.side1_blocks.size()), zero2(fm.side2_blocks.size());
  for (std::size_t i = 0; i < fm.side1_blocks.size(); ++i)
    zero1[i] = ring.block(fm.side1_blocks[i]).zero_index();
  for (std::size_t i = 0; i < fm.side2_blocks.size(); ++i)
    zero2[i] = ring.block(fm.side2_blocks[i]).zero_index();

  fm.cell_vertex.assign(fm.rows + 1, std::vector<int>(fm.cols + 1, -1));
  for (int i = 1; i <= fm.rows; ++i)
    for (int j = 1; j <= fm.cols; ++j) {
      if (i == fm.rows && j == fm.cols) continue;  // the unit ideal
      fm.cell_vertex[i][j] = g.vertex_index(
          combine(ring, fm.side1_blocks, a_list[i - 1], fm.side2_blocks, b_list[j - 1]));
    }
  fm.row_vertex.assign(fm.rows + 1, -1);
  for (int i = 1; i <= fm.rows; ++i)
    fm.row_vertex[i] =
        g.vertex_index(combine(ring, fm.side1_blocks, a_list[i - 1], fm.side2_blocks, zero2));
  fm.col_vertex.assign(fm.cols + 1, -1);
  for (int j = 1; j <= fm.cols; ++j)
    fm.col_vertex[j] =
        g.vertex_index(combine(ring, fm.side1_blocks, zero1, fm.side2_blocks, b_list[j - 1]));
  return fm;
}

CycleWitness splice_boundary(const GridCycle& gc, const IntersectionGraph& g,
                             const FactorMap& fm) {
  check_grid_cycle(gc);
  if (gc.rows != fm.rows || gc.cols != fm.cols)
    throw std::invalid_argument("grid cycle and factor map disagree on dimensions");
  int L = static_cast<int>(gc.cells.size());

  // Boundary ideals to insert into each original edge, in registration order
  // (rows ascending, then columns ascending). The only doubly-loaded edge is
  // the aliased one in the (2,2) grid, where both column ideals share the
  // column-1 edge and are mutually adjacent through the full coordinate.
  std::vector<std::vector<int>> insertions(L);
  for (int i = 1; i <= gc.rows; ++i) insertions[gc.row_edges.at(i)].push_back(fm.row_vertex[i]);
  for (int j = 1; j <= gc.cols; ++j) insertions[gc.col_edges.at(j)].push_back(fm.col_vertex[j]);

  CycleWitness w;
  for (int p = 0; p < L; ++p) {
    auto [i, j] = gc.cells[p];
    w.vertex_indices.push_back(fm.cell_vertex[i][j]);
    for (int v : insertions[p]) w.vertex_indices.push_back(v);
  }

  CycleCheck check = validate_cycle_detailed(g, w);
  if (check != CycleCheck::ok)
    throw std::logic_error(std::string("boundary splice produced an invalid cycle: ") +
                           to_string(check));
  return w;
}

// ---------------------------------------------------------------------------
// Path lifting for S x F
// ---------------------------------------------------------------------------

CycleWitness lift_path_to_cycle(const IntersectionGraph& g, int field_block,
                                const std::vector<Ideal>& path_of_s) {
  const Ring& ring = g.ring();
  if (field_block < 0 || field_block >= ring.block_count())
    throw std::invalid_argument("field block index out of range");
  if (ring.spec().blocks[field_block].kind != BlockKind::Field)
    throw std::invalid_argument("designated block is not a field");

  std::vector<int> s_blocks;
  for (int b = 0; b < ring.block_count(); ++b)
    if (b != field_block) s_blocks.push_back(b);
  if (s_blocks.empty()) throw std::invalid_argument("no local factor to lift from");

  RingSpec s_spec;
  for (int b : s_blocks) s_spec.blocks.push_back(ring.spec().blocks[b]);
  Ring s_ring(s_spec);

  int p = static_cast<int>(path_of_s.size());
  if (p < 2)
    throw std::invalid_argument("path too short: a single-vertex factor graph is the "
                                "non-Hamiltonian field-plus-minimal-local family");
  if (p != s_ring.nontrivial_ideal_count())
    throw std::invalid_argument("path does not cover every nontrivial ideal of the factor");
  std::set<Ideal> distinct(path_of_s.begin(), path_of_s.end());
  if (static_cast<int>(distinct.size()) != p)
    throw std::invalid_argument("path repeats a vertex");
  for (const auto& s : path_of_s)
    if (!s_ring.is_nontrivial(s)) throw std::invalid_argument("path vertex is trivial");
  for (int i = 0; i + 1 < p; ++i)
    if (s_ring.is_zero(s_ring.meet(path_of_s[i], path_of_s[i + 1])))
      throw std::invalid_argument("path edge is missing in the factor graph");

  // Zig-zag both sides of the path: (s_i, F) and (s_i, 0) consecutively,
  // alternating which side is entered first. The two extra vertices are
  // (S, 0), inserted next to a 0-side edge (or appended when the path length
  // is odd), and (0, F), inserted next to an F-side edge (or appended when
  // the length is even).
  const int kFieldFull = 0, kFieldZero = 1;
  auto embed = [&](const Ideal& s, int field_coord) {
    Ideal a;
    a.coords.resize(ring.block_count());
    for (std::size_t idx = 0; idx < s_blocks.size(); ++idx)
      a.coords[s_blocks[idx]] = s.coords[idx];
    a.coords[field_block] = field_coord;
    return a;
  };
  Ideal s_unit = s_ring.unit();
  Ideal s_zero = s_ring.zero();

  std::vector<Ideal> seq;
  for (int i = 0; i < p; ++i) {
    int first = (i % 2 == 0) ? kFieldFull : kFieldZero;
    seq.push_back(embed(path_of_s[i], first));
    seq.push_back(embed(path_of_s[i], first == kFieldFull ? kFieldZero : kFieldFull));
  }
  if (p % 2 == 1) {
    seq.push_back(embed(s_unit, kFieldZero));                         // (S, 0) closes to (s_1, F)
    seq.insert(seq.begin() + 4, embed(s_zero, kFieldFull));           // (0, F) between F-F at s_2
  } else {
    seq.insert(seq.begin() + 2, embed(s_unit, kFieldZero));           // (S, 0) between 0-0
    seq.push_back(embed(s_zero, kFieldFull));                         // (0, F) closes to (s_1, F)
  }

  CycleWitness w;
  for (const auto& a : seq) w.vertex_indices.push_back(g.vertex_index(a));
  CycleCheck check = validate_cycle_detailed(g, w);
  if (check != CycleCheck::ok)
    throw std::logic_error(std::string("path lift produced an invalid cycle: ") +
                           to_string(check));
  return w;
}

// ---------------------------------------------------------------------------
// Prediction
// ---------------------------------------------------------------------------

HamPrediction predict_hamiltonian(const RingSpec& spec) {
  const auto& blocks = spec.blocks;
  auto is_field = [](const BlockSpec& b) { return b.kind == BlockKind::Field; };
  auto is_chain_k = [](const BlockSpec& b, int k) {
    return b.kind == BlockKind::Chain && b.k == k;
  };

  if (blocks.size() == 1) {
    const BlockSpec& b = blocks[0];
    if (is_field(b)) return {HamVerdict::not_hamiltonian, "(1)"};
    if (is_chain_k(b, 2)) return {HamVerdict::not_hamiltonian, "(2)"};
    if (is_chain_k(b, 3)) return {HamVerdict::not_hamiltonian, "(3)"};
    if (b.kind == BlockKind::VSLocal) return {HamVerdict::open_question, "open_question"};
    return {HamVerdict::hamiltonian, ""};
  }
  if (blocks.size() == 2) {
    if (is_field(blocks[0]) && is_field(blocks[1]))
      return {HamVerdict::not_hamiltonian, "(1)"};
    if ((is_field(blocks[0]) && is_chain_k(blocks[1], 2)) ||
        (is_field(blocks[1]) && is_chain_k(blocks[0], 2)))
      return {HamVerdict::not_hamiltonian, "(2)"};
  }
  return {HamVerdict::hamiltonian, ""};
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

const char* to_string(ConstructionStatus s) {
  switch (s) {
    case ConstructionStatus::cycle: return "cycle";
    case ConstructionStatus::not_hamiltonian_by_theorem: return "not_hamiltonian_by_theorem";
    case ConstructionStatus::unknown: return "unknown";
  }
  return "?";
}

std::optional<std::vector<int>> best_grid_bipartition(const RingSpec& spec) {
  int B = static_cast<int>(spec.blocks.size());
  if (B < 2) return std::nullopt;
  std::vector<long long> counts;
  for (const auto& b : spec.blocks) counts.push_back(b.ideal_count());

  std::optional<std::vector<int>> best;
  long long best_score = -1;
  // side 1 always holds block 0; subsets enumerated in lexicographic order of
  // their index sets, so ties keep the leftmost assignment.
  for (int mask = 1; mask < (1 << B); mask += 2) {
    if (mask == (1 << B) - 1) continue;
    long long c1 = 1, c2 = 1;
    std::vector<int> side1;
    for (int b = 0; b < B; ++b) {
      if (mask >> b & 1) {
        c1 *= counts[b];
        side1.push_back(b);
      } else {
        c2 *= counts[b];
      }
    }
    if (c1 < 3 || c2 < 3) continue;
    long long score = std::min(c1, c2);
    if (score > best_score || (score == best_score && best && side1 < *best)) {
      best_score = score;
      best = side1;
    }
  }
  return best;
}

namespace {

std::optional<std::vector<Ideal>> hamiltonian_path_of(const Ring& s_ring, int oracle_cap);

ConstructionOutcome construct_impl(const IntersectionGraph& g, int oracle_cap) {
  const Ring& ring = g.ring();
  const RingSpec& spec = ring.spec();
  int V = g.vertex_count();

  HamPrediction pred = predict_hamiltonian(spec);
  if (pred.verdict == HamVerdict::not_hamiltonian) {
    return {ConstructionStatus::not_hamiltonian_by_theorem, std::nullopt, "none",
            "non-Hamiltonian family " + pred.exception_tag};
  }

  if (spec.blocks.size() == 1 && spec.blocks[0].kind != BlockKind::VSLocal) {
    // single chain block with >= 3 nontrivial ideals: the graph is complete
    CycleWitness w;
    for (int v = 0; v < V; ++v) w.vertex_indices.push_back(v);
    if (validate_cycle_detailed(g, w) != CycleCheck::ok)
      throw std::logic_error("complete-graph order failed validation");
    return {ConstructionStatus::cycle, w, "complete_order", ""};
  }

  if (spec.blocks.size() >= 2) {
    if (auto side1 = best_grid_bipartition(spec)) {
      FactorMap fm = build_factor_map(g, *side1);
      GridCycle gc = grid_snake_cycle(fm.rows, fm.cols);
      CycleWitness w = splice_boundary(gc, g, fm);
      std::ostringstream note;
      note << "grid " << fm.rows << "x" << fm.cols;
      return {ConstructionStatus::cycle, w, "grid_splice", note.str()};
    }

    bool all_fields = std::all_of(spec.blocks.begin(), spec.blocks.end(), [](const BlockSpec& b) {
      return b.kind == BlockKind::Field;
    });
    if (all_fields && spec.blocks.size() == 3) {
      // explicit six-cycle: S1, S1+S2, S2, S2+F, F, S1+F
      auto id = [&](int a, int b, int c) {
        Ideal x;
        x.coords = {a, b, c};
        return g.vertex_index(x);
      };
      CycleWitness w;
      w.vertex_indices = {id(0, 1, 1), id(0, 0, 1), id(1, 0, 1),
                          id(1, 0, 0), id(1, 1, 0), id(0, 1, 0)};
      if (validate_cycle_detailed(g, w) != CycleCheck::ok)
        throw std::logic_error("three-field six-cycle failed validation");
      return {ConstructionStatus::cycle, w, "three_fields_six_cycle", ""};
    }

    // S x F with a single field factor: lift a Hamiltonian path of the
    // factor graph.
    if (spec.blocks.size() == 2) {
      int field_block = -1;
      for (int b = 0; b < 2; ++b)
        if (spec.blocks[b].kind == BlockKind::Field) field_block = b;
      if (field_block >= 0) {
        int other = 1 - field_block;
        RingSpec s_spec;
        s_spec.blocks = {spec.blocks[other]};
        Ring s_ring(s_spec);
        if (auto path = hamiltonian_path_of(s_ring, oracle_cap)) {
          CycleWitness w = lift_path_to_cycle(g, field_block, *path);
          return {ConstructionStatus::cycle, w, "field_lift", ""};
        }
      }
    }
  }

  // bounded oracle fallback
  std::string note = pred.verdict == HamVerdict::open_question
                         ? "outside the non-Hamiltonian exception list; decided by the oracle"
                         : "no constructive route applied; decided by the oracle";
  if (V > oracle_cap)
    throw CapExceeded("construction fallback needs the oracle but " + std::to_string(V) +
                      " vertices exceed the cap " + std::to_string(oracle_cap));
  if (auto w = hamiltonian_oracle(g, oracle_cap))
    return {ConstructionStatus::cycle, *w, "oracle_fallback", note};
  return {ConstructionStatus::unknown, std::nullopt, "oracle_fallback",
          note + "; oracle found no cycle"};
}

std::optional<std::vector<Ideal>> hamiltonian_path_of(const Ring& s_ring, int oracle_cap) {
  IntersectionGraph gs(s_ring);
  int Vs = gs.vertex_count();
  if (Vs < 2) return std::nullopt;
  if (Vs == 2) {
    if (!gs.adjacent(0, 1)) return std::nullopt;
    return std::vector<Ideal>{gs.vertex(0), gs.vertex(1)};
  }
  ConstructionOutcome outcome = construct_impl(gs, oracle_cap);
  if (outcome.status != ConstructionStatus::cycle) return std::nullopt;
  std::vector<Ideal> path;
  for (int v : outcome.witness->vertex_indices) path.push_back(gs.vertex(v));
  return path;  // a cycle minus its closing edge
}

}  // namespace

ConstructionOutcome construct_hamiltonian(const IntersectionGraph& g, int oracle_cap) {
  ConstructionOutcome outcome = construct_impl(g, oracle_cap);
  if (outcome.status == ConstructionStatus::cycle &&
      (!outcome.witness || outcome.witness->length() != g.vertex_count() ||
       !validate_cycle(g, *outcome.witness)))
    throw std::logic_error("construction reported a cycle without a valid witness");
  return outcome;
}

// ---------------------------------------------------------------------------
// Pancyclic families
// ---------------------------------------------------------------------------

namespace {

// Drop one vertex whose cyclic neighbors are adjacent; the straight-segment
// contraction of the grid pictures is the special case where the three
// vertices share a row or column.
std::optional<CycleWitness> shrink_by_one(const IntersectionGraph& g, const CycleWitness& w) {
  int L = w.length();
  if (L <= 3) return std::nullopt;
  for (int i = 0; i < L; ++i) {
    int prev = w.vertex_indices[(i + L - 1) % L];
    int next = w.vertex_indices[(i + 1) % L];
    if (!g.adjacent(prev, next)) continue;
    CycleWitness out;
    for (int p = 0; p < L; ++p)
      if (p != i) out.vertex_indices.push_back(w.vertex_indices[p]);
    return out;
  }
  return std::nullopt;
}

// Drop two consecutive vertices (the corner U-flip of the grid pictures).
std::optional<CycleWitness> shrink_by_two(const IntersectionGraph& g, const CycleWitness& w) {
  int L = w.length();
  if (L <= 4) return std::nullopt;
  for (int i = 0; i < L; ++i) {
    int before = w.vertex_indices[(i + L - 1) % L];
    int after = w.vertex_indices[(i + 2) % L];
    if (!g.adjacent(before, after)) continue;
    CycleWitness out;
    for (int p = 0; p < L; ++p)
      if (p != i && p != (i + 1) % L) out.vertex_indices.push_back(w.vertex_indices[p]);
    return out;
  }
  return std::nullopt;
}

}  // namespace

PancyclicResult pancyclic_family(const IntersectionGraph& g, int oracle_cap, int spectrum_cap) {
  ConstructionOutcome outcome = construct_hamiltonian(g, oracle_cap);
  if (outcome.status != ConstructionStatus::cycle)
    throw std::invalid_argument("pancyclic_family requires a Hamiltonian graph (construction: " +
                                std::string(to_string(outcome.status)) + ")");
  int V = g.vertex_count();
  if (V < 3) throw std::invalid_argument("pancyclic_family requires at least 3 vertices");

  PancyclicResult result;
  result.cycles[V] = *outcome.witness;
  for (int L = V - 1; L >= 3; --L) {
    std::optional<CycleWitness> w;
    if (auto it = result.cycles.find(L + 1); it != result.cycles.end())
      w = shrink_by_one(g, it->second);
    if (!w) {
      if (auto it = result.cycles.find(L + 2); it != result.cycles.end())
        w = shrink_by_two(g, it->second);
    }
    if (!w && V <= spectrum_cap) w = find_cycle_of_length(g, L);
    if (!w) {
      result.gaps.push_back(L);
      continue;
    }
    if (w->length() != L || !validate_cycle(g, *w))
      throw std::logic_error("pancyclic transformation produced an invalid witness");
    result.cycles[L] = std::move(*w);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

nlohmann::ordered_json cycle_witness_labels_json(const IntersectionGraph& g,
                                                 const CycleWitness& w) {
  nlohmann::ordered_json j;
  const RingSpec& spec = g.ring().spec();
  j["spec"] = spec.source_text.empty() ? spec.canonical_text() : spec.source_text;
  j["length"] = w.length();
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (int v : w.vertex_indices) vertices.push_back(g.vertex_label(v));
  j["vertices"] = vertices;
  return j;
}

nlohmann::ordered_json grid_trace_json(const GridCycle& gc) {
  nlohmann::ordered_json j;
  j["rows"] = gc.rows;
  j["cols"] = gc.cols;
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (auto [i, k] : gc.cells) cells.push_back(nlohmann::ordered_json::array({i, k}));
  j["cells"] = cells;
  nlohmann::ordered_json rows = nlohmann::ordered_json::object();
  for (auto [row, pos] : gc.row_edges) rows[std::to_string(row)] = pos;
  j["row_edges"] = rows;
  nlohmann::ordered_json cols = nlohmann::ordered_json::object();
  for (auto [col, pos] : gc.col_edges) cols[std::to_string(col)] = pos;
  j["col_edges"] = cols;
  return j;
}

}  // namespace idealgraph
