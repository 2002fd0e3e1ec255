#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "idealgraph/graph.hpp"
#include "idealgraph/rings.hpp"

namespace idealgraph {

// ---------------------------------------------------------------------------
// Grid cycles
// ---------------------------------------------------------------------------
//
// For a product R1 x R2, index the nonzero ideals of R1 as a_1..a_m (a_m the
// whole of R1) and of R2 as b_1..b_n. The grid cell (i, j) stands for the
// ideal a_i + b_j; the corner (m, n) is the unit ideal and is excluded. Any
// two cells sharing a row or a column intersect nontrivially, and every cell
// in row m or column n intersects every other cell (one full coordinate).

struct GridCycle {
  int rows = 0;  // m
  int cols = 0;  // n
  /// Cyclic cell sequence, 1-based coordinates, excluding (m, n).
  std::vector<std::pair<int, int>> cells;
  /// row -> position p of a cycle edge (cells[p], cells[p+1 mod L]) usable to
  /// splice the boundary ideal a_row + 0; likewise for columns and 0 + b_col.
  std::map<int, int> row_edges;
  std::map<int, int> col_edges;
};

/// A deterministic Hamiltonian cycle on the grid minus its corner satisfying
/// every GridCycle invariant. Throws std::invalid_argument for m or n < 2.
GridCycle grid_snake_cycle(int m, int n);

/// Independent checker for every GridCycle invariant: coverage exactly once,
/// move legality, and a complete registry of splice edges (distinct except in
/// the degenerate (2,2) grid, whose three-edge cycle cannot carry four
/// distinct registry entries). Throws std::logic_error with a description.
void check_grid_cycle(const GridCycle& gc);

/// Vertex indices for the grid cells and boundary ideals of a bipartition.
struct FactorMap {
  std::vector<int> side1_blocks;  // block indices of the row factor
  std::vector<int> side2_blocks;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> cell_vertex;  // [i][j], 1-based
  std::vector<int> row_vertex;                // a_i + 0, 1-based
  std::vector<int> col_vertex;                // 0 + b_j, 1-based
};

FactorMap build_factor_map(const IntersectionGraph& g, const std::vector<int>& side1_blocks);

/// Extends a grid cycle to a Hamiltonian cycle over all nontrivial ideals by
/// splicing each boundary ideal into its registered edge. The result is
/// validated; an invalid splice is an internal bug and throws.
CycleWitness splice_boundary(const GridCycle& gc, const IntersectionGraph& g,
                             const FactorMap& fm);

/// Hamiltonian cycle of (S x F) from a Hamiltonian path of the graph of S,
/// where F is the field block at `field_block` and `path_of_s` lists ideals
/// of the product of the remaining blocks. Throws std::invalid_argument when
/// the path is shorter than 2 (that family is non-Hamiltonian) or not a
/// Hamiltonian path.
CycleWitness lift_path_to_cycle(const IntersectionGraph& g, int field_block,
                                const std::vector<Ideal>& path_of_s);

// ---------------------------------------------------------------------------
// Hamiltonicity prediction and construction
// ---------------------------------------------------------------------------

enum class HamVerdict { hamiltonian, not_hamiltonian, open_question };

struct HamPrediction {
  HamVerdict verdict = HamVerdict::hamiltonian;
  /// "(1)" field or field x field; "(2)" chain(.,2) alone or with a field;
  /// "(3)" chain(.,3); "open_question" for a sole vs block.
  std::string exception_tag;
};

HamPrediction predict_hamiltonian(const RingSpec& spec);

enum class ConstructionStatus { cycle, not_hamiltonian_by_theorem, unknown };
const char* to_string(ConstructionStatus s);

struct ConstructionOutcome {
  ConstructionStatus status = ConstructionStatus::unknown;
  std::optional<CycleWitness> witness;
  std::string strategy;
  std::string note;
};

/// Dispatch: complete single-block graphs take any vertex order; products
/// with a bipartition whose sides both have >= 3 ideals go through the grid
/// construction; three fields use the explicit six-cycle; a single local
/// block plus a field lifts a Hamiltonian path; anything else falls back to
/// the bounded oracle. A `cycle` status always carries a validated witness.
ConstructionOutcome construct_hamiltonian(const IntersectionGraph& g,
                                          int oracle_cap = kDefaultHamiltonianOracleCap);

/// Best bipartition of the blocks for the grid construction (maximizing the
/// smaller side's ideal count, >= 3 required on both), or nothing.
std::optional<std::vector<int>> best_grid_bipartition(const RingSpec& spec);

struct PancyclicResult {
  std::map<int, CycleWitness> cycles;  // length -> validated witness
  std::vector<int> gaps;               // lengths in [3, V] with no witness
};

/// Cycles of every length in [3, V], derived from the constructed Hamiltonian
/// cycle by deleting vertices whose neighbors are adjacent (one at a time,
/// two for the corner transformations), with a bounded oracle search filling
/// any length the transformations miss. Gaps are reported, never hidden.
/// Throws std::invalid_argument when the graph is not Hamiltonian.
PancyclicResult pancyclic_family(const IntersectionGraph& g,
                                 int oracle_cap = kDefaultHamiltonianOracleCap,
                                 int spectrum_cap = kDefaultSpectrumOracleCap);

nlohmann::ordered_json cycle_witness_labels_json(const IntersectionGraph& g,
                                                 const CycleWitness& w);
nlohmann::ordered_json grid_trace_json(const GridCycle& gc);

}  // namespace idealgraph
