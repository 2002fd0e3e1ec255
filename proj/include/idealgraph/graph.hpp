#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "idealgraph/rings.hpp"

namespace idealgraph {

inline constexpr int kDefaultGraphVertexCap = 2000;
inline constexpr int kDefaultInducedCycleMaxN = 8;
inline constexpr int kDefaultSubgraphSearchCap = 64;
inline constexpr int kDefaultHamiltonianOracleCap = 16;
inline constexpr int kDefaultSpectrumOracleCap = 14;

/// Symmetric bit-packed adjacency matrix without self-loops.
class BitMatrix {
 public:
  explicit BitMatrix(int n = 0) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

  int size() const { return n_; }
  bool get(int i, int j) const {
    return (bits_[std::size_t(i) * words_ + j / 64] >> (j % 64)) & 1;
  }
  void set(int i, int j) {
    bits_[std::size_t(i) * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
    bits_[std::size_t(j) * words_ + i / 64] |= std::uint64_t(1) << (i % 64);
  }
  /// First word of row i; the whole row when size() <= 64.
  std::uint64_t row64(int i) const { return words_ ? bits_[std::size_t(i) * words_] : 0; }
  const std::uint64_t* row(int i) const { return bits_.data() + std::size_t(i) * words_; }
  int words_per_row() const { return words_; }

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

/// An ordered vertex sequence claimed to be a cycle, interpreted cyclically.
struct CycleWitness {
  std::vector<int> vertex_indices;

  int length() const { return static_cast<int>(vertex_indices.size()); }
};

enum class CycleCheck { ok, too_short, index_out_of_range, repeated_vertex, missing_edge };
const char* to_string(CycleCheck c);

/// The intersection graph of the nontrivial ideals of a ring: vertices are
/// the nontrivial ideals in canonical order, an edge joins two ideals with
/// nonzero meet. Immutable after construction.
class IntersectionGraph {
 public:
  explicit IntersectionGraph(Ring ring, int vertex_cap = kDefaultGraphVertexCap);

  const Ring& ring() const { return ring_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Ideal>& vertices() const { return vertices_; }
  const Ideal& vertex(int i) const { return vertices_[i]; }
  /// Index of a nontrivial ideal in the vertex order.
  int vertex_index(const Ideal& a) const;
  bool adjacent(int i, int j) const { return i != j && adj_.get(i, j); }
  const BitMatrix& adjacency() const { return adj_; }
  int degree(int i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  long long edge_count() const { return edge_count_; }
  std::string vertex_label(int i) const { return ring_.ideal_label(vertices_[i]); }

 private:
  Ring ring_;
  std::vector<Ideal> vertices_;
  BitMatrix adj_;
  std::vector<int> degrees_;
  long long edge_count_ = 0;
};

IntersectionGraph build_intersection_graph(const Ring& ring,
                                           int vertex_cap = kDefaultGraphVertexCap);

struct PropertyFlags {
  bool is_complete = false;
  bool is_regular = false;
  bool is_star = false;
  bool is_bipartite = false;
  bool has_pendant = false;
  bool is_triangle_free = false;
};

struct PropertyRecord {
  int vertex_count = 0;
  long long edge_count = 0;
  std::vector<int> degrees;
  PropertyFlags flags;
  std::vector<int> pendant_vertices;
};

/// All flags by direct inspection: triangle-freeness by neighborhood
/// intersection, bipartiteness by 2-coloring. Degenerate conventions:
/// complete/regular/triangle-free are vacuously true for fewer than two
/// vertices; a star needs a center plus at least one leaf.
PropertyRecord compute_properties(const IntersectionGraph& g);

/// An induced n-cycle (consecutive pairs adjacent, every other pair
/// non-adjacent), or nothing. Exhaustive backtracking.
std::optional<CycleWitness> find_induced_cycle(const IntersectionGraph& g, int n,
                                               int max_n = kDefaultInducedCycleMaxN,
                                               int vertex_cap = kDefaultSubgraphSearchCap);

struct ClawWitness {
  int center = -1;
  std::vector<int> leaves;
};

/// An induced K_{1,n}: a center adjacent to n pairwise non-adjacent leaves.
std::optional<ClawWitness> find_induced_claw(const IntersectionGraph& g, int n,
                                             int vertex_cap = kDefaultSubgraphSearchCap);

/// Exhaustive Hamiltonian-cycle search with degree and connectivity pruning.
std::optional<CycleWitness> hamiltonian_oracle(const IntersectionGraph& g,
                                               int vertex_cap = kDefaultHamiltonianOracleCap);

/// A cycle of exactly `length` (not necessarily induced), or nothing.
std::optional<CycleWitness> find_cycle_of_length(const IntersectionGraph& g, int length);

/// The exact set of lengths L in [3, V] realized by some cycle.
std::set<int> cycle_spectrum_oracle(const IntersectionGraph& g,
                                    int vertex_cap = kDefaultSpectrumOracleCap);

CycleCheck validate_cycle_detailed(const IntersectionGraph& g, const CycleWitness& w);
bool validate_cycle(const IntersectionGraph& g, const CycleWitness& w);

enum class DotLabels { index, ideal };

/// Deterministic DOT text; nodes in vertex order, edges with i < j.
std::string export_dot(const IntersectionGraph& g, DotLabels labels);

nlohmann::ordered_json property_record_json(const PropertyRecord& rec);
nlohmann::ordered_json cycle_witness_json(const CycleWitness& w);

}  // namespace idealgraph
