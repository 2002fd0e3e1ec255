#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "idealgraph/graph.hpp"
#include "idealgraph/rings.hpp"

namespace idealgraph {

// ---------------------------------------------------------------------------
// Structural predicates on ring specs
// ---------------------------------------------------------------------------

/// True iff the ideal lattice is a chain: exactly one block, Field or Chain.
/// Equivalent, for this catalog, to the intersection graph being complete.
bool predict_complete(const RingSpec& spec);

enum class TriangleFreeShape {
  empty,
  single_vertex,
  edge,
  star,
  two_isolated,
  has_triangle,
  other,  // only ever produced by observation; a disagreement if it appears
};
const char* to_string(TriangleFreeShape s);

/// Catalog prediction of the graph shape when triangle-free:
///   two fields -> two isolated vertices; single chain(.,2) -> single vertex;
///   single chain(.,3) -> edge; single vs(q,2) -> star; single field -> empty;
///   everything else contains a triangle.
TriangleFreeShape predict_triangle_free_shape(const RingSpec& spec);

/// Shape of the graph by direct inspection (never consults the catalog).
TriangleFreeShape observed_shape(const PropertyRecord& rec);

/// Exception families for the pendant/star and regularity rules.
bool is_two_fields(const RingSpec& spec);
/// A field plus a local block with exactly one nontrivial ideal (chain of
/// length 2). This is the structural reading of the excluded "field plus
/// local ring whose maximal ideal is minimal" family.
bool is_field_plus_minimal_local(const RingSpec& spec);

// ---------------------------------------------------------------------------
// Report entries: theorem-side prediction vs oracle-side observation
// ---------------------------------------------------------------------------

struct ReportEntry {
  std::string name;
  nlohmann::ordered_json predicted;
  nlohmann::ordered_json observed;
  bool agree = true;
  bool exempt = false;
  nlohmann::ordered_json witness;  // object or null
  std::string note;
};

struct ClassificationReport {
  std::string spec_text;
  std::vector<ReportEntry> entries;

  /// True when every non-exempt entry agrees.
  bool clean() const;
  const ReportEntry* find(const std::string& name) const;
};

ReportEntry check_complete(const IntersectionGraph& g, const PropertyRecord& rec);
ReportEntry check_regular_implies_complete(const IntersectionGraph& g, const PropertyRecord& rec);
ReportEntry check_triangle_free_shape(const IntersectionGraph& g, const PropertyRecord& rec);
ReportEntry check_pendant_implies_star(const IntersectionGraph& g, const PropertyRecord& rec);
/// Outside the exception families and for graphs with at least two vertices,
/// the four properties triangle-free / has-pendant / bipartite / star are
/// equivalent; this checks that all four observed flags coincide.
ReportEntry check_star_equivalence(const IntersectionGraph& g, const PropertyRecord& rec);

/// C4-free <=> no four nonzero independent ideals. Both sides computed
/// (independence search vs induced-cycle search) and compared.
ReportEntry c4_free_criterion(const IntersectionGraph& g);

/// For reduced rings and n >= 5: Cn-free <=> no n independent ideals.
ReportEntry cn_free_criterion_reduced(const IntersectionGraph& g, int n);

/// For reduced rings and n >= 2: an induced n-claw exists <=> there are n
/// independent ideals whose join is a proper ideal.
ReportEntry claw_criterion_reduced(const IntersectionGraph& g, int n);

/// True iff there is a cyclic permutation pi with sums[i] = {pi(i), pi(i+1)}.
/// For families of independent ideals this characterizes when the joins
/// b_i = join over sums[i] induce an n-cycle (n >= 4; for n = 3 only the
/// "if" direction holds and only that direction is cross-checked).
bool consecutive_pair_structure(const Ring& ring, const IndependentFamily& family,
                                const std::vector<std::vector<int>>& sums);

struct ClassifyOptions {
  int hamiltonian_oracle_cap = kDefaultHamiltonianOracleCap;
};

/// Runs every applicable entry, including the Hamiltonicity prediction
/// against the exhaustive oracle. Disagreements are first-class output;
/// entries that would exceed a cap are marked exempt with a note.
ClassificationReport classify_report(const IntersectionGraph& g, const ClassifyOptions& opts = {});

nlohmann::ordered_json report_json(const ClassificationReport& report);

}  // namespace idealgraph
