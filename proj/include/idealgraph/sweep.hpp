#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "idealgraph/classify.hpp"
#include "idealgraph/rings.hpp"

namespace idealgraph {

/// Corpus knobs for the verification sweep. Enumerated specs are canonical
/// (blocks sorted by kind then parameters) and deduplicated by block multiset.
struct SweepConfig {
  int max_vertices = 14;
  int block_budget = 4;
  std::vector<int> q_values = {2, 3, 4, 5};
  int chain_k_max = 4;
  std::vector<std::pair<int, int>> vs_params = {{2, 2}, {3, 2}};
  int parallel = 0;  // 0 = one worker per hardware thread
  int hamiltonian_oracle_cap = kDefaultHamiltonianOracleCap;
};

/// All canonical specs within the budget, sorted by canonical text.
std::vector<RingSpec> enumerate_corpus(const SweepConfig& config);

struct EntryTally {
  int agree = 0;
  int disagree = 0;
  int exempt = 0;
};

struct Discrepancy {
  std::string spec;
  ReportEntry entry;
};

struct SweepResult {
  SweepConfig config;
  std::vector<ClassificationReport> reports;  // one per spec, corpus order
  std::map<std::string, EntryTally> per_entry;
  std::vector<Discrepancy> discrepancies;     // non-exempt disagreements
};

/// Classifies every corpus spec (worker pool over independent specs; the
/// aggregation order is the corpus order, so output is deterministic).
SweepResult run_sweep(const SweepConfig& config);

nlohmann::ordered_json sweep_json(const SweepResult& result, bool with_timestamp);
std::string sweep_text_summary(const SweepResult& result, bool with_timestamp);

}  // namespace idealgraph
