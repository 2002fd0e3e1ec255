#include "idealgraph/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <sstream>
#include <thread>

#include "idealgraph/graph.hpp"

namespace idealgraph {

namespace {

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<BlockSpec> block_universe(const SweepConfig& config) {
  std::vector<BlockSpec> universe;
  for (int q : config.q_values) universe.push_back({BlockKind::Field, q, 1, 0});
  for (int q : config.q_values)
    for (int k = 2; k <= config.chain_k_max; ++k)
      universe.push_back({BlockKind::Chain, q, k, 0});
  for (auto [q, d] : config.vs_params) {
    if (!is_prime_int(q) || d < 2) continue;
    universe.push_back({BlockKind::VSLocal, q, 0, d});
  }
  std::sort(universe.begin(), universe.end(), block_less);
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  return universe;
}

}  // namespace

std::vector<RingSpec> enumerate_corpus(const SweepConfig& config) {
  auto universe = block_universe(config);
  std::vector<RingSpec> corpus;
  std::vector<BlockSpec> current;

  auto emit = [&] {
    RingSpec spec;
    spec.blocks = current;
    if (spec.nontrivial_ideal_count() > config.max_vertices) return;
    spec.source_text = spec.canonical_text();
    corpus.push_back(std::move(spec));
  };
  // multisets over the sorted universe: nondecreasing index sequences
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!current.empty()) emit();
    if (static_cast<int>(current.size()) == config.block_budget) return;
    for (std::size_t i = start; i < universe.size(); ++i) {
      // prune: ideal counts only grow with more blocks
      long long count = universe[i].ideal_count();
      for (const auto& b : current) count *= b.ideal_count();
      if (count - 2 > config.max_vertices) continue;
      current.push_back(universe[i]);
      self(self, i);
      current.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(corpus.begin(), corpus.end(),
            [](const RingSpec& a, const RingSpec& b) { return a.source_text < b.source_text; });
  return corpus;
}

SweepResult run_sweep(const SweepConfig& config) {
  SweepResult result;
  result.config = config;
  auto corpus = enumerate_corpus(config);
  result.reports.resize(corpus.size());

  int workers = config.parallel;
  if (workers <= 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<int>(workers, static_cast<int>(corpus.size()) > 0 ? corpus.size() : 1);

  ClassifyOptions opts;
  opts.hamiltonian_oracle_cap = config.hamiltonian_oracle_cap;

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      IntersectionGraph g{Ring(corpus[i])};
      result.reports[i] = classify_report(g, opts);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (const auto& report : result.reports) {
    for (const auto& entry : report.entries) {
      EntryTally& tally = result.per_entry[entry.name];
      if (entry.exempt)
        ++tally.exempt;
      else if (entry.agree)
        ++tally.agree;
      else {
        ++tally.disagree;
        result.discrepancies.push_back({report.spec_text, entry});
      }
    }
  }
  return result;
}

namespace {

std::string timestamp_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

nlohmann::ordered_json config_json(const SweepConfig& c) {
  nlohmann::ordered_json j;
  j["max_vertices"] = c.max_vertices;
  j["block_budget"] = c.block_budget;
  j["q_values"] = c.q_values;
  j["chain_k_max"] = c.chain_k_max;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (auto [q, d] : c.vs_params) vs.push_back(nlohmann::ordered_json::array({q, d}));
  j["vs_params"] = vs;
  j["hamiltonian_oracle_cap"] = c.hamiltonian_oracle_cap;
  return j;
}

}  // namespace

nlohmann::ordered_json sweep_json(const SweepResult& result, bool with_timestamp) {
  nlohmann::ordered_json j;
  if (with_timestamp) j["generated_at"] = timestamp_now();
  j["config"] = config_json(result.config);
  j["spec_count"] = result.reports.size();
  nlohmann::ordered_json tallies = nlohmann::ordered_json::object();
  for (const auto& [name, tally] : result.per_entry) {
    tallies[name] = {{"agree", tally.agree},
                     {"disagree", tally.disagree},
                     {"exempt", tally.exempt}};
  }
  j["per_entry"] = tallies;
  nlohmann::ordered_json disc = nlohmann::ordered_json::array();
  for (const auto& d : result.discrepancies) {
    nlohmann::ordered_json e;
    e["spec"] = d.spec;
    e["entry"] = d.entry.name;
    e["predicted"] = d.entry.predicted;
    e["observed"] = d.entry.observed;
    e["witness"] = d.entry.witness;
    e["note"] = d.entry.note;
    disc.push_back(std::move(e));
  }
  j["discrepancies"] = disc;
  return j;
}

std::string sweep_text_summary(const SweepResult& result, bool with_timestamp) {
  std::ostringstream out;
  if (with_timestamp) out << "generated at " << timestamp_now() << "\n";
  out << "specs classified: " << result.reports.size() << "\n";
  out << "entry                        agree  disagree  exempt\n";
  for (const auto& [name, tally] : result.per_entry) {
    out << "  " << name;
    for (std::size_t pad = name.size(); pad < 27; ++pad) out << ' ';
    out << tally.agree << "  " << tally.disagree << "  " << tally.exempt << "\n";
  }
  if (result.discrepancies.empty()) {
    out << "no discrepancies\n";
  } else {
    out << "discrepancies (" << result.discrepancies.size() << "):\n";
    for (const auto& d : result.discrepancies) {
      out << "  " << d.spec << " / " << d.entry.name << ": predicted "
          << d.entry.predicted.dump() << ", observed " << d.entry.observed.dump();
      if (!d.entry.note.empty()) out << "  [" << d.entry.note << "]";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace idealgraph
