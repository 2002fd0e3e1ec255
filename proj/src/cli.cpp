#include "idealgraph/cli.hpp"

#include <cstdlib>
#include <ostream>

#include "idealgraph/classify.hpp"
#include "idealgraph/graph.hpp"
#include "idealgraph/hamcycle.hpp"

namespace idealgraph::cli {

int resolve_oracle_cap(std::optional<int> flag_value) {
  if (flag_value) return *flag_value;
  if (const char* env = std::getenv("IDEALGRAPH_ORACLE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return kDefaultHamiltonianOracleCap;
}

namespace {

std::optional<IntersectionGraph> build_or_report(const std::string& spec_text,
                                                 std::ostream& err) {
  try {
    return IntersectionGraph{Ring(parse_ring_spec(spec_text))};
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return std::nullopt;
  }
}

void print_cycle(const IntersectionGraph& g, const CycleWitness& w, std::ostream& out) {
  for (int i = 0; i < w.length(); ++i) {
    if (i) out << " -- ";
    out << g.vertex_label(w.vertex_indices[i]);
  }
  out << "\n";
}

}  // namespace

int cmd_classify(const std::string& spec_text, const std::string& format, int oracle_cap,
                 std::ostream& out, std::ostream& err) {
  auto g = build_or_report(spec_text, err);
  if (!g) return kExitUsage;

  ClassifyOptions opts;
  opts.hamiltonian_oracle_cap = oracle_cap;
  ClassificationReport report = classify_report(*g, opts);

  if (format == "json") {
    out << report_json(report).dump(2) << "\n";
  } else if (format == "text") {
    out << "spec: " << report.spec_text << "  [" << g->ring().spec().canonical_text() << "]\n";
    out << "vertices: " << g->vertex_count() << ", edges: " << g->edge_count() << "\n";
    for (const auto& e : report.entries) {
      out << "  " << e.name;
      for (std::size_t pad = e.name.size(); pad < 26; ++pad) out << ' ';
      if (e.exempt) {
        out << "exempt";
      } else {
        out << "predicted=" << e.predicted.dump() << " observed=" << e.observed.dump()
            << (e.agree ? "  agree" : "  DISAGREE");
      }
      if (!e.note.empty()) out << "  [" << e.note << "]";
      out << "\n";
    }
    out << (report.clean() ? "result: all non-exempt checks agree\n"
                           : "result: disagreements present\n");
  } else {
    err << "error: unknown format '" << format << "'\n";
    return kExitUsage;
  }
  return report.clean() ? kExitOk : kExitDisagreement;
}

int cmd_graph(const std::string& spec_text, bool as_json, std::ostream& out, std::ostream& err) {
  auto g = build_or_report(spec_text, err);
  if (!g) return kExitUsage;
  if (!as_json) {
    out << export_dot(*g, DotLabels::ideal);
    return kExitOk;
  }
  nlohmann::ordered_json j;
  j["spec"] = spec_text;
  j["canonical"] = g->ring().spec().canonical_text();
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (int v = 0; v < g->vertex_count(); ++v) vertices.push_back(g->vertex_label(v));
  j["vertices"] = vertices;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (int i = 0; i < g->vertex_count(); ++i)
    for (int k = i + 1; k < g->vertex_count(); ++k)
      if (g->adjacent(i, k)) edges.push_back(nlohmann::ordered_json::array({i, k}));
  j["edges"] = edges;
  j["properties"] = property_record_json(compute_properties(*g));
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_hamiltonian(const std::string& spec_text, int oracle_cap, std::ostream& out,
                    std::ostream& err) {
  auto g = build_or_report(spec_text, err);
  if (!g) return kExitUsage;
  ConstructionOutcome outcome;
  try {
    outcome = construct_hamiltonian(*g, oracle_cap);
  } catch (const CapExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  out << "spec: " << spec_text << "\n";
  out << "strategy: " << outcome.strategy << "\n";
  if (!outcome.note.empty()) out << "note: " << outcome.note << "\n";
  if (outcome.status != ConstructionStatus::cycle) {
    out << "status: " << to_string(outcome.status) << "\n";
    return kExitNotHamiltonian;
  }
  out << "cycle (length " << outcome.witness->length() << "): ";
  print_cycle(*g, *outcome.witness, out);
  out << "validated: " << (validate_cycle(*g, *outcome.witness) ? "yes" : "NO") << "\n";
  return kExitOk;
}

int cmd_pancyclic(const std::string& spec_text, int oracle_cap, std::ostream& out,
                  std::ostream& err) {
  auto g = build_or_report(spec_text, err);
  if (!g) return kExitUsage;
  PancyclicResult fam;
  try {
    fam = pancyclic_family(*g, oracle_cap);
  } catch (const std::invalid_argument& ex) {
    out << "spec: " << spec_text << "\n";
    out << "not pancyclic: " << ex.what() << "\n";
    return kExitNotHamiltonian;
  } catch (const CapExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  out << "spec: " << spec_text << "\n";
  for (const auto& [L, w] : fam.cycles) {
    out << "length " << L << ": ";
    print_cycle(*g, w, out);
  }
  if (!fam.gaps.empty()) {
    out << "gaps:";
    for (int L : fam.gaps) out << " " << L;
    out << "\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_sweep(const SweepConfig& config, const std::string& format, bool with_timestamp,
              std::ostream& out, std::ostream& err) {
  if (format != "text" && format != "json") {
    err << "error: unknown format '" << format << "'\n";
    return kExitUsage;
  }
  SweepResult result = run_sweep(config);
  if (format == "json")
    out << sweep_json(result, with_timestamp).dump(2) << "\n";
  else
    out << sweep_text_summary(result, with_timestamp);
  return kExitOk;
}

}  // namespace idealgraph::cli
