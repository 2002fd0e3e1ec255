// Acceptance suite: every criterion below runs against the full default
// corpus with its tolerances pinned in code, and prints one PASS/FAIL line.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "idealgraph/classify.hpp"
#include "idealgraph/hamcycle.hpp"
#include "idealgraph/sweep.hpp"

using namespace idealgraph;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool is_sole_vs_block(const RingSpec& spec) {
  return spec.blocks.size() == 1 && spec.blocks[0].kind == BlockKind::VSLocal;
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

// --- 1: triangle-free shapes over the default corpus, under one minute -----

bool triangle_free_classification(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  auto corpus = enumerate_corpus(SweepConfig{});
  int mismatches = 0;
  for (const auto& spec : corpus) {
    IntersectionGraph g{Ring(spec)};
    PropertyRecord rec = compute_properties(g);
    TriangleFreeShape predicted = predict_triangle_free_shape(spec);
    TriangleFreeShape observed = observed_shape(rec);
    bool catalog_shape = observed == TriangleFreeShape::empty ||
                         observed == TriangleFreeShape::single_vertex ||
                         observed == TriangleFreeShape::edge ||
                         observed == TriangleFreeShape::star ||
                         observed == TriangleFreeShape::two_isolated;
    if (rec.flags.is_triangle_free && !catalog_shape) ++mismatches;
    if (predicted != observed) ++mismatches;
    if ((predicted != TriangleFreeShape::has_triangle) != rec.flags.is_triangle_free)
      ++mismatches;
  }
  double elapsed = seconds_since(start);
  std::ostringstream s;
  s << corpus.size() << " specs, " << mismatches << " mismatches, " << elapsed << "s";
  detail = s.str();
  return mismatches == 0 && elapsed < 60.0;
}

// --- 2: C4-free <=> fewer than four independent ideals ----------------------

bool c4_criterion(std::string& detail) {
  auto corpus = enumerate_corpus(SweepConfig{});
  int disagreements = 0;
  for (const auto& spec : corpus) {
    IntersectionGraph g{Ring(spec)};
    if (!c4_free_criterion(g).agree) ++disagreements;
  }
  detail = std::to_string(corpus.size()) + " specs, " + std::to_string(disagreements) +
           " disagreements";
  return disagreements == 0;
}

// --- 3: reduced Cn and n-claw criteria over field products ------------------

bool reduced_criteria(std::string& detail) {
  SweepConfig fields_only;
  fields_only.block_budget = 6;
  fields_only.chain_k_max = 1;  // no chain blocks
  fields_only.vs_params.clear();
  int checked = 0, disagreements = 0;
  for (const auto& spec : enumerate_corpus(fields_only)) {
    if (spec.blocks.size() < 2) continue;  // products of 2..6 fields
    IntersectionGraph g{Ring(spec)};
    ++checked;
    for (int n : {5, 6})
      if (!cn_free_criterion_reduced(g, n).agree) ++disagreements;
    for (int n : {2, 3, 4})
      if (!claw_criterion_reduced(g, n).agree) ++disagreements;
  }
  detail = std::to_string(checked) + " field products, " + std::to_string(disagreements) +
           " disagreements";
  return checked > 0 && disagreements == 0;
}

// --- 4: regular=>complete and pendant=>star outside the exception families --

bool regularity_and_pendant(std::string& detail) {
  auto corpus = enumerate_corpus(SweepConfig{});
  int violations = 0, exempt_with_pendant = 0;
  for (const auto& spec : corpus) {
    IntersectionGraph g{Ring(spec)};
    PropertyRecord rec = compute_properties(g);
    bool exception = is_two_fields(spec) || is_field_plus_minimal_local(spec);
    if (!exception) {
      if (rec.flags.is_regular && !rec.flags.is_complete) ++violations;
      if (rec.flags.has_pendant && !rec.flags.is_star) ++violations;
    } else if (rec.flags.has_pendant) {
      ++exempt_with_pendant;
    }
    // entries must mark the exception families exempt
    if (exception != check_pendant_implies_star(g, rec).exempt) ++violations;
  }

  // Z12 in particular: exempt, with a pendant, and exactly the 4-vertex
  // 4-edge triangle-with-pendant.
  IntersectionGraph z12{Ring(parse_ring_spec("Z12"))};
  PropertyRecord rec12 = compute_properties(z12);
  std::vector<int> degs = rec12.degrees;
  std::sort(degs.begin(), degs.end());
  bool z12_ok = check_pendant_implies_star(z12, rec12).exempt && rec12.flags.has_pendant &&
                rec12.vertex_count == 4 && rec12.edge_count == 4 &&
                degs == std::vector<int>{1, 2, 2, 3} && !rec12.flags.is_triangle_free;
  if (!z12_ok) ++violations;

  detail = std::to_string(violations) + " violations; " +
           std::to_string(exempt_with_pendant) + " exempt specs with a pendant; Z12 " +
           (z12_ok ? "exempt-with-pendant" : "WRONG");
  return violations == 0 && exempt_with_pendant > 0;
}

// --- 5: construction vs oracle, with the open-question family reported ------

bool construction_vs_oracle(std::string& detail) {
  auto corpus = enumerate_corpus(SweepConfig{});
  int mismatches = 0;
  std::set<std::string> open_question_discrepancies;
  for (const auto& spec : corpus) {
    IntersectionGraph g{Ring(spec)};
    auto outcome = construct_hamiltonian(g);
    auto oracle = hamiltonian_oracle(g);
    bool constructed = outcome.status == ConstructionStatus::cycle;
    if (is_sole_vs_block(spec)) {
      // outside the exception list: the report must carry the discrepancy
      // whenever the oracle disagrees with the listed classification
      auto report = classify_report(g);
      const ReportEntry* ham = report.find("hamiltonian");
      if (!oracle.has_value()) {
        if (!ham || ham->agree || ham->exempt) ++mismatches;
        open_question_discrepancies.insert(spec.source_text);
      }
      continue;
    }
    if (constructed != oracle.has_value()) ++mismatches;
    if (constructed && !validate_cycle(g, *outcome.witness)) ++mismatches;
  }
  bool vs22_reported = open_question_discrepancies.count("vs(2,2)") > 0;
  std::ostringstream s;
  s << mismatches << " mismatches; open-question discrepancies:";
  for (const auto& t : open_question_discrepancies) s << " " << t;
  detail = s.str();
  return mismatches == 0 && vs22_reported;
}

// --- 6: constructive scaling ------------------------------------------------

bool constructive_scaling(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  IntersectionGraph g{Ring(parse_ring_spec("chain(2,11) x chain(2,11)"))};
  auto outcome = construct_hamiltonian(g, /*oracle_cap=*/0);  // no oracle available
  bool ok = outcome.status == ConstructionStatus::cycle && outcome.witness->length() == 142 &&
            validate_cycle(g, *outcome.witness);
  double elapsed = seconds_since(start);
  std::ostringstream s;
  s << "142-vertex grid cycle in " << elapsed << "s";
  detail = s.str();
  return ok && elapsed < 5.0;
}

// --- 7: pancyclicity --------------------------------------------------------

bool pancyclicity(std::string& detail) {
  auto corpus = enumerate_corpus(SweepConfig{});
  int hamiltonian_specs = 0, failures = 0;
  for (const auto& spec : corpus) {
    IntersectionGraph g{Ring(spec)};
    if (!hamiltonian_oracle(g).has_value()) continue;
    ++hamiltonian_specs;
    auto fam = pancyclic_family(g);
    if (!fam.gaps.empty()) ++failures;
    std::set<int> produced;
    for (const auto& [L, w] : fam.cycles) {
      produced.insert(L);
      if (w.length() != L || !validate_cycle(g, w)) ++failures;
    }
    std::set<int> expected;
    for (int L = 3; L <= g.vertex_count(); ++L) expected.insert(L);
    if (produced != expected) ++failures;
    if (produced != cycle_spectrum_oracle(g)) ++failures;
  }
  detail = std::to_string(hamiltonian_specs) + " Hamiltonian specs, " +
           std::to_string(failures) + " failures";
  return hamiltonian_specs > 0 && failures == 0;
}

// --- 8: known-answer fixtures -----------------------------------------------

bool known_answer_fixtures(std::string& detail) {
  int failures = 0;

  // Z12 edge set {2-3, 2-4, 2-6, 3-6} on the generators of dZ12
  {
    Ring ring(parse_ring_spec("Z12"));
    IntersectionGraph g{ring};
    auto coords_of = [&](long long d) {
      Ideal a;
      for (int b = 0; b < ring.block_count(); ++b) {
        const auto& bs = ring.block(b).spec();
        int k = bs.kind == BlockKind::Field ? 1 : bs.k;
        int v = 0;
        long long x = d;
        while (x % bs.q == 0 && v < k) { x /= bs.q; ++v; }
        a.coords.push_back(v);
      }
      return a;
    };
    std::set<std::pair<long long, long long>> expected = {{2, 3}, {2, 4}, {2, 6}, {3, 6}};
    std::set<std::pair<long long, long long>> got;
    std::vector<long long> gens = {2, 3, 4, 6};
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (g.adjacent(g.vertex_index(coords_of(gens[i])), g.vertex_index(coords_of(gens[j]))))
          got.insert({gens[i], gens[j]});
    if (got != expected) ++failures;
  }

  // Z_{p^k} is the complete graph on k-1 vertices, k <= 6
  for (long long p : {2, 3}) {
    long long pk = p;
    for (int k = 2; k <= 6; ++k) {
      pk *= p;
      IntersectionGraph g{Ring(parse_ring_spec("Z" + std::to_string(pk)))};
      PropertyRecord rec = compute_properties(g);
      if (g.vertex_count() != k - 1 || !rec.flags.is_complete) ++failures;
    }
  }

  // three fields: Hamiltonian via the explicit six-cycle, validated
  {
    IntersectionGraph g{Ring(parse_ring_spec("GF(2) x GF(3) x GF(5)"))};
    auto outcome = construct_hamiltonian(g);
    if (outcome.status != ConstructionStatus::cycle ||
        outcome.strategy != "three_fields_six_cycle" || outcome.witness->length() != 6 ||
        !validate_cycle(g, *outcome.witness))
      ++failures;
  }

  // two fields: two isolated vertices
  {
    IntersectionGraph g{Ring(parse_ring_spec("GF(2) x GF(3)"))};
    if (g.vertex_count() != 2 || g.edge_count() != 0) ++failures;
  }

  detail = std::to_string(failures) + " fixture failures";
  return failures == 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"triangle-free-classification", triangle_free_classification},
      {"c4-criterion", c4_criterion},
      {"reduced-cn-and-claw-criteria", reduced_criteria},
      {"regular-complete-and-pendant-star", regularity_and_pendant},
      {"hamiltonian-construction-vs-oracle", construction_vs_oracle},
      {"constructive-scaling", constructive_scaling},
      {"pancyclicity", pancyclicity},
      {"known-answer-fixtures", known_answer_fixtures},
  };

  int failed = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "acceptance: all criteria passed\n"
                            : "acceptance: " + std::to_string(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}
