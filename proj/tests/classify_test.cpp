#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "idealgraph/classify.hpp"
#include "idealgraph/hamcycle.hpp"
#include "test_models.hpp"

using namespace idealgraph;

namespace {

IntersectionGraph graph_of(const char* text) {
  return build_intersection_graph(Ring(parse_ring_spec(text)));
}

}  // namespace

TEST_CASE("predict_complete") {
  CHECK(predict_complete(parse_ring_spec("Z16")));
  CHECK(predict_complete(parse_ring_spec("GF(7)")));
  CHECK_FALSE(predict_complete(parse_ring_spec("vs(2,2)")));
  CHECK_FALSE(predict_complete(parse_ring_spec("GF(2) x GF(3)")));

  // the prediction matches the observed flag on a spread of specs
  for (const char* s : {"Z16", "GF(7)", "Z4", "vs(2,2)", "vs(3,2)", "GF(2) x GF(3)", "Z12",
                        "Z4 x Z4", "GF(2) x GF(3) x GF(5)", "Z64"}) {
    CAPTURE(s);
    IntersectionGraph g = graph_of(s);
    auto rec = compute_properties(g);
    CHECK(predict_complete(g.ring().spec()) == rec.flags.is_complete);
  }
}

TEST_CASE("check_regular_implies_complete") {
  auto entry_of = [](const char* s) {
    IntersectionGraph g = graph_of(s);
    return check_regular_implies_complete(g, compute_properties(g));
  };
  CHECK(entry_of("Z16").agree);           // regular and complete
  CHECK(entry_of("GF(2) x GF(3)").exempt);  // two fields
  CHECK(entry_of("Z12").agree);           // not regular, vacuous
}

TEST_CASE("predict_triangle_free_shape") {
  auto shape = [](const char* s) { return predict_triangle_free_shape(parse_ring_spec(s)); };
  CHECK(shape("GF(5) x GF(7)") == TriangleFreeShape::two_isolated);
  CHECK(shape("vs(3,2)") == TriangleFreeShape::star);
  CHECK(shape("Z8 x Z8") == TriangleFreeShape::has_triangle);
  CHECK(shape("GF(9)") == TriangleFreeShape::empty);
  CHECK(shape("Z4") == TriangleFreeShape::single_vertex);
  CHECK(shape("Z27") == TriangleFreeShape::edge);
  CHECK(shape("vs(2,3)") == TriangleFreeShape::has_triangle);

  // star leaf count for vs(3,2): 4 lines
  IntersectionGraph g = graph_of("vs(3,2)");
  auto rec = compute_properties(g);
  CHECK(rec.flags.is_star);
  CHECK(std::count(rec.degrees.begin(), rec.degrees.end(), 1) == 4);

  for (const char* s : {"GF(5) x GF(7)", "vs(3,2)", "Z8 x Z8", "GF(9)", "Z4", "Z27", "Z12",
                        "vs(2,2)", "GF(2) x GF(3) x GF(5)"}) {
    CAPTURE(s);
    IntersectionGraph gg = graph_of(s);
    auto e = check_triangle_free_shape(gg, compute_properties(gg));
    CHECK(e.agree);
  }
}

TEST_CASE("check_pendant_implies_star") {
  auto entry_of = [](const char* s) {
    IntersectionGraph g = graph_of(s);
    return check_pendant_implies_star(g, compute_properties(g));
  };
  auto z12 = entry_of("Z12");
  CHECK(z12.exempt);  // GF(3) x chain(2,2) is the excluded family
  CHECK(compute_properties(graph_of("Z12")).flags.has_pendant);

  auto vs = entry_of("vs(2,2)");
  CHECK_FALSE(vs.exempt);
  CHECK(vs.agree);  // pendant present and the graph is a star

  auto z16 = entry_of("Z16");
  CHECK(z16.agree);  // no pendant, vacuous
}

TEST_CASE("exception family detection is structural") {
  CHECK(is_two_fields(parse_ring_spec("GF(4) x GF(4)")));
  CHECK_FALSE(is_two_fields(parse_ring_spec("GF(2) x GF(3) x GF(5)")));
  CHECK(is_field_plus_minimal_local(parse_ring_spec("Z12")));
  CHECK(is_field_plus_minimal_local(parse_ring_spec("Z4 x GF(7)")));
  CHECK_FALSE(is_field_plus_minimal_local(parse_ring_spec("Z8 x GF(2)")));
  CHECK_FALSE(is_field_plus_minimal_local(parse_ring_spec("vs(2,2) x GF(2)")));
}

TEST_CASE("c4_free_criterion") {
  auto e3 = c4_free_criterion(graph_of("GF(2) x GF(3) x GF(5)"));
  CHECK(e3.predicted == true);   // t = 3 < 4: predicted C4-free
  CHECK(e3.observed == true);
  CHECK(e3.agree);

  auto e4 = c4_free_criterion(graph_of("GF(2) x GF(3) x GF(5) x GF(7)"));
  CHECK(e4.predicted == false);
  CHECK(e4.observed == false);
  CHECK(e4.agree);
  CHECK(e4.witness["independent_family"].size() == 4);
  CHECK(e4.witness["induced_cycle"].size() == 4);

  CHECK(c4_free_criterion(graph_of("Z12")).agree);
}

TEST_CASE("cn_free_criterion_reduced") {
  // five fields: induced C5 exists and five independent ideals exist
  auto e5 = cn_free_criterion_reduced(graph_of("GF(2) x GF(2) x GF(2) x GF(2) x GF(2)"), 5);
  CHECK(e5.predicted == false);
  CHECK(e5.observed == false);
  CHECK(e5.agree);

  auto e45 = cn_free_criterion_reduced(graph_of("GF(2) x GF(3) x GF(5) x GF(7)"), 5);
  CHECK(e45.predicted == true);
  CHECK(e45.observed == true);
  CHECK(e45.agree);

  CHECK_THROWS_AS(cn_free_criterion_reduced(graph_of("Z8 x GF(2)"), 5), std::invalid_argument);
  CHECK_THROWS_AS(cn_free_criterion_reduced(graph_of("GF(2) x GF(3)"), 4), std::invalid_argument);
}

TEST_CASE("cn criterion up to n = 7 on larger field products") {
  auto five = graph_of("GF(2) x GF(2) x GF(2) x GF(2) x GF(2)");
  auto e56 = cn_free_criterion_reduced(five, 6);
  CHECK(e56.predicted == true);  // only five independent ideals exist
  CHECK(e56.agree);

  auto six = graph_of("GF(2) x GF(2) x GF(2) x GF(2) x GF(2) x GF(2)");  // 62 vertices
  auto e66 = cn_free_criterion_reduced(six, 6);
  CHECK(e66.predicted == false);
  CHECK(e66.agree);
  auto e67 = cn_free_criterion_reduced(six, 7);
  CHECK(e67.predicted == true);
  CHECK(e67.agree);
}

TEST_CASE("claw_criterion_reduced") {
  auto four_fields = graph_of("GF(2) x GF(3) x GF(5) x GF(7)");
  auto e43 = claw_criterion_reduced(four_fields, 3);
  CHECK(e43.predicted == true);
  CHECK(e43.observed == true);
  CHECK(e43.agree);

  auto three_fields = graph_of("GF(2) x GF(3) x GF(5)");
  auto e33 = claw_criterion_reduced(three_fields, 3);
  CHECK(e33.predicted == false);
  CHECK(e33.observed == false);
  CHECK(e33.agree);

  auto e32 = claw_criterion_reduced(three_fields, 2);
  CHECK(e32.predicted == true);
  CHECK(e32.observed == true);
  CHECK(e32.agree);

  CHECK_THROWS_AS(claw_criterion_reduced(graph_of("Z12"), 3), std::invalid_argument);
}

TEST_CASE("consecutive_pair_structure") {
  Ring r = Ring(parse_ring_spec("GF(2) x GF(3) x GF(5) x GF(7)"));
  // the four field axes
  IndependentFamily axes;
  for (int b = 0; b < 4; ++b) {
    Ideal a = r.zero();
    a.coords[b] = 0;  // full coordinate in block b
    axes.members.push_back(a);
  }
  REQUIRE(is_independent_family(r, axes.members));

  CHECK(consecutive_pair_structure(r, axes, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK_FALSE(consecutive_pair_structure(r, axes, {{0, 1, 2}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK_FALSE(consecutive_pair_structure(r, axes, {{0, 1}, {2, 3}, {1, 2}, {3, 0}}));

  // permuted pairing still traces a cycle
  CHECK(consecutive_pair_structure(r, axes, {{2, 0}, {0, 3}, {3, 1}, {1, 2}}));

  // n = 3
  Ring r3 = Ring(parse_ring_spec("GF(2) x GF(3) x GF(5)"));
  IndependentFamily axes3;
  for (int b = 0; b < 3; ++b) {
    Ideal a = r3.zero();
    a.coords[b] = 0;
    axes3.members.push_back(a);
  }
  CHECK(consecutive_pair_structure(r3, axes3, {{0, 1}, {1, 2}, {2, 0}}));
  // sums of the wrong arity never satisfy the pairing, whatever the graph does
  CHECK_FALSE(consecutive_pair_structure(r3, axes3, {{0, 1, 2}, {1, 2}, {2, 0}}));

  CHECK_THROWS_AS(consecutive_pair_structure(r3, axes3, {{0, 1}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(consecutive_pair_structure(r3, axes3, {{0, 1}, {1, 2}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(consecutive_pair_structure(r3, axes3, {{0, 1}, {1, 2}, {2, 9}}),
                  std::invalid_argument);
}

TEST_CASE("consecutive_pair_structure is invariant under family relabeling") {
  Ring r = Ring(parse_ring_spec("GF(2) x GF(3) x GF(5) x GF(7)"));
  std::vector<int> perm = {0, 1, 2, 3};
  std::vector<std::vector<int>> sums = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  do {
    IndependentFamily fam;
    for (int b : perm) {
      Ideal a = r.zero();
      a.coords[b] = 0;
      fam.members.push_back(a);
    }
    // relabel the index sets through the inverse permutation
    std::vector<int> inv(4);
    for (int i = 0; i < 4; ++i) inv[perm[i]] = i;
    std::vector<std::vector<int>> mapped;
    for (const auto& s : sums) mapped.push_back({inv[s[0]], inv[s[1]]});
    CHECK(consecutive_pair_structure(r, fam, mapped));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("classify_report: Z12") {
  auto report = classify_report(graph_of("Z12"));
  CHECK(report.clean());

  const ReportEntry* shape = report.find("triangle_free_shape");
  REQUIRE(shape);
  CHECK(shape->observed == "has_triangle");

  const ReportEntry* pendant = report.find("pendant_implies_star");
  REQUIRE(pendant);
  CHECK(pendant->exempt);

  const ReportEntry* ham = report.find("hamiltonian");
  REQUIRE(ham);
  CHECK(ham->predicted == false);
  CHECK(ham->observed == false);
  CHECK(ham->agree);
  CHECK(ham->note.find("(2)") != std::string::npos);
}

TEST_CASE("classify_report: two fields all agree") {
  auto report = classify_report(graph_of("GF(2) x GF(3)"));
  CHECK(report.clean());
  CHECK(report.find("triangle_free_shape")->observed == "two_isolated");
  CHECK(report.find("regular_implies_complete")->exempt);
  CHECK(report.find("hamiltonian")->agree);
}

TEST_CASE("classify_report: vs(2,2) carries the open-question discrepancy") {
  auto report = classify_report(graph_of("vs(2,2)"));
  CHECK_FALSE(report.clean());
  const ReportEntry* ham = report.find("hamiltonian");
  REQUIRE(ham);
  CHECK(ham->predicted == "open_question");
  CHECK(ham->observed == false);
  CHECK_FALSE(ham->agree);
  CHECK(ham->note.find("oracle is ground truth") != std::string::npos);
  // everything else agrees
  for (const auto& e : report.entries)
    if (e.name != "hamiltonian") CHECK((e.exempt || e.agree));
}

TEST_CASE("report JSON follows the published schema") {
  auto report = classify_report(graph_of("Z12"));
  auto j = report_json(report);
  CHECK(j["spec"] == "Z12");
  REQUIRE(j["entries"].is_array());
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("name"));
    CHECK(e.contains("predicted"));
    CHECK(e.contains("observed"));
    CHECK(e.contains("agree"));
    CHECK(e.contains("exempt"));
    CHECK(e.contains("witness"));
    CHECK(e.contains("note"));
  }
}
