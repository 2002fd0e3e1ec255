#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "idealgraph/graph.hpp"
#include "test_models.hpp"

using namespace idealgraph;

namespace {

IntersectionGraph graph_of(const char* text) {
  return build_intersection_graph(Ring(parse_ring_spec(text)));
}

// Brute-force Hamiltonicity by full permutation enumeration; only for tiny V.
bool hamiltonian_by_permutations(const IntersectionGraph& g) {
  int V = g.vertex_count();
  if (V < 3) return false;
  std::vector<int> perm(V);
  for (int i = 0; i < V; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < V && ok; ++i) ok = g.adjacent(perm[i], perm[(i + 1) % V]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::set<std::pair<int, int>> edge_set(const IntersectionGraph& g) {
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) edges.insert({i, j});
  return edges;
}

}  // namespace

TEST_CASE("Z12 graph: exact edge set via the Zn model") {
  IntersectionGraph g = graph_of("Z12");
  REQUIRE(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);

  testmodel::ZnModel zn(12);
  auto vid = [&](long long d) { return g.vertex_index(zn.coords(g.ring(), d)); };
  // expected edges: generators with lcm != 12
  std::set<std::pair<int, int>> expected;
  std::vector<long long> gens = {2, 3, 4, 6};
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (std::lcm(gens[i], gens[j]) != 12) {
        int a = vid(gens[i]), b = vid(gens[j]);
        expected.insert({std::min(a, b), std::max(a, b)});
      }
  CHECK(expected == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}});
  CHECK(edge_set(g) == expected);

  std::vector<int> degs = g.degrees();
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{1, 2, 2, 3});
}

TEST_CASE("two fields give two isolated vertices; a chain gives a complete graph") {
  IntersectionGraph g2 = graph_of("GF(2) x GF(3)");
  CHECK(g2.vertex_count() == 2);
  CHECK(g2.edge_count() == 0);

  IntersectionGraph g16 = graph_of("Z16");
  CHECK(g16.vertex_count() == 3);
  CHECK(g16.edge_count() == 3);  // K3
}

TEST_CASE("adjacency is symmetric, irreflexive, and matches a meet recount") {
  for (const char* s : {"Z12", "Z4 x Z4", "vs(2,2)", "GF(2) x GF(3) x GF(5)", "GF(4) x Z8"}) {
    IntersectionGraph g = graph_of(s);
    const Ring& ring = g.ring();
    long long edges = 0;
    for (int i = 0; i < g.vertex_count(); ++i) {
      CHECK_FALSE(g.adjacent(i, i));
      for (int j = 0; j < g.vertex_count(); ++j) {
        CHECK(g.adjacent(i, j) == g.adjacent(j, i));
        bool expect = i != j && !ring.is_zero(ring.meet(g.vertex(i), g.vertex(j)));
        CHECK(g.adjacent(i, j) == expect);
        if (i < j && expect) ++edges;
      }
    }
    CHECK(edges == g.edge_count());
  }
}

TEST_CASE("compute_properties") {
  auto z12 = compute_properties(graph_of("Z12"));
  CHECK(z12.flags.has_pendant);
  CHECK_FALSE(z12.flags.is_star);
  CHECK(z12.pendant_vertices.size() == 1);

  auto vs = compute_properties(graph_of("vs(2,2)"));
  CHECK(vs.vertex_count == 4);
  CHECK(vs.flags.is_star);  // K_{1,3} with center m
  CHECK(vs.flags.is_triangle_free);
  CHECK(vs.flags.is_bipartite);

  auto z16 = compute_properties(graph_of("Z16"));
  CHECK(z16.flags.is_complete);
  CHECK(z16.flags.is_regular);
  CHECK_FALSE(z16.flags.is_triangle_free);

  // degenerate conventions
  auto empty = compute_properties(graph_of("GF(2)"));
  CHECK(empty.vertex_count == 0);
  CHECK(empty.flags.is_complete);
  CHECK(empty.flags.is_regular);
  CHECK(empty.flags.is_triangle_free);
  CHECK_FALSE(empty.flags.is_star);

  auto single = compute_properties(graph_of("Z4"));
  CHECK(single.vertex_count == 1);
  CHECK(single.flags.is_complete);
  CHECK_FALSE(single.flags.is_star);

  auto edge = compute_properties(graph_of("Z8"));
  CHECK(edge.vertex_count == 2);
  CHECK(edge.edge_count == 1);
  CHECK(edge.flags.is_star);  // K_{1,1}
  CHECK(edge.flags.has_pendant);
}

TEST_CASE("property invariants across the corpus") {
  for (const char* s : {"Z12", "Z16", "vs(2,2)", "vs(3,2)", "GF(2) x GF(3)", "Z4 x Z4",
                        "GF(2) x GF(3) x GF(5)", "Z8", "GF(5)"}) {
    auto rec = compute_properties(graph_of(s));
    if (rec.flags.is_complete) CHECK(rec.flags.is_regular);
    if (rec.flags.is_star && rec.vertex_count >= 3) {
      CHECK(rec.flags.is_triangle_free);
      CHECK(rec.flags.is_bipartite);
    }
  }
}

TEST_CASE("find_induced_cycle") {
  IntersectionGraph f4 = graph_of("GF(2) x GF(3) x GF(5) x GF(7)");
  auto c4 = find_induced_cycle(f4, 4);
  REQUIRE(c4.has_value());
  // both the adjacency and the non-adjacency conditions, re-checked directly
  const auto& seq = c4->vertex_indices;
  REQUIRE(seq.size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == 3);
      CHECK(f4.adjacent(seq[i], seq[j]) == consecutive);
    }

  CHECK_FALSE(find_induced_cycle(graph_of("Z12"), 4).has_value());
  CHECK_FALSE(find_induced_cycle(graph_of("Z16"), 4).has_value());
  CHECK_THROWS_AS(find_induced_cycle(f4, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_induced_cycle(f4, 9), CapExceeded);
}

TEST_CASE("find_induced_claw") {
  auto claw = find_induced_claw(graph_of("GF(2) x GF(3) x GF(5) x GF(7)"), 3);
  REQUIRE(claw.has_value());
  CHECK(claw->leaves.size() == 3);

  CHECK_FALSE(find_induced_claw(graph_of("GF(2) x GF(3) x GF(5)"), 3).has_value());
  CHECK(find_induced_claw(graph_of("GF(2) x GF(3) x GF(5)"), 2).has_value());

  IntersectionGraph vs = graph_of("vs(2,2)");
  auto star = find_induced_claw(vs, 3);
  REQUIRE(star.has_value());
  CHECK(vs.vertex_label(star->center) == "(m)");
}

TEST_CASE("hamiltonian_oracle") {
  CHECK_FALSE(hamiltonian_oracle(graph_of("Z12")).has_value());

  auto f3 = graph_of("GF(2) x GF(3) x GF(5)");
  auto w3 = hamiltonian_oracle(f3);
  REQUIRE(w3.has_value());
  CHECK(w3->length() == 6);
  CHECK(validate_cycle(f3, *w3));

  auto z44 = graph_of("Z4 x Z4");
  auto w44 = hamiltonian_oracle(z44);
  REQUIRE(w44.has_value());
  CHECK(w44->length() == 7);
  CHECK(validate_cycle(z44, *w44));

  CHECK_THROWS_AS(hamiltonian_oracle(graph_of("GF(2)x GF(3)x GF(5)x GF(7) x GF(2)")),
                  CapExceeded);  // 30 vertices > 16
}

TEST_CASE("hamiltonian_oracle agrees with permutation enumeration for V <= 8") {
  for (const char* s : {"Z12", "vs(2,2)", "GF(2) x GF(3)", "Z16", "Z4 x Z4", "Z4 x GF(2)",
                        "Z8 x GF(3)", "vs(3,2)"}) {
    IntersectionGraph g = graph_of(s);
    REQUIRE(g.vertex_count() <= 8);
    auto found = hamiltonian_oracle(g);
    CHECK(found.has_value() == hamiltonian_by_permutations(g));
    if (found) CHECK(validate_cycle(g, *found));
  }
}

TEST_CASE("cycle_spectrum_oracle") {
  CHECK(cycle_spectrum_oracle(graph_of("GF(2) x GF(3) x GF(5)")) == std::set<int>{3, 4, 5, 6});
  CHECK(cycle_spectrum_oracle(graph_of("Z12")) == std::set<int>{3});
  CHECK(cycle_spectrum_oracle(graph_of("GF(2)")).empty());
  CHECK(cycle_spectrum_oracle(graph_of("vs(3,2)")).empty());

  // spectrum contains V <=> the oracle finds a Hamiltonian cycle
  for (const char* s : {"Z12", "vs(2,2)", "Z16", "Z4 x Z4", "GF(2) x GF(3) x GF(5)"}) {
    IntersectionGraph g = graph_of(s);
    auto spectrum = cycle_spectrum_oracle(g);
    CHECK(spectrum.count(g.vertex_count()) == (hamiltonian_oracle(g).has_value() ? 1 : 0));
  }
}

TEST_CASE("validate_cycle") {
  IntersectionGraph f3 = graph_of("GF(2) x GF(3) x GF(5)");
  auto w = hamiltonian_oracle(f3);
  REQUIRE(w.has_value());
  CHECK(validate_cycle_detailed(f3, *w) == CycleCheck::ok);

  CHECK(validate_cycle_detailed(f3, CycleWitness{{0, 1}}) == CycleCheck::too_short);
  CHECK(validate_cycle_detailed(f3, CycleWitness{{0, 1, 1}}) == CycleCheck::repeated_vertex);
  CHECK(validate_cycle_detailed(f3, CycleWitness{{0, 1, 99}}) == CycleCheck::index_out_of_range);

  // a non-edge somewhere in the sequence
  IntersectionGraph z12 = graph_of("Z12");
  CHECK(validate_cycle_detailed(z12, CycleWitness{{0, 1, 3}}) == CycleCheck::missing_edge);
}

TEST_CASE("export_dot is deterministic and complete") {
  IntersectionGraph z12 = graph_of("Z12");
  std::string dot = export_dot(z12, DotLabels::ideal);
  CHECK(dot == export_dot(z12, DotLabels::ideal));
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 4 + 4);  // header/footer + nodes + edges
  CHECK(dot.find("(m^1, F)") != std::string::npos);

  std::string empty = export_dot(graph_of("GF(2)"), DotLabels::index);
  CHECK(empty == "graph ideals {\n}\n");

  std::string k3 = export_dot(graph_of("Z16"), DotLabels::index);
  CHECK(std::count(k3.begin(), k3.end(), '\n') == 2 + 3 + 3);
}

TEST_CASE("json serialization field names") {
  auto rec = compute_properties(graph_of("Z12"));
  auto j = property_record_json(rec);
  CHECK(j["vertex_count"] == 4);
  CHECK(j["edge_count"] == 4);
  CHECK(j["degrees"].size() == 4);
  CHECK(j["flags"]["has_pendant"] == true);

  auto cw = cycle_witness_json(CycleWitness{{0, 1, 2}});
  CHECK(cw["cycle"] == nlohmann::ordered_json({0, 1, 2}));
}
