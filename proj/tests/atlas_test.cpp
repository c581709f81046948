#include <fstream>
#include <set>
#include <sstream>

#include "cyclebench/atlas.hpp"
#include "cyclebench/structure.hpp"
#include "doctest.h"

using namespace cyc;

namespace {

// runs the cheap claims bundled with a named graph
void check_claims(const NamedGraph& named) {
  EngineOptions opts;
  for (const Claim& claim : named.claims) {
    INFO(named.name, ": ", claim.name);
    ClaimResult res = claim.run(opts);
    INFO(res.detail);
    CHECK(res.pass);
  }
}

}  // namespace

TEST_CASE("h7 claims") { check_claims(h7_named()); }
TEST_CASE("h15 claims") { check_claims(h15_named()); }
TEST_CASE("petersen claims") { check_claims(petersen()); }
TEST_CASE("icosahedron claims") { check_claims(icosahedron()); }
TEST_CASE("c60 claims") { check_claims(c60()); }
TEST_CASE("tutte-coxeter claims") { check_claims(tutte_coxeter()); }
TEST_CASE("g12 claims") { check_claims(g12()); }
TEST_CASE("markstrom24 claims") { check_claims(markstrom24()); }

TEST_CASE("truncating k4 gives the truncated tetrahedron") {
  NamedGraph trunc = truncate(tetrahedron(), "truncated-tetrahedron");
  CHECK(trunc.graph.vertex_count() == 12);
  CHECK(trunc.graph.is_regular(3));
  auto lengths = face_lengths(trace_faces(trunc.graph, *trunc.rotation));
  std::vector<int> expected(4, 3);
  expected.insert(expected.end(), 4, 6);
  CHECK(lengths == expected);
}

TEST_CASE("c60 structural identities") {
  NamedGraph bucky = c60();
  CHECK(bucky.graph.vertex_count() == 60);
  CHECK(bucky.graph.edge_count() == 90);
  CHECK(is_connected(bucky.graph));
  int doubles = 0;
  for (const auto& [e, cls] : bucky.edge_classes)
    if (cls == "double") ++doubles;
  CHECK(doubles == 30);
  // u-edges for the g420 plan: every vertex has its unique double bond
  for (int v = 0; v < 60; ++v) CHECK(bucky.graph.has_edge(v, bucky.class_neighbor(v, "double")));
}

TEST_CASE("g420 cheap structural claims") {
  NamedGraph g = g420();
  CHECK(g.graph.vertex_count() == 420);
  CHECK(g.graph.edge_count() == 630);
  CHECK(g.graph.is_regular(3));
  CHECK(is_connected(g.graph));
  REQUIRE(g.rotation.has_value());
  CHECK(genus(g.graph, *g.rotation) == 0);
}

TEST_CASE("g78 construction") {
  NamedGraph g = g78();
  CHECK(g.graph.vertex_count() == 78);
  CHECK(g.graph.is_regular(3));
  CHECK(is_connected(g.graph));
  // the shipped assignment puts u-edges on real edges of the base
  auto assignment = g78_shipped_assignment();
  Graph base = g12_figure().graph;
  for (int x = 0; x < 12; ++x) {
    if (assignment[x] < 0) continue;
    CHECK(base.has_edge(x, assignment[x]));
  }
}

TEST_CASE("g450 construction") {
  NamedGraph g = g450();
  CHECK(g.graph.vertex_count() == 450);
  CHECK(g.graph.edge_count() == 675);
  CHECK(g.graph.is_regular(3));
  CHECK(is_connected(g.graph));
}

TEST_CASE("atlas names build, all connected and cubic (icosahedron 5-regular)") {
  for (const std::string& name : atlas_names()) {
    NamedGraph named = build_named(name);
    CHECK(named.name == name);
    CHECK(named.graph.vertex_count() > 0);
    CHECK(is_connected(named.graph));
    if (name == "icosahedron")
      CHECK(named.graph.is_regular(5));
    else if (name == "h7" || name == "h15")
      CHECK(named.graph.degree_sequence().front() == 2);
    else
      CHECK(named.graph.is_regular(3));
  }
  CHECK_THROWS_AS(build_named("nosuch"), std::out_of_range);
}

TEST_CASE("c60 short cycle existence") {
  Graph bucky = c60().graph;
  CHECK(has_cycle_of_length(bucky, 5));
  CHECK(has_cycle_of_length(bucky, 6));
  CHECK_FALSE(has_cycle_of_length(bucky, 7));
  CHECK_FALSE(has_cycle_of_length(bucky, 8));
}

TEST_CASE("shipped plan files rebuild the shipped graphs") {
  auto read = [](const std::string& path) {
    std::ifstream file(path);
    REQUIRE(file.good());
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  };
  for (const char* name : {"g78", "markstrom24", "g450"}) {
    NamedGraph named = build_named(name);
    REQUIRE(named.plan.has_value());
    std::string text = read(std::string(CYCLEBENCH_DATA) + "/" + name + ".plan");
    CHECK(text == encode_plan(*named.plan));
    InflationPlan parsed = parse_plan(named.plan->base, text);
    CHECK(inflate(parsed).graph.edges() == named.graph.edges());
  }
}

TEST_CASE("tutte-coxeter chord structure") {
  NamedGraph tc = tutte_coxeter();
  std::set<int> spans;
  for (const auto& [e, cls] : tc.edge_classes) {
    if (cls != "chord") continue;
    int d = std::abs(e.second - e.first);
    spans.insert(std::min(d, 30 - d));
  }
  CHECK(spans == std::set<int>{7, 9, 13});
}
