#include "coverlab/constructions.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/params.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace coverlab;

namespace {

std::vector<std::size_t> layer_sizes(const std::vector<std::vector<int>>& layers) {
  std::vector<std::size_t> out;
  for (const auto& l : layers) out.push_back(l.size());
  return out;
}

Graph strip(const CoverGraph& g) { return g.graph(); }

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return {10, e};
}

}  // namespace

TEST_CASE("hexagon is a (3,2,1)-cover") {
  const CoverReport rep = verify_cover(hexagon());
  CHECK(rep.is_cover);
  CHECK(rep.n == 3);
  CHECK(rep.r == 2);
  CHECK(rep.mu == 1);
  CHECK(rep.lambda == 0);
  CHECK(rep.diameter == 3);
  CHECK(rep.antipodality_confirmed);
  CHECK(rep.failures.empty());
}

TEST_CASE("cube is a (4,2,2)-cover with lambda 0") {
  const CoverReport rep = verify_cover(cube());
  CHECK(rep.is_cover);
  CHECK(rep.n == 4);
  CHECK(rep.mu == 2);
  CHECK(rep.lambda == 0);
}

TEST_CASE("icosahedron and Thas-Somma q=3 covers") {
  const CoverReport ico = verify_cover(icosahedron());
  CHECK(ico.is_cover);
  CHECK(ico.n == 6);
  CHECK(ico.mu == 2);
  CHECK(ico.lambda == 2);
  const CoverReport ts = verify_cover(thas_somma(3, 1));
  CHECK(ts.is_cover);
  CHECK(ts.n == 9);
  CHECK(ts.r == 3);
  CHECK(ts.mu == 3);
  CHECK(ts.lambda == 1);
}

TEST_CASE("6-cycle with an edge deleted fails the matching axiom between two named fibres") {
  const CoverGraph g = hexagon().with_edge_toggled(0, 1);
  const CoverReport rep = verify_cover(g);
  CHECK_FALSE(rep.is_cover);
  REQUIRE(!rep.failures.empty());
  bool matching = false;
  for (const auto& f : rep.failures) {
    if (f.axiom != Axiom::kPerfectMatching) continue;
    matching = true;
    REQUIRE(f.witness.size() == 3);
    CHECK(std::min(f.witness[0], f.witness[1]) == 0);
    CHECK(std::max(f.witness[0], f.witness[1]) == 1);
  }
  CHECK(matching);
}

TEST_CASE("mutation: every single-edge toggle of hexagon and cube breaks the cover") {
  for (const CoverGraph& base : {hexagon(), cube()}) {
    const int v = base.vertex_count();
    int toggles = 0;
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) {
        const CoverReport rep = verify_cover(base.with_edge_toggled(a, b));
        CHECK_FALSE(rep.is_cover);
        CHECK_FALSE(rep.failures.empty());
        ++toggles;
      }
    }
    CHECK(toggles == v * (v - 1) / 2);
  }
}

TEST_CASE("violation cap truncates but totals are kept") {
  const CoverGraph g = thas_somma(3, 1).with_edge_toggled(0, 1);
  VerifyOptions opts;
  opts.max_violations_per_axiom = 1;
  const CoverReport rep = verify_cover(g, opts);
  CHECK_FALSE(rep.is_cover);
  std::map<Axiom, std::size_t> shown;
  for (const auto& f : rep.failures) ++shown[f.axiom];
  for (const auto& [axiom, count] : shown) CHECK(count <= 1);
  for (const auto& [axiom, total] : rep.violation_totals) CHECK(total >= shown[axiom]);
}

TEST_CASE("structural errors are distinct from axiom failures") {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 0}}), StructuralError);
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 3}}), StructuralError);
  CHECK_THROWS_AS(CoverGraph(Graph(6, e), {{0, 1}, {2, 3}}), StructuralError);
  CHECK_THROWS_AS(CoverGraph(Graph(6, e), {{0, 1}, {2, 3}, {4}, {5}}), StructuralError);
  CHECK_THROWS_AS(CoverGraph(Graph(4, e), {{0, 1}, {2, 3}}), StructuralError);
  CHECK_THROWS_AS(CoverGraph(Graph(6, e), {{0, 1}, {1, 2}, {4, 5}}), StructuralError);
}

TEST_CASE("fibres are canonicalized") {
  const CoverGraph h = hexagon();
  const CoverGraph shuffled(h.graph(), {{5, 2}, {3, 0}, {4, 1}});
  CHECK(shuffled.fibres() == std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(shuffled == h);
}

TEST_CASE("distance_classes") {
  CHECK(layer_sizes(distance_classes(hexagon(), 0)) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(layer_sizes(distance_classes(cube(), 0)) == std::vector<std::size_t>{1, 3, 3, 1});
  const CoverGraph ts = thas_somma(3, 1);
  for (int v = 0; v < ts.vertex_count(); ++v) {
    CHECK(layer_sizes(distance_classes(ts, v)) == std::vector<std::size_t>{1, 8, 16, 2});
  }
  const Graph two_components(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(distance_classes(two_components, 0), std::invalid_argument);
  CHECK_THROWS(distance_classes(CoverGraph(petersen(), {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}), 0));
}

TEST_CASE("every cover vertex has degree n-1 and r-1 antipodes") {
  for (const CoverGraph& g : {hexagon(), cube(), icosahedron(), thas_somma(3, 1), thas_somma(2, 2)}) {
    const int n = g.fibre_count();
    const int r = g.fibre_size();
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.graph().degree(v) == n - 1);
      CHECK(static_cast<int>(distance_classes(g, v)[3].size()) == r - 1);
    }
  }
}

TEST_CASE("antipodal_classes") {
  CHECK(antipodal_classes(strip(hexagon())) == std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(antipodal_classes(strip(cube())) == std::vector<std::vector<int>>{{0, 7}, {1, 6}, {2, 5}, {3, 4}});
  CHECK_THROWS_AS(antipodal_classes(petersen()), NotAntipodalError);
  // Diameter 3, but 0 and 4 are both at distance 3 from 3 while d(0, 4) = 2.
  const Graph tree(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  try {
    antipodal_classes(tree);
    FAIL("expected NotAntipodalError");
  } catch (const NotAntipodalError& e) {
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("verified covers recover their fibres from distances") {
  for (const CoverGraph& g : {hexagon(), cube(), icosahedron(), thas_somma(3, 1), thas_somma(2, 2), thas_somma(4, 1)}) {
    REQUIRE(verify_cover(g).is_cover);
    CHECK(antipodal_classes(g.graph()) == g.fibres());
  }
}

TEST_CASE("spectrum_check") {
  CHECK(spectrum_check(hexagon(), derive_params(3, 2, 1)).ok);
  CHECK(spectrum_check(cube(), derive_params(4, 2, 2)).ok);
  CHECK(spectrum_check(icosahedron(), derive_params(6, 2, 2)).ok);
  CHECK(spectrum_check(thas_somma(3, 1), derive_params(9, 3, 3)).ok);
  CHECK(spectrum_check(thas_somma(4, 1), derive_params(16, 4, 4)).ok);
  const SpectrumCheck wrong = spectrum_check(cube(), derive_params(3, 2, 1));
  CHECK_FALSE(wrong.ok);
  CHECK_FALSE(wrong.failures.empty());
  CHECK_FALSE(spectrum_check(icosahedron(), derive_params(6, 2, 1)).ok);
}
