#include "coverlab/constructions.hpp"
#include "coverlab/io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

using namespace coverlab;

TEST_CASE("canonical_dump sorts keys and is stable") {
  const Json a = Json::parse(R"({"b": 1, "a": [3, {"z": 0.5, "y": null}], "c": "x"})");
  CHECK(canonical_dump(a) == R"({"a":[3,{"y":null,"z":0.5}],"b":1,"c":"x"})");
  CHECK(canonical_dump(Json::parse(canonical_dump(a))) == canonical_dump(a));
  CHECK(canonical_dump(Json(0.1 + 0.2)) == "0.3");
  CHECK(canonical_dump(Json(std::numeric_limits<double>::quiet_NaN())) == "null");
  CHECK(canonical_dump(Json(std::numeric_limits<double>::infinity())) == "null");
}

TEST_CASE("exact number encodings") {
  CHECK(big_to_json(BigInt(42)) == Json(42));
  CHECK(big_to_json(BigInt("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  CHECK(rational_to_json(Rational(6)) == Json(6));
  CHECK(rational_to_json(Rational(27, 5)) == Json("27/5"));
  const Json s = surd_to_json(-Surd::sqrt(5));
  CHECK(s["a"] == Json(0));
  CHECK(s["b"] == Json(-1));
  CHECK(s["D"] == Json(5));
}

TEST_CASE("cover params serialize multiplicities as integers") {
  const Json j = to_json(derive_params(9, 3, 3));
  CHECK(j["m_theta"] == Json(12));
  CHECK(j["m_tau"] == Json(6));
  CHECK(j["n"] == Json(9));
  CHECK(j["lambda"] == Json(1));
}

TEST_CASE("cover files are canonical and round-trip") {
  for (const CoverGraph& g : {hexagon(), cube(), icosahedron(), thas_somma(3, 1)}) {
    const Json j = cover_to_json(g);
    CHECK(j["v"] == Json(g.vertex_count()));
    // Edges sorted with u < v, fibres ordered by minimum.
    const auto& edges = j["edges"];
    for (std::size_t i = 0; i < edges.size(); ++i) {
      CHECK(edges[i][0].get<int>() < edges[i][1].get<int>());
      if (i > 0) CHECK(edges[i - 1] < edges[i]);
    }
    const auto& fibres = j["fibres"];
    for (std::size_t i = 1; i < fibres.size(); ++i) CHECK(fibres[i - 1][0].get<int>() < fibres[i][0].get<int>());
    const CoverGraph back = cover_from_json(j);
    CHECK(back == g);
    CHECK(canonical_dump(cover_to_json(back)) == canonical_dump(j));
  }
}

TEST_CASE("readers accept any order") {
  const Json shuffled = Json::parse(R"({"v": 6, "fibres": [[5, 2], [3, 0], [4, 1]],
    "edges": [[5, 0], [1, 0], [2, 1], [3, 2], [4, 3], [5, 4]]})");
  CHECK(cover_from_json(shuffled) == hexagon());
}

TEST_CASE("malformed cover documents") {
  CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"fibres": [[0, 1]], "edges": []})")), InputError);
  CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"v": 6, "fibres": "x", "edges": []})")), InputError);
  CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"v": 6, "fibres": [[0, 3], [1, 4], [2, 5]], "edges": [[0]]})")),
                  InputError);
  CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"v": 6, "fibres": [[0, 3], [1, 4], [2, 5]], "edges": [[0, 9]]})")),
                  StructuralError);
  CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"v": 6, "fibres": [[0, 3], [1, 4]], "edges": []})")), StructuralError);
  CHECK_THROWS_AS(read_cover_file("/nonexistent/cover.json"), InputError);
}

TEST_CASE("files on disk") {
  const std::string path = "coverlab_io_test_cover.json";
  {
    std::ofstream out(path);
    out << canonical_dump(cover_to_json(cube()));
  }
  CHECK(read_cover_file(path) == cube());
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(read_cover_file(path), InputError);
  std::remove(path.c_str());
}

TEST_CASE("report serializers") {
  const CoverReport rep = verify_cover(hexagon().with_edge_toggled(0, 1));
  const Json j = to_json(rep);
  CHECK(j["is_cover"] == Json(false));
  CHECK(j["failures"].is_array());
  CHECK_FALSE(j["failures"].empty());
  CHECK(j["failures"][0].contains("axiom"));
  CHECK(to_json(Permutation({1, 0, 2})) == Json::array({1, 0, 2}));
}
