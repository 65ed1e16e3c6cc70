#include <set>

#include "doctest.h"
#include "naive_oracle.hpp"
#include "zdg/zdg.hpp"

using namespace zdg;

namespace {

Graph zn_graph(int n) { return zd_graph(make_zn(n)); }

int vertex_of_label(const Graph& g, const std::string& label) {
  for (int v = 0; v < g.n(); ++v)
    if (g.label(v) == label) return v;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("BFS distances") {
  Graph p3 = make_path_graph(3);
  DistanceMatrix d = all_pairs_distances(p3);
  CHECK(d.at(0, 2) == 2);
  CHECK(d.at(0, 1) == 1);

  Graph iso(2);
  DistanceMatrix di = all_pairs_distances(iso);
  CHECK(di.at(0, 1) == DistanceMatrix::kUnreachable);
  CHECK_FALSE(di.all_reachable());
  CHECK(diameter(iso, di) == std::nullopt);

  Graph z12 = zn_graph(12);
  DistanceMatrix d12 = all_pairs_distances(z12);
  CHECK(d12.at(vertex_of_label(z12, "2"), vertex_of_label(z12, "3")) == 3);
}

TEST_CASE("diameter and girth on zero-divisor graphs") {
  {
    Graph g = zn_graph(8);
    DistanceMatrix d = all_pairs_distances(g);
    CHECK(diameter(g, d) == 2);
    CHECK(girth(g) == std::nullopt);
  }
  {
    Graph g = zn_graph(12);
    DistanceMatrix d = all_pairs_distances(g);
    CHECK(diameter(g, d) == 3);
    CHECK(girth(g) == 4);
  }
  {
    Graph g = zn_graph(25);
    DistanceMatrix d = all_pairs_distances(g);
    CHECK(diameter(g, d) == 1);
    CHECK(girth(g) == 3);
  }
  Graph empty(0);
  DistanceMatrix de = all_pairs_distances(empty);
  CHECK_THROWS_AS(diameter(empty, de), std::invalid_argument);
}

TEST_CASE("cut vertices and degree-one detection") {
  Graph p3 = make_path_graph(3);
  CHECK(cut_vertices(p3) == std::vector<int>{1});
  CHECK(has_degree_one_vertex(p3));

  Graph k3 = make_complete_graph(3);
  CHECK(cut_vertices(k3).empty());
  CHECK_FALSE(has_degree_one_vertex(k3));

  Graph g = zd_graph(catalog("Z2[r,s]/(r^2,s^2-rs)"));
  CHECK(g.n() == 7);
  CHECK_FALSE(cut_vertices(g).empty());
  CHECK(min_degree(g) >= 2);
  CHECK_FALSE(has_degree_one_vertex(g));
}

TEST_CASE("twin classes") {
  {
    Graph k4 = make_complete_graph(4);
    auto cls = twin_classes(k4, all_pairs_distances(k4));
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].size() == 4);
  }
  {
    Graph g = zn_graph(16);
    auto cls = twin_classes(g, all_pairs_distances(g));
    REQUIRE(cls.size() == 3);
    auto labels = [&](const std::vector<int>& ids) {
      std::vector<std::string> out;
      for (int v : ids) out.push_back(g.label(v));
      return out;
    };
    CHECK(labels(cls[0]) == std::vector<std::string>{"2", "6", "10", "14"});
    CHECK(labels(cls[1]) == std::vector<std::string>{"4", "12"});
    CHECK(labels(cls[2]) == std::vector<std::string>{"8"});
  }
  {
    Graph p4 = make_path_graph(4);
    auto cls = twin_classes(p4, all_pairs_distances(p4));
    CHECK(cls.size() == 4);
  }
}

TEST_CASE("twin classes form an equivalence partition") {
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    Graph g = oracle::random_connected_graph(rng, 2, 8);
    DistanceMatrix d = all_pairs_distances(g);
    auto cls = twin_classes(g, d);
    std::set<int> seen;
    int total = 0;
    auto similar = [&](int u, int v) {
      for (int x = 0; x < g.n(); ++x) {
        if (x == u || x == v) continue;
        if (d.at(u, x) != d.at(v, x)) return false;
      }
      return true;
    };
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (int v : cls[a]) {
        CHECK(seen.insert(v).second);
        ++total;
        CHECK(similar(cls[a].front(), v));
      }
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        CHECK_FALSE(similar(cls[a].front(), cls[b].front()));
    }
    CHECK(total == g.n());
  }
}

TEST_CASE("twins within a class sit at distance 1 or 2") {
  for (int n : {12, 15, 16, 18, 20, 25, 27}) {
    Graph g = zn_graph(n);
    DistanceMatrix d = all_pairs_distances(g);
    for (const auto& cls : twin_classes(g, d))
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          int dist = d.at(cls[i], cls[j]);
          CHECK((dist == 1 || dist == 2));
          CHECK((g.adjacent(cls[i], cls[j]) ? dist == 1 : dist == 2));
        }
  }
}

TEST_CASE("family classification on known graphs") {
  CHECK(classify_family(zn_graph(15)).to_string() == "K2x4");
  CHECK(classify_family(zn_graph(6)).to_string() == "P3");
  CHECK(classify_family(zd_graph(make_product({make_zn(3), make_zn(3)})))
            .to_string() == "C4");
  FamilyClass star = classify_family(zn_graph(10));
  CHECK(star.to_string() == "K1x4");
  CHECK(star.star);
  CHECK(classify_family(make_complete_graph(3)).to_string() == "C3");
  CHECK(classify_family(make_complete_graph(2)).to_string() == "P2");
  CHECK(classify_family(Graph(1)).to_string() == "K1");
  CHECK(classify_family(Graph(0)).to_string() == "empty");
}

TEST_CASE("classification agrees with brute-force definition checks") {
  std::mt19937 rng(11);
  for (int it = 0; it < 300; ++it) {
    Graph g = oracle::random_connected_graph(rng, 2, 8);
    oracle::SimpleGraph s = oracle::from_graph(g);
    FamilyClass f = classify_family(g);
    CHECK(is_path_graph(g) == oracle::naive_is_path(s));
    CHECK(is_cycle_graph(g) == oracle::naive_is_cycle(s));
    CHECK(is_complete_graph(g) == oracle::naive_is_complete(s));
    auto mine = complete_bipartite_sides(g);
    auto ref = oracle::naive_cb_sides(s);
    CHECK(mine == ref);
    // The canonical tag must satisfy its own definition.
    switch (f.kind) {
      case FamilyClass::Kind::Path: CHECK(oracle::naive_is_path(s)); break;
      case FamilyClass::Kind::Cycle: CHECK(oracle::naive_is_cycle(s)); break;
      case FamilyClass::Kind::Complete:
        CHECK(oracle::naive_is_complete(s));
        break;
      case FamilyClass::Kind::CompleteBipartite: CHECK(ref.has_value()); break;
      default: break;
    }
  }
}

TEST_CASE("girth of cycles and near-cycles") {
  for (int m = 3; m <= 8; ++m)
    CHECK(girth(make_cycle_graph(m)) == m);
  for (int m = 3; m <= 8; ++m)
    CHECK(girth(make_complete_graph(m)) == 3);
  CHECK(girth(make_complete_bipartite_graph(2, 3)) == 4);
  // A 5-cycle with one chord has a triangle and a square through the chord.
  Graph g = make_cycle_graph(5);
  g.add_edge(0, 2);
  CHECK(girth(g) == 3);
}

TEST_CASE("girth is undefined exactly for forests") {
  std::mt19937 rng(13);
  for (int it = 0; it < 120; ++it) {
    Graph g = oracle::random_connected_graph(rng, 2, 8);
    CHECK(girth(g).has_value() !=
          oracle::naive_is_forest(oracle::from_graph(g)));
  }
}

TEST_CASE("deterministic exports") {
  Graph one = zn_graph(4);
  CHECK(export_graph(one, GraphFormat::Dot) ==
        "graph \"Z_4\" {\n  0 [label=\"2\"];\n}\n");

  Graph z8 = zn_graph(8);
  CHECK(export_graph(z8, GraphFormat::EdgeList) == "2 4\n4 6\n");

  std::string dot = export_graph(z8, GraphFormat::Dot);
  CHECK(dot.find("graph \"Z_8\" {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("JSON round trip is the identity") {
  std::mt19937 rng(17);
  for (int it = 0; it < 60; ++it) {
    Graph g = oracle::random_connected_graph(rng, 2, 8);
    Graph h = import_graph_json(export_graph(g, GraphFormat::Json));
    REQUIRE(h.n() == g.n());
    CHECK(h.labels() == g.labels());
    CHECK(h.edges() == g.edges());
  }
}

TEST_CASE("edge list import maps labels to vertices") {
  Graph g = import_graph_edge_list("2 4\n4 6\n");
  REQUIRE(g.n() == 3);
  CHECK(g.label(0) == "2");
  CHECK(g.label(2) == "6");
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(import_graph_edge_list("a a\n"), std::invalid_argument);
  CHECK_THROWS_AS(import_graph_edge_list("a b c\n"), std::invalid_argument);
}

TEST_CASE("zero-divisor graphs are connected with diameter at most 3") {
  RunConfig cfg;
  auto check_graph = [](const Graph& g) {
    if (g.n() <= 1) return;
    DistanceMatrix d = all_pairs_distances(g);
    auto diam = diameter(g, d);
    REQUIRE(diam.has_value());
    CHECK(*diam <= 3);
  };
  for (const auto& name : catalog_names()) check_graph(zd_graph(catalog(name)));
  for (int n = 2; n <= 60; ++n) check_graph(zn_graph(n));
  for (int n = 2; n <= 6; ++n) check_graph(zd_graph(make_gaussian_mod(n)));
}
