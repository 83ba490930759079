#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pairlab/graph.hpp"

using namespace pairlab;

namespace {

// independent brute-force expansion: min |boundary(S)|/|S| over |S| <= n/2
double naive_expansion(const Graph& g) {
  double best = 1e18;
  for (unsigned mask = 1; mask + 1 < (1u << g.n); ++mask) {
    int sz = __builtin_popcount(mask);
    if (2 * sz > g.n) continue;
    int cut = 0;
    for (auto [i, j] : g.edges)
      cut += ((mask >> i) & 1u) != ((mask >> j) & 1u);
    best = std::min(best, static_cast<double>(cut) / sz);
  }
  return best;
}

// independent min-cut oracle over bipartitions (exponential; tiny n only)
long long naive_min_cut(const Graph& g) {
  long long best = 1ll << 60;
  for (unsigned mask = 1; mask + 1 < (1u << g.n); ++mask) {
    long long cut = 0;
    for (auto [i, j] : g.edges)
      cut += ((mask >> i) & 1u) != ((mask >> j) & 1u);
    best = std::min(best, cut);
  }
  return best;
}

Graph two_triangles_bridge() {
  return Graph::from_edges(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

}  // namespace

TEST_CASE("from_edges validation") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  Graph g = Graph::from_edges(3, {{1, 2}, {0, 1}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g.edge_index(2, 1) == 1);
  CHECK(g.edge_index(0, 2) == -1);
}

TEST_CASE("adjacency is consistent with the edge list") {
  Graph g = gen_graph(GraphModel::erdos_renyi(0.4), 30, 11);
  long long adj_half = 0;
  for (int v = 0; v < g.n; ++v)
    for (auto [u, e] : g.adj[v]) {
      auto [i, j] = g.edges[e];
      CHECK(((i == v && j == u) || (j == v && i == u)));
      ++adj_half;
    }
  CHECK(adj_half == 2ll * g.m());
}

TEST_CASE("deterministic model examples") {
  CHECK(gen_graph(GraphModel::complete(), 4, 0).m() == 6);
  Graph ring5 = gen_graph(GraphModel::ring(), 5, 0);
  CHECK(ring5.edges == std::vector<std::pair<int, int>>{
                           {0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(gen_graph(GraphModel::erdos_renyi(1.0), 100, 3).m() == 4950);
  Graph sw = gen_graph(GraphModel::small_world(4, 0.0), 10, 9);
  CHECK(sw.m() == 20);
  for (int v = 0; v < 10; ++v) CHECK(sw.degree(v) == 4);
}

TEST_CASE("model parameter validation") {
  CHECK_THROWS_AS(gen_graph(GraphModel::erdos_renyi(1.5), 10, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_graph(GraphModel::geometric(0.0), 10, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_graph(GraphModel::small_world(3, 0.1), 10, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_graph(GraphModel::small_world(10, 0.1), 10, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_graph(GraphModel::ring(), 2, 0), std::invalid_argument);
}

TEST_CASE("generation is reproducible per seed") {
  for (auto model : {GraphModel::erdos_renyi(0.3), GraphModel::geometric(0.8),
                     GraphModel::small_world(4, 0.3)}) {
    Graph a = gen_graph(model, 40, 123);
    Graph b = gen_graph(model, 40, 123);
    CHECK(a.edges == b.edges);
    Graph c = gen_graph(model, 40, 124);
    CHECK(a.edges != c.edges);
  }
}

TEST_CASE("ER edge count concentrates") {
  // 200 trials at n=100, q=0.1: mean within 3 SE of 495
  double total = 0;
  for (int t = 0; t < 200; ++t)
    total += gen_graph(GraphModel::erdos_renyi(0.1), 100, 5000 + t).m();
  double mean = total / 200.0;
  double se = std::sqrt(4950 * 0.1 * 0.9 / 200.0);
  CHECK(std::abs(mean - 495.0) <= 3 * se);
}

TEST_CASE("geometric degree statistics stable across seeds") {
  // chord threshold r=0.5 hits a spherical cap of measure r^2/4
  auto mean_degree = [](std::uint64_t seed) {
    Graph g = gen_graph(GraphModel::geometric(0.5), 500, seed);
    return 2.0 * g.m() / g.n;
  };
  double expect = 499 * 0.25 * 0.25;
  double a = mean_degree(71), b = mean_degree(72);
  CHECK(std::abs(a - expect) < 0.15 * expect);
  CHECK(std::abs(b - expect) < 0.15 * expect);
  CHECK(std::abs(a - b) < 0.1 * expect);
}

TEST_CASE("degree_stats examples") {
  auto check3 = [](const Graph& g, int lo, int hi, double mean) {
    DegreeStats s = degree_stats(g);
    CHECK(s.d_min == lo);
    CHECK(s.d_max == hi);
    CHECK(s.mean == doctest::Approx(mean));
  };
  check3(gen_graph(GraphModel::ring(), 5, 0), 2, 2, 2.0);
  check3(gen_graph(GraphModel::complete(), 4, 0), 3, 3, 3.0);
  check3(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), 1, 3, 1.5);
}

TEST_CASE("min_cut examples") {
  CHECK(min_cut(gen_graph(GraphModel::ring(), 5, 0)).value == 2);
  CHECK(min_cut(gen_graph(GraphModel::complete(), 4, 0)).value == 3);
  CHECK(min_cut(two_triangles_bridge()).value == 1);
  MinCutResult disc = min_cut(Graph::from_edges(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(disc.connected);
  CHECK(disc.value == 0);
}

TEST_CASE("min_cut matches bipartition oracle and degree bound") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = gen_graph(GraphModel::erdos_renyi(0.5), 9, 400 + seed);
    MinCutResult mc = min_cut(g);
    if (!g.connected()) {
      CHECK_FALSE(mc.connected);
      continue;
    }
    CHECK(mc.value == naive_min_cut(g));
    CHECK(mc.value <= degree_stats(g).d_min);
  }
}

TEST_CASE("edge expansion examples") {
  ExpansionResult r1 = edge_expansion(gen_graph(GraphModel::ring(), 6, 0));
  CHECK(r1.exact);
  CHECK(r1.num == 2);
  CHECK(r1.den == 3);
  ExpansionResult r2 = edge_expansion(gen_graph(GraphModel::complete(), 4, 0));
  CHECK(r2.exact);
  CHECK(r2.value == doctest::Approx(2.0));
  ExpansionResult r3 = edge_expansion(Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(r3.exact);
  CHECK(r3.value == doctest::Approx(1.0));
}

TEST_CASE("edge expansion matches naive enumeration") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = gen_graph(GraphModel::erdos_renyi(0.4), 10, 900 + seed);
    ExpansionResult r = edge_expansion(g);
    REQUIRE(r.exact);
    CHECK(r.value == doctest::Approx(naive_expansion(g)));
  }
}

TEST_CASE("large graphs fall back to the spectral lower bound") {
  Graph ring = gen_graph(GraphModel::ring(), 30, 0);
  ExpansionResult r = edge_expansion(ring);
  CHECK_FALSE(r.exact);
  // true expansion of the 30-ring is 2/15
  CHECK(r.value > 0.0);
  CHECK(r.value <= 2.0 / 15.0 + 1e-9);
}

TEST_CASE("graph file format round trips") {
  Graph g = gen_graph(GraphModel::erdos_renyi(0.3), 25, 77);
  std::stringstream ss;
  write_graph(ss, g);
  std::string first = ss.str();
  Graph back = read_graph(ss);
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);
  std::stringstream ss2;
  write_graph(ss2, back);
  CHECK(ss2.str() == first);
}

TEST_CASE("connectivity check") {
  CHECK(gen_graph(GraphModel::ring(), 8, 0).connected());
  CHECK_FALSE(Graph::from_edges(4, {{0, 1}, {2, 3}}).connected());
  CHECK_FALSE(Graph::from_edges(3, {{0, 1}}).connected());
}
