#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "pairlab/channel.hpp"
#include "pairlab/graph.hpp"
#include "pairlab/rng.hpp"

using namespace pairlab;

namespace {

Assignment random_truth(int n, std::uint64_t M, std::uint64_t seed) {
  StreamRng rng(seed, 0);
  Assignment x(n);
  for (auto& v : x) v = rng.next_below(M);
  return x;
}

double match_fraction(const Graph& g, const ObservationSet& obs,
                      const Assignment& x, const RelationOp& op,
                      const GroupSpec& gs) {
  int hit = 0;
  for (int e = 0; e < g.m(); ++e) {
    auto [i, j] = g.edges[e];
    hit += obs.values[e] == op_apply(op, gs, x[i], x[j]);
  }
  return static_cast<double>(hit) / g.m();
}

}  // namespace

TEST_CASE("effective_accuracy examples") {
  CHECK(effective_accuracy(1.0, 17) == doctest::Approx(1.0));
  CHECK(effective_accuracy(0.0, 2) == doctest::Approx(0.5));
  CHECK(effective_accuracy(0.3, 4) == doctest::Approx(0.475));
}

TEST_CASE("p=1 reproduces the truth on every edge") {
  Graph g = gen_graph(GraphModel::complete(), 20, 0);
  GroupSpec gs(7);
  RelationOp op = RelationOp::affine(3, 5);
  Assignment x = random_truth(20, 7, 4);
  ObservationSet obs = corrupt(x, op, g, gs, 1.0, 99);
  REQUIRE(obs.values.size() == static_cast<std::size_t>(g.m()));
  CHECK(match_fraction(g, obs, x, op, gs) == doctest::Approx(1.0));
  CHECK(obs.p_used.has_value());
  CHECK(*obs.p_used == doctest::Approx(1.0));
}

TEST_CASE("match fraction concentrates at effective accuracy") {
  // >= 10,000 edges per check
  Graph g = gen_graph(GraphModel::complete(), 150, 0);  // 11175 edges
  SUBCASE("p=0, M=2") {
    GroupSpec gs(2);
    Assignment x = random_truth(150, 2, 8);
    ObservationSet obs = corrupt(x, RelationOp::difference(), g, gs, 0.0, 17);
    CHECK(match_fraction(g, obs, x, RelationOp::difference(), gs) ==
          doctest::Approx(0.5).epsilon(0.04));
  }
  SUBCASE("p=0.3, M=4") {
    GroupSpec gs(4);
    Assignment x = random_truth(150, 4, 9);
    ObservationSet obs = corrupt(x, RelationOp::difference(), g, gs, 0.3, 18);
    CHECK(match_fraction(g, obs, x, RelationOp::difference(), gs) ==
          doctest::Approx(0.475).epsilon(0.043));
  }
}

TEST_CASE("corruption mask is independent of the ground truth") {
  // huge prime modulus: uniform draws collide with the truth with
  // negligible probability, so the corrupted set is observable
  Graph g = gen_graph(GraphModel::erdos_renyi(0.5), 60, 21);
  GroupSpec gs((1ull << 61) - 1);
  RelationOp op = RelationOp::difference();
  Assignment x1 = random_truth(60, gs.modulus, 1);
  Assignment x2 = random_truth(60, gs.modulus, 2);
  ObservationSet o1 = corrupt(x1, op, g, gs, 0.6, 55);
  ObservationSet o2 = corrupt(x2, op, g, gs, 0.6, 55);
  std::set<int> bad1, bad2;
  for (int e = 0; e < g.m(); ++e) {
    auto [i, j] = g.edges[e];
    if (o1.values[e] != op_apply(op, gs, x1[i], x1[j])) bad1.insert(e);
    if (o2.values[e] != op_apply(op, gs, x2[i], x2[j])) bad2.insert(e);
  }
  CHECK(bad1 == bad2);
  CHECK(!bad1.empty());
}

TEST_CASE("per-edge draws do not depend on the rest of the graph") {
  Graph g = gen_graph(GraphModel::erdos_renyi(0.5), 40, 33);
  std::vector<std::pair<int, int>> half(g.edges.begin(),
                                        g.edges.begin() + g.m() / 2);
  Graph sub = Graph::from_edges(g.n, half);
  GroupSpec gs(12);
  Assignment x = random_truth(40, 12, 3);
  ObservationSet full = corrupt(x, RelationOp::sum(), g, gs, 0.4, 77);
  ObservationSet part = corrupt(x, RelationOp::sum(), sub, gs, 0.4, 77);
  for (int e = 0; e < sub.m(); ++e) {
    auto [i, j] = sub.edges[e];
    CHECK(part.values[e] == full.values[g.edge_index(i, j)]);
  }
}

TEST_CASE("corrupt is deterministic per seed") {
  Graph g = gen_graph(GraphModel::erdos_renyi(0.3), 30, 5);
  GroupSpec gs(9);
  Assignment x = random_truth(30, 9, 6);
  ObservationSet a = corrupt(x, RelationOp::difference(), g, gs, 0.5, 41);
  ObservationSet b = corrupt(x, RelationOp::difference(), g, gs, 0.5, 41);
  ObservationSet c = corrupt(x, RelationOp::difference(), g, gs, 0.5, 42);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
}

TEST_CASE("averaged match fraction concentrates across trials") {
  Graph g = gen_graph(GraphModel::complete(), 40, 0);  // 780 edges
  GroupSpec gs(5);
  const double p = 0.45;
  const int T = 20;
  double acc = 0;
  for (int t = 0; t < T; ++t) {
    Assignment x = random_truth(40, 5, 100 + t);
    ObservationSet obs =
        corrupt(x, RelationOp::difference(), g, gs, p, 2000 + t);
    acc += match_fraction(g, obs, x, RelationOp::difference(), gs);
  }
  double tol = 4.0 / std::sqrt(static_cast<double>(T) * g.m());
  CHECK(std::abs(acc / T - effective_accuracy(p, 5)) <= tol);
}

TEST_CASE("observation file round trips bit-exactly") {
  Graph g = gen_graph(GraphModel::erdos_renyi(0.4), 20, 12);
  GroupSpec gs(1000003);
  Assignment x = random_truth(20, gs.modulus, 7);
  ObservationSet obs = corrupt(x, RelationOp::affine(3, 1000002), g, gs, 0.5, 9);
  std::stringstream ss;
  write_observations(ss, g, obs);
  std::string text = ss.str();
  auto [g2, obs2] = read_observations(ss);
  CHECK(g2.edges == g.edges);
  CHECK(obs2.values == obs.values);
  CHECK(obs2.modulus == obs.modulus);
  CHECK_FALSE(obs2.p_used.has_value());
  std::stringstream ss2;
  write_observations(ss2, g2, obs2);
  CHECK(ss2.str() == text);
}

TEST_CASE("read_observations rejects malformed input") {
  std::stringstream bad("3 1 4 diff\n1 0 2\n");
  CHECK_THROWS(read_observations(bad));
  std::stringstream oob("3 1 4 diff\n0 1 9\n");
  CHECK_THROWS(read_observations(oob));
}
