#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace pairlab {

// Simple undirected graph. Edges are stored as (i, j) with i < j, globally
// sorted; adjacency lists carry the edge index so observations keyed by edge
// can be walked from either endpoint.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge id)

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  // Edge id for (i, j) in either order, or -1.
  int edge_index(int i, int j) const;
  bool connected() const;
};

struct GraphModel {
  enum class Kind { ErdosRenyi, Geometric, SmallWorld, Ring, Complete };
  Kind kind = Kind::Complete;
  double q = 0.0;   // ER edge probability / small-world rewiring probability
  double r = 0.0;   // geometric distance threshold
  int k = 0;        // small-world lattice degree (even)

  static GraphModel erdos_renyi(double q);
  static GraphModel geometric(double r);
  static GraphModel small_world(int k, double q);
  static GraphModel ring() { return {Kind::Ring, 0, 0, 0}; }
  static GraphModel complete() { return {Kind::Complete, 0, 0, 0}; }

  const char* name() const;
  double param() const;  // the model's scalar parameter, 0 for ring/complete
};

Graph gen_graph(const GraphModel& model, int n, std::uint64_t seed);

struct DegreeStats {
  int d_min = 0;
  int d_max = 0;
  double mean = 0.0;
};
DegreeStats degree_stats(const Graph& g);

struct MinCutResult {
  long long value = 0;
  bool connected = false;  // value is 0 and meaningless when false
};
// Exact global minimum edge cut (Stoer-Wagner).
MinCutResult min_cut(const Graph& g);

struct ExpansionResult {
  bool exact = false;       // false: spectral Cheeger lower bound
  long long num = 0;        // exact mode: h = num/den
  long long den = 1;
  double value = 0.0;
};
// Exact edge expansion for n <= 24 (subset enumeration); spectral lower
// bound lambda_2 / 2 beyond that, flagged.
ExpansionResult edge_expansion(const Graph& g);

void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

}  // namespace pairlab
