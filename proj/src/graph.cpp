#include "pairlab/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "pairlab/rng.hpp"

namespace pairlab {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("Graph: n must be positive");
  for (auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("Graph: self-loop");
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n) throw std::invalid_argument("Graph: vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("Graph: duplicate edge");
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (int e = 0; e < g.m(); ++e) {
    auto [i, j] = g.edges[e];
    g.adj[i].push_back({j, e});
    g.adj[j].push_back({i, e});
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

int Graph::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
  if (it != edges.end() && *it == std::make_pair(i, j))
    return static_cast<int>(it - edges.begin());
  return -1;
}

bool Graph::connected() const {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, e] : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++cnt;
        stack.push_back(u);
      }
  }
  return cnt == n;
}

GraphModel GraphModel::erdos_renyi(double q) {
  if (q < 0 || q > 1) throw std::invalid_argument("ErdosRenyi: q in [0,1]");
  return {Kind::ErdosRenyi, q, 0, 0};
}

GraphModel GraphModel::geometric(double r) {
  if (!(r > 0)) throw std::invalid_argument("Geometric: r > 0");
  return {Kind::Geometric, 0, r, 0};
}

GraphModel GraphModel::small_world(int k, double q) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("SmallWorld: k must be even and >= 2");
  if (q < 0 || q > 1) throw std::invalid_argument("SmallWorld: q in [0,1]");
  return {Kind::SmallWorld, q, 0, k};
}

const char* GraphModel::name() const {
  switch (kind) {
    case Kind::ErdosRenyi: return "er";
    case Kind::Geometric: return "geo";
    case Kind::SmallWorld: return "sw";
    case Kind::Ring: return "ring";
    case Kind::Complete: return "complete";
  }
  return "?";
}

double GraphModel::param() const {
  switch (kind) {
    case Kind::ErdosRenyi: return q;
    case Kind::Geometric: return r;
    case Kind::SmallWorld: return q;  // lattice degree is carried separately
    default: return 0.0;
  }
}

namespace {

Graph gen_erdos_renyi(int n, double q, std::uint64_t seed) {
  StreamRng rng(seed, 0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_unit() < q) edges.push_back({i, j});
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_geometric(int n, double r, std::uint64_t seed) {
  // points uniform on the unit sphere surface, edge iff chord distance <= r
  std::vector<std::array<double, 3>> pts(n);
  for (int v = 0; v < n; ++v) {
    StreamRng rng(seed, static_cast<std::uint64_t>(v));
    auto [g0, g1] = rng.next_normal_pair();
    auto [g2, g3] = rng.next_normal_pair();
    double norm = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2);
    if (norm == 0) norm = 1;
    pts[v] = {g0 / norm, g1 / norm, g2 / norm};
  }
  std::vector<std::pair<int, int>> edges;
  const double r2 = r * r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dx = pts[i][0] - pts[j][0];
      double dy = pts[i][1] - pts[j][1];
      double dz = pts[i][2] - pts[j][2];
      if (dx * dx + dy * dy + dz * dz <= r2) edges.push_back({i, j});
    }
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_ring(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_small_world(int n, int k, double q, std::uint64_t seed) {
  if (k >= n) throw std::invalid_argument("SmallWorld: k < n required");
  // ring lattice: each vertex linked to k/2 neighbors on each side
  std::set<std::pair<int, int>> edge_set;
  std::vector<std::pair<int, int>> lattice;
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= k / 2; ++d) {
      int j = (i + d) % n;
      auto e = std::minmax(i, j);
      if (edge_set.insert({e.first, e.second}).second)
        lattice.push_back({i, j});  // oriented: i keeps, j is the far end
    }
  StreamRng rng(seed, 0);
  for (auto [i, j] : lattice) {
    if (rng.next_unit() >= q) continue;
    auto old_e = std::minmax(i, j);
    // rewire the far endpoint; bounded retries, then keep the original edge
    for (int attempt = 0; attempt < 100; ++attempt) {
      int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
      if (t == i) continue;
      auto new_e = std::minmax(i, t);
      if (edge_set.count({new_e.first, new_e.second})) continue;
      edge_set.erase({old_e.first, old_e.second});
      edge_set.insert({new_e.first, new_e.second});
      break;
    }
  }
  return Graph::from_edges(
      n, std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
}

}  // namespace

Graph gen_graph(const GraphModel& model, int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_graph: n >= 3 required");
  switch (model.kind) {
    case GraphModel::Kind::ErdosRenyi:
      if (model.q < 0 || model.q > 1)
        throw std::invalid_argument("ErdosRenyi: q in [0,1]");
      return gen_erdos_renyi(n, model.q, seed);
    case GraphModel::Kind::Geometric:
      if (!(model.r > 0)) throw std::invalid_argument("Geometric: r > 0");
      return gen_geometric(n, model.r, seed);
    case GraphModel::Kind::SmallWorld:
      if (model.k < 2 || model.k % 2 != 0 || model.k >= n)
        throw std::invalid_argument("SmallWorld: 2 <= k < n, k even");
      if (model.q < 0 || model.q > 1)
        throw std::invalid_argument("SmallWorld: q in [0,1]");
      return gen_small_world(n, model.k, model.q, seed);
    case GraphModel::Kind::Ring:
      return gen_ring(n);
    case GraphModel::Kind::Complete:
      return gen_complete(n);
  }
  throw std::logic_error("gen_graph: bad model");
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  if (g.n == 0) return s;
  s.d_min = g.degree(0);
  s.d_max = g.degree(0);
  long long total = 0;
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    s.d_min = std::min(s.d_min, d);
    s.d_max = std::max(s.d_max, d);
    total += d;
  }
  s.mean = static_cast<double>(total) / g.n;
  return s;
}

MinCutResult min_cut(const Graph& g) {
  if (!g.connected()) return {0, false};
  const int n = g.n;
  if (n == 1) return {0, true};
  // Stoer-Wagner with unit weights on a dense matrix
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (auto [i, j] : g.edges) {
    w[i][j] += 1;
    w[j][i] += 1;
  }
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  long long best = -1;
  int sz = n;
  while (sz > 1) {
    // maximum adjacency ordering
    std::vector<long long> conn(sz, 0);
    std::vector<char> added(sz, 0);
    int prev = -1, last = -1;
    for (int step = 0; step < sz; ++step) {
      int pick = -1;
      for (int i = 0; i < sz; ++i)
        if (!added[i] && (pick == -1 || conn[i] > conn[pick])) pick = i;
      added[pick] = 1;
      prev = last;
      last = pick;
      if (step == sz - 1) {
        long long cut = conn[pick];
        if (best < 0 || cut < best) best = cut;
        // merge last into prev
        int u = active[prev], v = active[last];
        for (int i = 0; i < sz; ++i) {
          int a = active[i];
          w[u][a] += w[v][a];
          w[a][u] += w[a][v];
        }
        active.erase(active.begin() + last);
        break;
      }
      for (int i = 0; i < sz; ++i)
        if (!added[i]) conn[i] += w[active[pick]][active[i]];
    }
    --sz;
  }
  return {best, true};
}

namespace {

ExpansionResult expansion_exact(const Graph& g) {
  const int n = g.n;
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [i, j] : g.edges) {
    nbr[i] |= 1u << j;
    nbr[j] |= 1u << i;
  }
  long long best_num = -1, best_den = 1;
  long long cut = 0;
  std::uint32_t s_mask = 0;
  const std::uint32_t total = 1u << n;
  // gray-code walk: flipping v changes the cut by deg(v) - 2*|N(v) & S|
  for (std::uint32_t s = 1; s < total; ++s) {
    int v = __builtin_ctz(s);
    long long inside = __builtin_popcount(nbr[v] & s_mask);
    if (s_mask & (1u << v)) {
      s_mask ^= 1u << v;
      inside = __builtin_popcount(nbr[v] & s_mask);
      cut -= g.degree(v) - 2 * inside;
    } else {
      cut += g.degree(v) - 2 * inside;
      s_mask ^= 1u << v;
    }
    int size = __builtin_popcount(s_mask);
    if (size == 0 || 2 * size > n) continue;
    if (best_num < 0 || cut * best_den < best_num * size) {
      best_num = cut;
      best_den = size;
    }
  }
  ExpansionResult r;
  r.exact = true;
  r.num = best_num;
  r.den = best_den;
  r.value = static_cast<double>(best_num) / static_cast<double>(best_den);
  return r;
}

// Cheeger-type bound h >= lambda_2 / 2 from the combinatorial Laplacian.
ExpansionResult expansion_spectral_bound(const Graph& g) {
  const int n = g.n;
  DegreeStats ds = degree_stats(g);
  const double c = 2.0 * ds.d_max + 1.0;  // shift so B = cI - L is PSD
  std::vector<double> v(n), w(n);
  for (int i = 0; i < n; ++i) v[i] = std::sin(1.0 + i);  // fixed start
  auto deflate = [&](std::vector<double>& x) {
    double mean = 0;
    for (double t : x) mean += t;
    mean /= n;
    for (double& t : x) t -= mean;
  };
  auto normalize = [&](std::vector<double>& x) {
    double norm = 0;
    for (double t : x) norm += t * t;
    norm = std::sqrt(norm);
    if (norm > 0)
      for (double& t : x) t /= norm;
  };
  deflate(v);
  normalize(v);
  double lam = 0;
  for (int it = 0; it < 2000; ++it) {
    for (int i = 0; i < n; ++i) w[i] = (c - g.degree(i)) * v[i];
    for (auto [i, j] : g.edges) {
      w[i] += v[j];
      w[j] += v[i];
    }
    deflate(w);
    double prev = lam;
    lam = 0;
    for (int i = 0; i < n; ++i) lam += v[i] * w[i];
    normalize(w);
    std::swap(v, w);
    if (it > 10 && std::abs(lam - prev) < 1e-12 * c) break;
  }
  double lambda2 = c - lam;
  ExpansionResult r;
  r.exact = false;
  r.value = std::max(0.0, lambda2 / 2.0);
  return r;
}

}  // namespace

ExpansionResult edge_expansion(const Graph& g) {
  if (g.n <= 24) return expansion_exact(g);
  return expansion_spectral_bound(g);
}

void write_graph(std::ostream& os, const Graph& g) {
  os << g.n << ' ' << g.m() << '\n';
  for (auto [i, j] : g.edges) os << i << ' ' << j << '\n';
}

Graph read_graph(std::istream& is) {
  int n, m;
  if (!(is >> n >> m)) throw std::runtime_error("graph file: bad header");
  std::vector<std::pair<int, int>> edges(m);
  for (auto& [i, j] : edges)
    if (!(is >> i >> j)) throw std::runtime_error("graph file: bad edge line");
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace pairlab
