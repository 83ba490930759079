#include "pairlab/channel.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "pairlab/rng.hpp"

namespace pairlab {

ObservationSet corrupt(const Assignment& x, const RelationOp& op,
                       const Graph& g, const GroupSpec& gs, double p,
                       std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("corrupt: p in [0,1] required");
  if (static_cast<int>(x.size()) != g.n)
    throw std::invalid_argument("corrupt: assignment length mismatch");
  if (!validate_op(op, gs)) throw std::invalid_argument("corrupt: invalid op");
  for (Element v : x)
    if (!gs.contains(v))
      throw std::out_of_range("corrupt: assignment element out of range");

  ObservationSet obs;
  obs.modulus = gs.modulus;
  obs.op = op;
  obs.p_used = p;
  obs.values.resize(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = g.edges[e];
    // stream keyed by the endpoint pair, not the edge index
    StreamRng rng(seed, (static_cast<std::uint64_t>(i) << 32) |
                            static_cast<std::uint64_t>(j));
    bool keep = rng.next_unit() < p;
    std::uint64_t outlier = rng.next_below(gs.modulus);
    obs.values[e] = keep ? op_apply(op, gs, x[i], x[j]) : outlier;
  }
  return obs;
}

double effective_accuracy(double p, std::uint64_t M) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("effective_accuracy: p in [0,1] required");
  if (M < 2) throw std::invalid_argument("effective_accuracy: M >= 2");
  return p + (1.0 - p) / static_cast<double>(M);
}

void write_observations(std::ostream& os, const Graph& g,
                        const ObservationSet& obs) {
  if (obs.values.size() != g.edges.size())
    throw std::invalid_argument("write_observations: size mismatch");
  GroupSpec gs(obs.modulus);
  os << g.n << ' ' << g.m() << ' ' << obs.modulus << ' ' << obs.op.tag(gs)
     << '\n';
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    os << g.edges[e].first << ' ' << g.edges[e].second << ' ' << obs.values[e]
       << '\n';
}

std::pair<Graph, ObservationSet> read_observations(std::istream& is) {
  int n, m;
  std::uint64_t M;
  std::string tag;
  if (!(is >> n >> m >> M >> tag))
    throw std::runtime_error("observation file: bad header");
  ObservationSet obs;
  obs.modulus = M;
  obs.op = RelationOp::parse_tag(tag);
  obs.values.resize(m);
  std::vector<std::pair<int, int>> edges(m);
  for (int e = 0; e < m; ++e) {
    if (!(is >> edges[e].first >> edges[e].second >> obs.values[e]))
      throw std::runtime_error("observation file: bad edge line");
    if (obs.values[e] >= M)
      throw std::runtime_error("observation file: value out of range");
    if (edges[e].first >= edges[e].second)
      throw std::runtime_error("observation file: edges must have i < j");
    if (e > 0 && !(edges[e - 1] < edges[e]))
      throw std::runtime_error("observation file: edges must be sorted");
  }
  Graph g = Graph::from_edges(n, std::move(edges));
  return {std::move(g), std::move(obs)};
}

}  // namespace pairlab
