#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pairlab/graph.hpp"
#include "pairlab/group.hpp"

namespace pairlab {

// Per-edge observations, oriented low-id ⊖ high-id, parallel to the graph's
// edge list. Single-shot: one value per edge.
struct ObservationSet {
  std::uint64_t modulus = 2;
  RelationOp op;
  std::vector<Element> values;
  std::optional<double> p_used;  // simulation provenance only
};

// Each edge independently keeps the true relation with probability p and is
// otherwise replaced by a uniform draw over all M elements (which may
// coincide with the truth). The per-edge stream is keyed by the endpoint
// pair, so the corruption mask does not depend on the ground truth, the
// edge order, or the presence of other edges.
ObservationSet corrupt(const Assignment& x, const RelationOp& op,
                       const Graph& g, const GroupSpec& gs, double p,
                       std::uint64_t seed);

// Probability an observed edge matches the truth: p + (1-p)/M.
double effective_accuracy(double p, std::uint64_t M);

void write_observations(std::ostream& os, const Graph& g,
                        const ObservationSet& obs);
std::pair<Graph, ObservationSet> read_observations(std::istream& is);

}  // namespace pairlab
