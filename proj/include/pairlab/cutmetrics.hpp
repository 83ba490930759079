#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pairlab/graph.hpp"

namespace pairlab {

// Exhaustive cut-set statistics on small graphs. These exist to sanity-check
// the balance hypotheses on toy instances; experiment-scale code never calls
// them.

// hist[c] = number of subsets S (including the empty set and V) with
// |boundary(S)| == c. Guard: n <= 22.
std::vector<std::uint64_t> boundary_histogram(const Graph& g);

// |{S : |boundary(S)| <= k}|, counting the empty set and V.
std::uint64_t count_Nk(const Graph& g, long long k);

struct AlphaResult {
  double alpha_lb = 0.0;
  double alpha_ub = 0.0;
  int k_max_lb = 0;  // k range used for the lower-bound exponent
  int k_max_ub = 0;
};
// max_k log(N_{k*d_min}) / k (resp. d_max), natural log, k up to
// ceil(|E|/d); beyond that N saturates at 2^n and the ratio only decreases.
// Requires a connected graph.
AlphaResult alpha_exponents(const Graph& g);

// Literal evaluation of the dominant-cross-cut statistic: over all proper
// nonempty S with |boundary(S)| / (|S| d_min) <= K, the largest count of
// S1 subset of S with |E(S1, S\S1)| / (|S| d_min) >= (K-3)/K.
// Guard: n <= 16; K > 0.
std::uint64_t beta_metric(const Graph& g, double K);

struct CutMetricsReport {
  std::vector<std::uint64_t> nk_table;  // nk_table[k] = N_k, k = 0..|E|
  double alpha_lb = 0.0;
  double alpha_ub = 0.0;
  std::uint64_t beta = 0;
  double K_used = 0.0;
  int k_range_lb = 0;
  int k_range_ub = 0;
  // log base is always e; recorded explicitly in the serialized form
  std::string to_json() const;
};

CutMetricsReport cut_metrics_report(const Graph& g, double K);

}  // namespace pairlab
