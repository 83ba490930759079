#include "pairlab/cutmetrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pairlab {

std::vector<std::uint64_t> boundary_histogram(const Graph& g) {
  const int n = g.n;
  if (n > 22)
    throw std::invalid_argument("boundary_histogram: n <= 22 required");
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [i, j] : g.edges) {
    nbr[i] |= 1u << j;
    nbr[j] |= 1u << i;
  }
  std::vector<std::uint64_t> hist(g.m() + 1, 0);
  long long cut = 0;
  std::uint32_t mask = 0;
  hist[0]++;  // empty set
  const std::uint32_t total = 1u << n;
  for (std::uint32_t s = 1; s < total; ++s) {
    int v = __builtin_ctz(s);
    if (mask & (1u << v)) {
      mask ^= 1u << v;
      cut -= g.degree(v) - 2 * __builtin_popcount(nbr[v] & mask);
    } else {
      cut += g.degree(v) - 2 * __builtin_popcount(nbr[v] & mask);
      mask ^= 1u << v;
    }
    hist[cut]++;
  }
  return hist;
}

std::uint64_t count_Nk(const Graph& g, long long k) {
  if (k < 0) return 0;
  auto hist = boundary_histogram(g);
  std::uint64_t total = 0;
  long long hi = std::min<long long>(k, static_cast<long long>(hist.size()) - 1);
  for (long long c = 0; c <= hi; ++c) total += hist[c];
  return total;
}

AlphaResult alpha_exponents(const Graph& g) {
  if (!g.connected())
    throw std::invalid_argument("alpha_exponents: connected graph required");
  auto hist = boundary_histogram(g);
  std::vector<std::uint64_t> cum(hist.size());
  std::uint64_t acc = 0;
  for (std::size_t c = 0; c < hist.size(); ++c) {
    acc += hist[c];
    cum[c] = acc;
  }
  auto n_at = [&](long long k) {
    if (k < 0) return std::uint64_t{0};
    if (k >= static_cast<long long>(cum.size())) return cum.back();
    return cum[k];
  };
  DegreeStats ds = degree_stats(g);
  const long long m = g.m();
  AlphaResult r;
  r.k_max_lb = static_cast<int>((m + ds.d_min - 1) / ds.d_min);
  r.k_max_ub = static_cast<int>((m + ds.d_max - 1) / ds.d_max);
  for (int k = 1; k <= r.k_max_lb; ++k)
    r.alpha_lb = std::max(
        r.alpha_lb, std::log(static_cast<double>(n_at(1ll * k * ds.d_min))) / k);
  for (int k = 1; k <= r.k_max_ub; ++k)
    r.alpha_ub = std::max(
        r.alpha_ub, std::log(static_cast<double>(n_at(1ll * k * ds.d_max))) / k);
  return r;
}

std::uint64_t beta_metric(const Graph& g, double K) {
  const int n = g.n;
  if (n > 16) throw std::invalid_argument("beta_metric: n <= 16 required");
  if (!(K > 0)) throw std::invalid_argument("beta_metric: K > 0 required");
  DegreeStats ds = degree_stats(g);
  if (ds.d_min == 0)
    throw std::invalid_argument("beta_metric: isolated vertex (d_min = 0)");
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [i, j] : g.edges) {
    nbr[i] |= 1u << j;
    nbr[j] |= 1u << i;
  }
  const std::uint32_t total = 1u << n;
  std::uint64_t best = 0;
  for (std::uint32_t s = 1; s + 1 < total; ++s) {  // proper nonempty S
    int size = __builtin_popcount(s);
    long long boundary = 0;
    for (auto [i, j] : g.edges) {
      bool bi = s & (1u << i), bj = s & (1u << j);
      if (bi != bj) ++boundary;
    }
    const double denom = static_cast<double>(size) * ds.d_min;
    if (boundary > K * denom) continue;
    const double thresh = (K - 3.0) / K * denom;
    if (thresh <= 0) {
      // every S1 crosses a nonpositive threshold
      best = std::max(best, std::uint64_t{1} << size);
      continue;
    }
    // internal edges of S
    std::vector<std::pair<std::uint32_t, std::uint32_t>> internal;
    for (auto [i, j] : g.edges)
      if ((s & (1u << i)) && (s & (1u << j)))
        internal.push_back({1u << i, 1u << j});
    if (static_cast<double>(internal.size()) < thresh) continue;
    std::uint64_t count = 0;
    // all submasks of s, including 0 and s
    std::uint32_t s1 = s;
    while (true) {
      long long cross = 0;
      for (auto [bi, bj] : internal)
        if (static_cast<bool>(s1 & bi) != static_cast<bool>(s1 & bj)) ++cross;
      if (static_cast<double>(cross) >= thresh) ++count;
      if (s1 == 0) break;
      s1 = (s1 - 1) & s;
    }
    best = std::max(best, count);
  }
  return best;
}

CutMetricsReport cut_metrics_report(const Graph& g, double K) {
  CutMetricsReport rep;
  auto hist = boundary_histogram(g);
  rep.nk_table.resize(hist.size());
  std::uint64_t acc = 0;
  for (std::size_t c = 0; c < hist.size(); ++c) {
    acc += hist[c];
    rep.nk_table[c] = acc;
  }
  AlphaResult a = alpha_exponents(g);
  rep.alpha_lb = a.alpha_lb;
  rep.alpha_ub = a.alpha_ub;
  rep.k_range_lb = a.k_max_lb;
  rep.k_range_ub = a.k_max_ub;
  rep.K_used = K;
  rep.beta = beta_metric(g, K);
  return rep;
}

std::string CutMetricsReport::to_json() const {
  std::ostringstream os;
  os << "{\"log_base\":\"e\",\"alpha_lb\":" << alpha_lb
     << ",\"alpha_ub\":" << alpha_ub << ",\"beta\":" << beta
     << ",\"K\":" << K_used << ",\"k_range_lb\":[1," << k_range_lb
     << "],\"k_range_ub\":[1," << k_range_ub << "],\"Nk\":[";
  for (std::size_t i = 0; i < nk_table.size(); ++i) {
    if (i) os << ',';
    os << nk_table[i];
  }
  os << "]}";
  return os.str();
}

}  // namespace pairlab
