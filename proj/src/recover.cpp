#include "pairlab/recover.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <string>

#include <nlohmann/json.hpp>

#include "pairlab/rng.hpp"

namespace pairlab {

namespace {

void check_obs(const Graph& g, const ObservationSet& obs, const GroupSpec& gs) {
  if (obs.values.size() != g.edges.size())
    throw std::invalid_argument("observations do not match graph edge count");
  if (obs.modulus != gs.modulus)
    throw std::invalid_argument("observation modulus does not match group");
}

bool shift_invariant(const RelationOp& op, const GroupSpec& gs) {
  auto [al, be] = op.coeffs(gs);
  return (al + be) % gs.modulus == 0;
}

// y(a->b) for the difference op: +y_ab traversed low->high, -y_ab otherwise.
Element oriented_diff(const Graph& g, const ObservationSet& obs, int a, int b,
                      std::uint64_t M) {
  int e = g.edge_index(a, b);
  Element y = obs.values[e];
  return a < b ? y : (M - y) % M;
}

}  // namespace

long long compatibility_score(const Graph& g, const ObservationSet& obs,
                              const Assignment& x, const RelationOp& op,
                              const GroupSpec& gs) {
  check_obs(g, obs, gs);
  if (static_cast<int>(x.size()) != g.n)
    throw std::invalid_argument("assignment length mismatch");
  long long score = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = g.edges[e];
    if (obs.values[e] == op_apply(op, gs, x[i], x[j])) ++score;
  }
  return score;
}

bool success(const Assignment& xhat, const Assignment& xtrue,
             const RelationOp& op, const GroupSpec& gs) {
  if (xhat.size() != xtrue.size())
    throw std::invalid_argument("success: length mismatch");
  // entrywise comparison of the two relation matrices
  const std::size_t n = xhat.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (op_apply(op, gs, xhat[i], xhat[j]) !=
          op_apply(op, gs, xtrue[i], xtrue[j]))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Exhaustive maximum compatibility search.
//
// Vertices are assigned in index order. For each unassigned vertex u a vote
// table counts, per candidate value, the edges to already-assigned vertices
// that would match. This gives an upper bound for subtree pruning
// (partial score + per-vertex max votes + all free-free edges) and lets the
// last two vertices be closed in O(M) instead of enumerated.
// ---------------------------------------------------------------------------

namespace {

struct DenseSearch {
  const Graph& g;
  const ObservationSet& obs;
  const GroupSpec& gs;
  std::uint64_t M;
  std::uint64_t alpha, beta, ainv, binv;
  int n, first;  // first free vertex (1 when pinned)
  bool pinned;

  std::vector<std::vector<int>> votes;   // votes[u][val]
  std::vector<Element> cur;              // current assignment
  std::vector<long long> free_edges_at;  // edges with both endpoints >= d
  // per vertex d: edges to higher-indexed neighbors, as (u, c0) where the
  // matching value at u is c0 - s*x_d mod M
  std::vector<std::vector<std::pair<int, std::uint64_t>>> up_edges;
  std::uint64_t s_coef;

  long long best_score = -1;
  Assignment best_vec;
  bool tie = false;
  long long leaves = 0;

  DenseSearch(const Graph& g_, const ObservationSet& o, const RelationOp& op,
              const GroupSpec& gs_, bool pin)
      : g(g_), obs(o), gs(gs_), M(gs_.modulus) {
    auto [al, be] = op.coeffs(gs);
    alpha = al;
    beta = be;
    ainv = inv_mod(alpha, M);
    binv = inv_mod(beta, M);
    n = g.n;
    pinned = pin;
    first = pin ? 1 : 0;
    votes.assign(n, std::vector<int>(M, 0));
    cur.assign(n, 0);
    free_edges_at.assign(n + 1, 0);
    for (auto [i, j] : g.edges) free_edges_at[i] += 1;  // i = min endpoint
    for (int d = n - 1; d >= 0; --d) free_edges_at[d] += free_edges_at[d + 1];
    up_edges.assign(n, {});
    s_coef = mul_mod(binv, alpha, M);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      // value at j matching x_i: binv*(y - alpha*x_i) = c0 - s_coef*x_i
      up_edges[i].push_back({j, mul_mod(binv, obs.values[e], M)});
    }
  }

  void apply_votes(int d, Element v, int delta) {
    std::uint64_t sv = mul_mod(s_coef, v, M);
    for (auto [u, c0] : up_edges[d]) {
      std::uint64_t cval = c0 + M - sv;
      if (cval >= M) cval -= M;
      votes[u][cval] += delta;
    }
  }

  long long bound_at(int d, long long partial) const {
    long long b = partial + free_edges_at[d];
    for (int u = d; u < n; ++u)
      b += *std::max_element(votes[u].begin(), votes[u].end());
    return b;
  }

  // Close the last two vertices given all earlier ones are assigned.
  void closure(long long partial) {
    ++leaves;
    const int u1 = n - 2, u2 = n - 1;
    const auto& v1 = votes[u1];
    const auto& v2 = votes[u2];
    int max2 = 0, c2 = 0, w2star = 0;
    for (std::uint64_t w = 0; w < M; ++w) {
      if (v2[w] > max2) {
        max2 = v2[w];
        c2 = 1;
        w2star = static_cast<int>(w);
      } else if (v2[w] == max2) {
        if (c2 == 0) w2star = static_cast<int>(w);
        ++c2;
      }
    }
    int e12 = g.edge_index(u1, u2);
    std::uint64_t wc = 0, wstep = 0;
    if (e12 >= 0) {
      wc = mul_mod(binv, obs.values[e12], M);  // matching w at x_{u1} = 0
      wstep = s_coef;                          // decrement per unit of v
    }
    long long leaf_best = -1;
    std::uint64_t bv = 0, bw = 0;
    long long leaf_count = 0;
    for (std::uint64_t v = 0; v < M; ++v) {
      long long inner;
      std::uint64_t w_choice;
      long long cnt;
      if (e12 < 0) {
        inner = max2;
        w_choice = static_cast<std::uint64_t>(w2star);
        cnt = c2;
      } else {
        std::uint64_t w_match = wc;
        if (static_cast<long long>(v2[w_match]) >= max2) {
          inner = v2[w_match] + 1;
          w_choice = w_match;
          cnt = 1;
        } else {
          inner = max2;
          cnt = c2;
          w_choice = static_cast<std::uint64_t>(w2star);
          if (static_cast<long long>(v2[w_match]) + 1 == max2) {
            ++cnt;
            w_choice = std::min(w_choice, w_match);
          }
        }
      }
      long long total = partial + v1[v] + inner;
      if (total > leaf_best) {
        leaf_best = total;
        bv = v;
        bw = w_choice;
        leaf_count = cnt;
      } else if (total == leaf_best) {
        leaf_count += cnt;
      }
      if (e12 >= 0) {
        wc = wc + M - wstep;
        if (wc >= M) wc -= M;
      }
    }
    if (leaf_best > best_score) {
      best_score = leaf_best;
      cur[u1] = bv;
      cur[u2] = bw;
      best_vec = cur;
      tie = leaf_count > 1;
    } else if (leaf_best == best_score) {
      tie = true;
    }
  }

  void dfs(int d, long long partial) {
    if (d == n - 2) {
      closure(partial);
      return;
    }
    if (best_score >= 0 && bound_at(d, partial) < best_score) return;
    for (std::uint64_t v = 0; v < M; ++v) {
      cur[d] = v;
      apply_votes(d, v, +1);
      dfs(d + 1, partial + votes[d][v]);
      apply_votes(d, v, -1);
    }
  }

  void run() {
    // pinned: vertex 0 fixed at 0; its votes contribution is applied once
    if (pinned) apply_votes(0, 0, +1);
    dfs(first, 0);
  }
};

// Fallback without vote tables: plain DFS over all free vertices. Used for
// large M (dense tables would not fit) and for non-shift-invariant ops.
struct SimpleSearch {
  const Graph& g;
  const ObservationSet& obs;
  const RelationOp& op;
  const GroupSpec& gs;
  std::uint64_t M;
  int n, first;
  bool pinned;

  std::vector<Element> cur;
  long long best_score = -1;
  Assignment best_vec;
  bool tie = false;
  long long leaves = 0;
  std::vector<Element> best_matrix;

  SimpleSearch(const Graph& g_, const ObservationSet& o, const RelationOp& op_,
               const GroupSpec& gs_, bool pin)
      : g(g_), obs(o), op(op_), gs(gs_), M(gs_.modulus), n(g_.n) {
    pinned = pin;
    first = pin ? 1 : 0;
    cur.assign(n, 0);
  }

  void leaf(long long score) {
    ++leaves;
    if (score > best_score) {
      best_score = score;
      best_vec = cur;
      tie = false;
      best_matrix.clear();
    } else if (score == best_score) {
      if (pinned) {
        tie = true;  // distinct pinned vectors induce distinct matrices
      } else {
        if (best_matrix.empty())
          best_matrix = relation_matrix(best_vec, op, gs);
        if (relation_matrix(cur, op, gs) != best_matrix) tie = true;
      }
    }
  }

  void dfs(int d, long long partial) {
    if (d == n) {
      leaf(partial);
      return;
    }
    for (std::uint64_t v = 0; v < M; ++v) {
      cur[d] = v;
      long long add = 0;
      for (auto [u, e] : g.adj[d])
        if (u < d)
          if (obs.values[e] ==
              op_apply(op, gs, cur[std::min(d, u)], cur[std::max(d, u)]))
            ++add;
      dfs(d + 1, partial + add);
    }
  }
};

}  // namespace

RecoveryResult recover_exhaustive(const Graph& g, const ObservationSet& obs,
                                  const RelationOp& op, const GroupSpec& gs,
                                  const RecoverOptions& opts) {
  check_obs(g, obs, gs);
  if (!validate_op(op, gs))
    throw std::invalid_argument("recover_exhaustive: invalid op");
  const std::uint64_t M = gs.modulus;
  const bool pin = shift_invariant(op, gs);
  const int free_digits = pin ? g.n - 1 : g.n;
  // search-space guard: M^free_digits <= budget
  double states = std::pow(static_cast<double>(M), free_digits);
  if (states > static_cast<double>(opts.search_budget))
    throw SearchSpaceTooLarge("recover_exhaustive: M^" +
                              std::to_string(free_digits) +
                              " exceeds search budget");

  RecoveryResult res;
  res.diag.budget_used = opts.search_budget;
  if (g.n == 1) {
    res.status = RecoverStatus::Recovered;
    res.assignment = Assignment{0};
    res.score = 0;
    return res;
  }

  Assignment best;
  long long best_score;
  bool tie;
  long long leaves;
  if (pin && M <= 1024 && g.n >= 3) {
    DenseSearch search(g, obs, op, gs, pin);
    search.run();
    best = std::move(search.best_vec);
    best_score = search.best_score;
    tie = search.tie;
    leaves = search.leaves;
  } else {
    SimpleSearch search(g, obs, op, gs, pin);
    search.dfs(search.first, 0);
    best = std::move(search.best_vec);
    best_score = search.best_score;
    tie = search.tie;
    leaves = search.leaves;
  }
  res.status = RecoverStatus::Recovered;
  res.assignment = std::move(best);
  res.score = best_score;
  res.diag.tie = tie;
  res.diag.states_examined = leaves;
  return res;
}

// ---------------------------------------------------------------------------
// Zero-sum cycle screening (difference op only).
// ---------------------------------------------------------------------------

RecoveryResult recover_cycle(const Graph& g, const ObservationSet& obs,
                             const GroupSpec& gs, int k,
                             const RecoverOptions& opts) {
  check_obs(g, obs, gs);
  if (obs.op.kind != OpKind::Difference)
    throw UnsupportedOp("recover_cycle: difference op required");
  // the k = 3 case is always admitted; beyond that k <= log2(n)
  if (k < 3 || (k > 3 && std::pow(2.0, k) > g.n))
    throw std::invalid_argument("recover_cycle: 3 <= k <= log2(n) required");
  const std::uint64_t M = gs.modulus;
  const int n = g.n;
  std::vector<char> keep(g.edges.size(), 0);
  long long triangles = 0;  // k = 3: each triangle examined exactly once
  long long walks = 0;

  if (k == 3) {
    // shared-neighbor triangle enumeration, each triangle visited once
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      const auto& ai = g.adj[i];
      const auto& aj = g.adj[j];
      std::size_t a = 0, b = 0;
      while (a < ai.size() && b < aj.size()) {
        if (ai[a].first < aj[b].first) {
          ++a;
        } else if (ai[a].first > aj[b].first) {
          ++b;
        } else {
          int w = ai[a].first;
          if (w > j) {
            // triangle i < j < w, traversed i -> j -> w -> i
            ++triangles;
            std::uint64_t s = oriented_diff(g, obs, i, j, M) +
                              oriented_diff(g, obs, j, w, M) +
                              oriented_diff(g, obs, w, i, M);
            if (s % M == 0) {
              keep[e] = 1;
              keep[ai[a].second] = 1;
              keep[aj[b].second] = 1;
            }
          }
          ++a;
          ++b;
        }
      }
    }
  } else {
    // depth-limited walk enumeration from each edge, canonical direction
    std::vector<int> path;
    std::vector<char> onpath(n, 0);
    std::vector<int> path_edges;
    auto mark_cycle = [&]() {
      for (int e : path_edges) keep[e] = 1;
    };
    // path holds v0, v1, ..., v_t; cycle closes back to v0
    std::function<void(std::uint64_t)> extend = [&](std::uint64_t sum) {
      int t = static_cast<int>(path.size()) - 1;
      int vt = path[t];
      if (t == k - 1) {
        // close the cycle if the final edge exists
        int v0 = path[0];
        if (vt > path[1]) {  // canonical direction: second vertex < last
          int e = g.edge_index(vt, v0);
          if (e >= 0) {
            if (++walks > opts.walk_budget)
              throw BudgetExceeded("recover_cycle: walk budget exceeded");
            std::uint64_t total = sum + oriented_diff(g, obs, vt, v0, M);
            if (total % M == 0) {
              path_edges.push_back(e);
              mark_cycle();
              path_edges.pop_back();
            }
          }
        }
        return;
      }
      for (auto [u, e] : g.adj[vt]) {
        if (u <= path[0] || onpath[u]) continue;  // min vertex is the root
        if (++walks > opts.walk_budget)
          throw BudgetExceeded("recover_cycle: walk budget exceeded");
        path.push_back(u);
        onpath[u] = 1;
        path_edges.push_back(e);
        extend(sum + oriented_diff(g, obs, vt, u, M));
        path_edges.pop_back();
        onpath[u] = 0;
        path.pop_back();
      }
    };
    for (int v0 = 0; v0 < n; ++v0) {
      path = {v0};
      onpath.assign(n, 0);
      onpath[v0] = 1;
      path_edges.clear();
      extend(0);
    }
  }

  RecoveryResult res;
  res.diag.states_examined = k == 3 ? triangles : walks;
  res.diag.budget_used = walks;
  long long kept = 0;
  for (char c : keep) kept += c;
  res.diag.pruned_edges = g.m() - kept;

  // spanning tree over the retained edges, rooted at vertex 0 with x_0 = 0
  std::vector<int> parent(n, -1), parent_edge(n, -1), order;
  std::vector<char> seen(n, 0);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (auto [u, e] : g.adj[v])
        if (keep[e] && !seen[u]) {
          seen[u] = 1;
          parent[u] = v;
          parent_edge[u] = e;
          q.push(u);
        }
    }
  }
  res.diag.components = components;
  if (components > 1) {
    res.status = RecoverStatus::Failed;
    res.reason = FailReason::Disconnected;
    return res;
  }

  Assignment x(n, 0);
  for (int v : order) {
    if (parent[v] < 0) continue;
    // x_v = x_parent - y(parent -> v)
    std::uint64_t y = oriented_diff(g, obs, parent[v], v, M);
    x[v] = (x[parent[v]] + M - y) % M;
  }
  // verify the remaining retained edges
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!keep[e]) continue;
    auto [i, j] = g.edges[e];
    if (obs.values[e] != (x[i] + M - x[j]) % M) {
      res.status = RecoverStatus::Failed;
      res.reason = FailReason::Inconsistent;
      return res;
    }
  }
  res.status = RecoverStatus::Recovered;
  res.score =
      compatibility_score(g, obs, x, RelationOp::difference(), gs);
  res.assignment = std::move(x);
  return res;
}

// ---------------------------------------------------------------------------
// Spectral proxy + coordinate ascent refinement (difference op only).
// ---------------------------------------------------------------------------

namespace {

// One coordinate-ascent pass; returns true if anything changed. Works for
// any valid affine op via the inverse coefficients. A strict-improvement
// move is always taken; on an exact vote tie the vertex adopts the value
// proposed by its smallest-indexed neighbor, which lets alignment propagate
// through degree-2 structures (rings, paths) instead of freezing at domain
// walls. Either way the incident satisfied-edge count never decreases.
bool ascent_sweep(const Graph& g, const ObservationSet& obs,
                  const RelationOp& op, const GroupSpec& gs, Assignment& x) {
  const std::uint64_t M = gs.modulus;
  auto [al, be] = op.coeffs(gs);
  const std::uint64_t ainv = inv_mod(al, M);
  const std::uint64_t binv = inv_mod(be, M);
  bool changed = false;
  struct Cand {
    std::uint64_t v;
    int cnt;
    int min_proposer;
  };
  std::vector<Cand> cand;
  for (int i = 0; i < g.n; ++i) {
    cand.clear();
    for (auto [j, e] : g.adj[i]) {
      std::uint64_t y = obs.values[e];
      std::uint64_t v;
      if (i < j) {
        // y = al*x_i + be*x_j
        v = mul_mod(ainv, (y + M - mul_mod(be, x[j], M)) % M, M);
      } else {
        v = mul_mod(binv, (y + M - mul_mod(al, x[j], M)) % M, M);
      }
      bool found = false;
      for (auto& c : cand)
        if (c.v == v) {
          ++c.cnt;
          c.min_proposer = std::min(c.min_proposer, j);
          found = true;
          break;
        }
      if (!found) cand.push_back({v, 1, j});
    }
    int cur_votes = 0, cur_proposer = g.n;
    for (auto& c : cand)
      if (c.v == x[i]) {
        cur_votes = c.cnt;
        cur_proposer = c.min_proposer;
      }
    std::uint64_t best_v = x[i];
    int best_cnt = cur_votes, best_proposer = cur_proposer;
    for (auto& c : cand) {
      if (c.v == x[i]) continue;
      bool better = c.cnt > best_cnt ||
                    (c.cnt == best_cnt &&
                     (c.min_proposer < best_proposer ||
                      (c.min_proposer == best_proposer && c.v < best_v)));
      if (better) {
        best_cnt = c.cnt;
        best_v = c.v;
        best_proposer = c.min_proposer;
      }
    }
    if (best_v != x[i]) {
      x[i] = best_v;
      changed = true;
    }
  }
  return changed;
}

void canonicalize_shift(Assignment& x, std::uint64_t M) {
  if (x.empty()) return;
  std::uint64_t c = x[0];
  for (auto& v : x) v = (v + M - c) % M;
}

}  // namespace

RecoveryResult recover_spectral(const Graph& g, const ObservationSet& obs,
                                const GroupSpec& gs, int refine_rounds) {
  check_obs(g, obs, gs);
  if (obs.op.kind != OpKind::Difference)
    throw UnsupportedOp("recover_spectral: difference op required");
  if (gs.modulus > (1ull << 20))
    throw std::invalid_argument("recover_spectral: M <= 2^20 required");
  const int n = g.n;
  const std::uint64_t M = gs.modulus;
  const double two_pi = 6.283185307179586476925286766559;
  using cd = std::complex<double>;

  // H_ij = omega^{y_ij}, Hermitian, plus a diagonal shift to keep the top
  // eigenvalue dominant under power iteration
  DegreeStats ds = degree_stats(g);
  const double shift = static_cast<double>(ds.d_max);
  std::vector<cd> ph(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    double t = two_pi * static_cast<double>(obs.values[e]) /
               static_cast<double>(M);
    ph[e] = {std::cos(t), std::sin(t)};
  }
  std::vector<cd> v(n), w(n);
  for (int i = 0; i < n; ++i) {
    double t = two_pi * std::fmod(0.6180339887498949 * (i + 1), 1.0);
    v[i] = {std::cos(t), std::sin(t)};
  }
  auto normalize = [&](std::vector<cd>& z) {
    double norm = 0;
    for (auto& c : z) norm += std::norm(c);
    norm = std::sqrt(norm);
    if (norm > 0)
      for (auto& c : z) c /= norm;
  };
  normalize(v);
  bool converged = false;
  for (int it = 0; it < 1000; ++it) {
    for (int i = 0; i < n; ++i) w[i] = shift * v[i];
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      w[i] += ph[e] * v[j];
      w[j] += std::conj(ph[e]) * v[i];
    }
    cd lam = 0;
    for (int i = 0; i < n; ++i) lam += std::conj(v[i]) * w[i];
    double resid = 0;
    for (int i = 0; i < n; ++i) resid += std::norm(w[i] - lam * v[i]);
    normalize(w);
    std::swap(v, w);
    if (std::sqrt(resid) <= 1e-9 * std::max(1.0, std::abs(lam))) {
      converged = true;
      break;
    }
  }

  Assignment x(n, 0);
  for (int i = 0; i < n; ++i) {
    double theta = std::arg(v[i] * std::conj(v[0]));
    long long idx = std::llround(theta / two_pi * static_cast<double>(M));
    idx %= static_cast<long long>(M);
    if (idx < 0) idx += static_cast<long long>(M);
    x[i] = static_cast<Element>(idx);
  }
  for (int r = 0; r < refine_rounds; ++r)
    if (!ascent_sweep(g, obs, obs.op, gs, x)) break;
  canonicalize_shift(x, M);

  RecoveryResult res;
  res.status = RecoverStatus::Recovered;
  res.diag.converged = converged;
  res.score = compatibility_score(g, obs, x, obs.op, gs);
  res.assignment = std::move(x);
  return res;
}

RecoveryResult recover_local_search(const Graph& g, const ObservationSet& obs,
                                    const RelationOp& op, const GroupSpec& gs,
                                    int restarts, std::uint64_t seed) {
  check_obs(g, obs, gs);
  if (!validate_op(op, gs))
    throw std::invalid_argument("recover_local_search: invalid op");
  const std::uint64_t M = gs.modulus;
  const int runs = restarts + 1;
  Assignment best;
  long long best_score = -1;
  for (int r = 0; r < runs; ++r) {
    StreamRng rng(seed, static_cast<std::uint64_t>(r));
    Assignment x(g.n);
    for (auto& val : x) val = rng.next_below(M);
    // tie-chasing may cycle without improving, so cap the sweep count at a
    // margin beyond the longest alignment chain
    for (int sweep = 0; sweep < g.n + 64; ++sweep)
      if (!ascent_sweep(g, obs, op, gs, x)) break;
    long long s = compatibility_score(g, obs, x, op, gs);
    if (s > best_score) {
      best_score = s;
      best = std::move(x);
    }
  }
  if (shift_invariant(op, gs)) canonicalize_shift(best, M);
  RecoveryResult res;
  res.status = RecoverStatus::Recovered;
  res.score = compatibility_score(g, obs, best, op, gs);
  res.assignment = std::move(best);
  return res;
}

std::string RecoveryResult::to_json() const {
  nlohmann::json j;
  j["status"] = recovered() ? "recovered" : "failed";
  switch (reason) {
    case FailReason::None: j["reason"] = nullptr; break;
    case FailReason::Disconnected: j["reason"] = "disconnected"; break;
    case FailReason::Inconsistent: j["reason"] = "inconsistent"; break;
  }
  if (assignment)
    j["assignment"] = *assignment;
  else
    j["assignment"] = nullptr;
  j["score"] = score;
  j["diagnostics"] = {{"pruned_edges", diag.pruned_edges},
                      {"components", diag.components},
                      {"tie", diag.tie},
                      {"converged", diag.converged},
                      {"states_examined", diag.states_examined},
                      {"budget", diag.budget_used}};
  return j.dump();
}

}  // namespace pairlab
