#include "pairlab/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "pairlab/channel.hpp"
#include "pairlab/rng.hpp"

namespace pairlab {

namespace {
constexpr std::uint64_t kGraphTag = 1;
constexpr std::uint64_t kTruthTag = 2;
constexpr std::uint64_t kChannelTag = 3;
constexpr std::uint64_t kAlgTag = 4;
constexpr std::uint64_t kQuenchedGraphTag = 0xF1;
}  // namespace

std::string AlgorithmSpec::name() const {
  switch (kind) {
    case Kind::Exhaustive: return "exhaustive";
    case Kind::Cycle: return "cycle";
    case Kind::Spectral: return "spectral";
    case Kind::LocalSearch: return "local";
  }
  return "?";
}

AlgorithmSpec AlgorithmSpec::parse(const std::string& name) {
  AlgorithmSpec a;
  if (name == "exhaustive") a.kind = Kind::Exhaustive;
  else if (name == "cycle") a.kind = Kind::Cycle;
  else if (name == "spectral") a.kind = Kind::Spectral;
  else if (name == "local") a.kind = Kind::LocalSearch;
  else throw std::invalid_argument("unknown algorithm '" + name + "'");
  return a;
}

int env_thread_cap() {
  if (const char* s = std::getenv("PAIRLAB_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

TrialOutcome run_one_trial(const TrialConfig& cfg, int t) {
  TrialOutcome out;
  out.trial_seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(t));
  auto start = std::chrono::steady_clock::now();
  try {
    GroupSpec gs(cfg.M);
    std::uint64_t gseed = cfg.fixed_graph
                              ? derive_seed(cfg.master_seed, kQuenchedGraphTag)
                              : derive_seed(out.trial_seed, kGraphTag);
    Graph g = gen_graph(cfg.model, cfg.n, gseed);
    StreamRng truth_rng(derive_seed(out.trial_seed, kTruthTag), 0);
    Assignment x(cfg.n);
    for (auto& v : x) v = truth_rng.next_below(cfg.M);
    ObservationSet obs = corrupt(x, cfg.op, g, gs, cfg.p,
                                 derive_seed(out.trial_seed, kChannelTag));
    RecoveryResult res;
    switch (cfg.alg.kind) {
      case AlgorithmSpec::Kind::Exhaustive:
        res = recover_exhaustive(g, obs, cfg.op, gs, cfg.alg.opts);
        break;
      case AlgorithmSpec::Kind::Cycle:
        res = recover_cycle(g, obs, gs, cfg.alg.k, cfg.alg.opts);
        break;
      case AlgorithmSpec::Kind::Spectral:
        res = recover_spectral(g, obs, gs, cfg.alg.refine_rounds);
        break;
      case AlgorithmSpec::Kind::LocalSearch:
        res = recover_local_search(g, obs, cfg.op, gs, cfg.alg.restarts,
                                   derive_seed(out.trial_seed, kAlgTag));
        break;
    }
    out.status = res.status;
    out.score = res.score;
    out.success = res.recovered() && res.assignment &&
                  success(*res.assignment, x, cfg.op, gs);
  } catch (const std::exception& e) {
    out.error = true;
    out.error_msg = e.what();
  }
  out.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

}  // namespace

RunResult run_trials(const TrialConfig& cfg, int T) {
  if (T < 1) throw std::invalid_argument("run_trials: T >= 1");
  RunResult result;
  result.outcomes.resize(T);
  int nthreads = std::min(env_thread_cap(), T);
  if (nthreads <= 1) {
    for (int t = 0; t < T; ++t) result.outcomes[t] = run_one_trial(cfg, t);
  } else {
    std::vector<std::thread> workers;
    for (int tid = 0; tid < nthreads; ++tid)
      workers.emplace_back([&, tid] {
        for (int t = tid; t < T; t += nthreads)
          result.outcomes[t] = run_one_trial(cfg, t);
      });
    for (auto& w : workers) w.join();
  }
  for (const auto& o : result.outcomes)
    if (o.success) ++result.success_count;
  return result;
}

std::pair<double, double> wilson_interval(int successes, int trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  double f = static_cast<double>(successes) / trials;
  double z2 = z * z;
  double denom = 1.0 + z2 / trials;
  double center = (f + z2 / (2.0 * trials)) / denom;
  double half =
      z * std::sqrt(f * (1.0 - f) / trials + z2 / (4.0 * trials * trials)) /
      denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ThresholdEstimate estimate_threshold(const TrialConfig& cfg_template,
                                     const std::vector<double>& p_grid,
                                     int T) {
  if (p_grid.empty())
    throw std::invalid_argument("estimate_threshold: empty grid");
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (p_grid[i] < 0 || p_grid[i] > 1)
      throw std::invalid_argument("estimate_threshold: grid within [0,1]");
    if (i > 0 && p_grid[i] <= p_grid[i - 1])
      throw std::invalid_argument("estimate_threshold: grid must be ascending");
  }
  ThresholdEstimate est;
  est.grid = p_grid;
  est.trials_per_point = T;
  est.success_fraction.assign(p_grid.size(),
                              std::numeric_limits<double>::quiet_NaN());
  std::vector<int> counts(p_grid.size(), 0);
  int cross = -1;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    TrialConfig cfg = cfg_template;
    cfg.p = p_grid[i];
    // point seed keyed by the p value itself, so refined grids reuse
    // identical curves at shared points
    cfg.master_seed = derive_seed(cfg_template.master_seed,
                                  std::bit_cast<std::uint64_t>(p_grid[i]));
    RunResult rr = run_trials(cfg, T);
    counts[i] = rr.success_count;
    est.success_fraction[i] = static_cast<double>(rr.success_count) / T;
    if (est.success_fraction[i] >= 0.5) {
      cross = static_cast<int>(i);
      break;
    }
  }
  if (cross < 0) {
    est.crossed = false;
    est.p_hat = p_grid.back();
    est.ci_low = p_grid.back();
    est.ci_high = 1.0;
    return est;
  }
  est.crossed = true;
  if (cross == 0) {
    // crossing is below the grid; report the first point, open to the left
    est.p_hat = p_grid[0];
    est.ci_low = 0.0;
    est.ci_high = p_grid[0];
    return est;
  }
  const int lo_i = cross - 1, hi_i = cross;
  const double pl = p_grid[lo_i], ph = p_grid[hi_i];
  const double fl = est.success_fraction[lo_i], fh = est.success_fraction[hi_i];
  auto interp = [&](double a, double b) {
    if (b <= a) return ph;  // degenerate, no usable slope
    double t = (0.5 - a) / (b - a);
    return pl + (ph - pl) * std::clamp(t, 0.0, 1.0);
  };
  est.p_hat = interp(fl, fh);
  auto [l_lo, l_hi] = wilson_interval(counts[lo_i], T);
  auto [h_lo, h_hi] = wilson_interval(counts[hi_i], T);
  // optimistic curve (upper bounds) crosses earlier, pessimistic later
  est.ci_low = interp(l_hi, h_hi);
  est.ci_high = interp(l_lo, h_lo);
  if (est.ci_low > est.p_hat) est.ci_low = est.p_hat;
  if (est.ci_high < est.p_hat) est.ci_high = est.p_hat;
  return est;
}

std::string ThresholdEstimate::to_json() const {
  nlohmann::json j;
  j["p_hat"] = p_hat;
  j["ci_low"] = ci_low;
  j["ci_high"] = ci_high;
  j["trials_per_point"] = trials_per_point;
  j["grid"] = grid;
  j["crossed"] = crossed;
  nlohmann::json fr = nlohmann::json::array();
  for (double f : success_fraction) {
    if (std::isnan(f))
      fr.push_back(nullptr);
    else
      fr.push_back(f);
  }
  j["success_fraction"] = fr;
  return j.dump();
}

PredictedRate predicted_rate(int n, std::uint64_t M, double d_max,
                             const std::string& graph_kind) {
  if (d_max < 1) throw std::invalid_argument("predicted_rate: d_max >= 1");
  if (n < 2 || M < 2) throw std::invalid_argument("predicted_rate: n, M >= 2");
  (void)graph_kind;  // rate depends on the graph only through d_max
  const double logn = std::log(static_cast<double>(n));
  const double Md = static_cast<double>(M);
  PredictedRate r;
  if (Md <= d_max / logn) {
    r.regime = "information-limited";
    r.p_predicted = std::sqrt(logn / (d_max * Md));
  } else if (Md >= d_max) {
    r.regime = "connectivity-limited";
    r.p_predicted = logn / d_max;
  } else {
    r.regime = "transition";
    r.p_predicted = logn / (d_max * std::log(2.0 * Md * logn / d_max));
  }
  r.fano_lower_bound =
      std::sqrt(std::log((Md - 1.0) * n) / ((d_max + 1.0) * (Md - 1.0)));
  return r;
}

// ---------------------------------------------------------------------------
// Sweep
// ---------------------------------------------------------------------------

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

GraphModel model_from_config(const std::string& name, double param,
                             int k_lattice) {
  if (name == "er") return GraphModel::erdos_renyi(param);
  if (name == "geo") return GraphModel::geometric(param);
  if (name == "sw") return GraphModel::small_world(k_lattice, param);
  if (name == "ring") return GraphModel::ring();
  if (name == "complete") return GraphModel::complete();
  throw std::invalid_argument("unknown model '" + name + "'");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string run_sweep(const std::string& config_json,
                      const std::string& existing_csv, bool timing) {
  nlohmann::json cfg = nlohmann::json::parse(config_json);
  const std::string model_name = cfg.at("model");
  const std::string op_tag = cfg.value("op", "diff");
  std::vector<int> ns = cfg.at("n").get<std::vector<int>>();
  std::vector<double> params =
      cfg.contains("param") ? cfg.at("param").get<std::vector<double>>()
                            : std::vector<double>{0.0};
  std::vector<std::uint64_t> Ms =
      cfg.at("M").get<std::vector<std::uint64_t>>();
  std::vector<double> ps = cfg.at("p").get<std::vector<double>>();
  std::vector<std::string> algs =
      cfg.at("algorithm").get<std::vector<std::string>>();
  const int T = cfg.at("trials");
  const std::uint64_t master_seed = cfg.at("master_seed");
  const int k_lattice = cfg.value("k_lattice", 4);
  const int cycle_k = cfg.value("k", 3);
  const int restarts = cfg.value("restarts", 8);
  const int refine = cfg.value("refine_rounds", 20);
  const bool fixed_graph = cfg.value("fixed_graph", false);

  // rows already computed, keyed by the leading columns
  std::map<std::string, std::string> existing;
  {
    std::istringstream is(existing_csv);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
      if (header) {
        header = false;
        continue;
      }
      if (line.empty()) continue;
      int commas = 0;
      std::size_t pos = 0;
      for (; pos < line.size(); ++pos)
        if (line[pos] == ',' && ++commas == 7) break;
      existing[line.substr(0, pos)] = line;
    }
  }

  std::ostringstream out;
  out << "model,n,param,M,op,p,algorithm,trials,successes,mean_runtime_ms,"
         "master_seed,error\n";
  for (int n : ns)
    for (double param : params)
      for (std::uint64_t M : Ms)
        for (double p : ps)
          for (const std::string& alg_name : algs) {
            std::ostringstream key;
            key << model_name << ',' << n << ',' << fmt_double(param) << ','
                << M << ',' << op_tag << ',' << fmt_double(p) << ','
                << alg_name;
            auto it = existing.find(key.str());
            if (it != existing.end()) {
              out << it->second << '\n';
              continue;
            }
            std::string err;
            int successes = 0;
            double mean_rt = 0.0;
            try {
              TrialConfig tc;
              tc.model = model_from_config(model_name, param, k_lattice);
              tc.n = n;
              tc.M = M;
              tc.op = RelationOp::parse_tag(op_tag);
              tc.p = p;
              tc.alg = AlgorithmSpec::parse(alg_name);
              tc.alg.k = cycle_k;
              tc.alg.restarts = restarts;
              tc.alg.refine_rounds = refine;
              tc.fixed_graph = fixed_graph;
              tc.master_seed = derive_seed(master_seed, fnv1a(key.str()));
              RunResult rr = run_trials(tc, T);
              successes = rr.success_count;
              for (const auto& o : rr.outcomes) {
                mean_rt += o.runtime_ms / T;
                if (o.error && err.empty()) err = o.error_msg;
              }
            } catch (const std::exception& e) {
              err = e.what();
            }
            for (char& c : err)
              if (c == ',' || c == '\n') c = ';';
            out << key.str() << ',' << T << ',' << successes << ',';
            if (timing) {
              out << std::fixed << std::setprecision(3) << mean_rt;
              out.unsetf(std::ios::floatfield);
            } else {
              out << 0;
            }
            out << ',' << master_seed << ',' << err << '\n';
          }
  return out.str();
}

}  // namespace pairlab
