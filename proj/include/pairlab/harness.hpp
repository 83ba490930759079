#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pairlab/graph.hpp"
#include "pairlab/group.hpp"
#include "pairlab/recover.hpp"

namespace pairlab {

struct AlgorithmSpec {
  enum class Kind { Exhaustive, Cycle, Spectral, LocalSearch };
  Kind kind = Kind::Exhaustive;
  int k = 3;              // cycle order
  int restarts = 8;       // local search
  int refine_rounds = 20; // spectral
  RecoverOptions opts;

  std::string name() const;
  static AlgorithmSpec parse(const std::string& name);
};

struct TrialConfig {
  GraphModel model;
  int n = 0;
  std::uint64_t M = 2;
  RelationOp op;
  double p = 1.0;
  AlgorithmSpec alg;
  std::uint64_t master_seed = 0;
  bool fixed_graph = false;  // quenched mode: one graph shared by all trials
};

struct TrialOutcome {
  bool success = false;
  long long score = 0;
  double runtime_ms = 0.0;
  std::uint64_t trial_seed = 0;
  bool error = false;
  std::string error_msg;
  RecoverStatus status = RecoverStatus::Failed;
};

struct RunResult {
  int success_count = 0;
  std::vector<TrialOutcome> outcomes;
};

// T independent trials: fresh graph (unless quenched), uniform ground truth,
// corrupt, recover, judge by relation-matrix equality. Deterministic given
// master_seed; trial t depends only on (master_seed, t). Parallelism is
// capped by the PAIRLAB_THREADS environment variable.
RunResult run_trials(const TrialConfig& cfg, int T);

struct ThresholdEstimate {
  double p_hat = 1.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  int trials_per_point = 0;
  std::vector<double> grid;
  std::vector<double> success_fraction;  // NaN for points not evaluated
  bool crossed = false;  // false: success stayed below 0.5 everywhere

  std::string to_json() const;
};

// Success probability per grid point (ascending scan, stopping after the
// first crossing); p_hat interpolates the 0.5 crossing, Wilson 95% intervals
// at the bracketing points give [ci_low, ci_high].
ThresholdEstimate estimate_threshold(const TrialConfig& cfg_template,
                                     const std::vector<double>& p_grid, int T);

// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(int successes, int trials,
                                          double z = 1.959963984540054);

struct PredictedRate {
  std::string regime;  // information-limited | transition | connectivity-limited
  double p_predicted = 0.0;
  double fano_lower_bound = 0.0;
};

// Rate formulas with all constants set to 1 and poly-log factors
// instantiated as log n (natural log).
PredictedRate predicted_rate(int n, std::uint64_t M, double d_max,
                             const std::string& graph_kind);

// Sweep over a cartesian grid described by a JSON document; one CSV row per
// cell. Resumable: rows already present in `existing_csv` are kept verbatim
// and their cells skipped. `timing` off writes 0 for mean_runtime_ms so the
// output is byte-stable.
std::string run_sweep(const std::string& config_json,
                      const std::string& existing_csv, bool timing);

int env_thread_cap();

}  // namespace pairlab
