#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "pairlab/channel.hpp"
#include "pairlab/graph.hpp"
#include "pairlab/group.hpp"

namespace pairlab {

struct SearchSpaceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedOp : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RecoverStatus { Recovered, Failed };
enum class FailReason { None, Disconnected, Inconsistent };

struct Diagnostics {
  long long pruned_edges = 0;   // edges dropped by cycle screening
  int components = 1;           // components of the retained edge set
  bool tie = false;             // multiple maximizers with distinct relation matrices
  bool converged = true;        // power iteration convergence (spectral)
  long long states_examined = 0;
  long long budget_used = 0;
};

struct RecoveryResult {
  RecoverStatus status = RecoverStatus::Failed;
  FailReason reason = FailReason::None;
  std::optional<Assignment> assignment;
  long long score = 0;
  Diagnostics diag;

  bool recovered() const { return status == RecoverStatus::Recovered; }
  std::string to_json() const;
};

struct RecoverOptions {
  long long search_budget = 100'000'000;  // exhaustive: max enumerated states
  long long walk_budget = 100'000'000;    // cycle k>3: max enumerated walks
};

// Number of edges whose observation matches the assignment — the objective
// maximized by the recovery algorithms.
long long compatibility_score(const Graph& g, const ObservationSet& obs,
                              const Assignment& x, const RelationOp& op,
                              const GroupSpec& gs);

// Global maximizer of the compatibility score; lexicographically smallest
// among maximizers, with a tie flag when maximizers induce distinct relation
// matrices. For shift-invariant ops (Difference) vertex 0 is pinned to 0.
RecoveryResult recover_exhaustive(const Graph& g, const ObservationSet& obs,
                                  const RelationOp& op, const GroupSpec& gs,
                                  const RecoverOptions& opts = {});

// Zero-sum k-cycle screening followed by spanning-tree propagation.
// Difference op only.
RecoveryResult recover_cycle(const Graph& g, const ObservationSet& obs,
                             const GroupSpec& gs, int k,
                             const RecoverOptions& opts = {});

// Roots-of-unity embedding + power iteration + coordinate-ascent refinement.
// Difference op only; M <= 2^20.
RecoveryResult recover_spectral(const Graph& g, const ObservationSet& obs,
                                const GroupSpec& gs, int refine_rounds);

// Best-of-restarts coordinate ascent from random initializations.
RecoveryResult recover_local_search(const Graph& g, const ObservationSet& obs,
                                    const RelationOp& op, const GroupSpec& gs,
                                    int restarts, std::uint64_t seed);

// Exact recovery up to the unrecoverable global state: relation matrices
// agree entrywise.
bool success(const Assignment& xhat, const Assignment& xtrue,
             const RelationOp& op, const GroupSpec& gs);

}  // namespace pairlab
