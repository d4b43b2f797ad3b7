#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "degsplit/errors.hpp"
#include "degsplit/graph.hpp"
#include "degsplit/numerics.hpp"
#include "degsplit/orientation.hpp"
#include "degsplit/report.hpp"

namespace degsplit {

enum class CaseOverride { Auto, ForceI, ForceII };

struct Config {
  std::size_t k = 1;
  std::size_t c = 50;
  /// Out-degree of the orientation; 0 means 5k.
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::size_t max_retries = 1000;
  CaseOverride case_override = CaseOverride::Auto;
  bool allow_low_degree = false;
  RaiseOrder raise_order = RaiseOrder::Ascending;
  /// Trials evaluated concurrently; results do not depend on it.
  std::size_t threads = 1;

  std::size_t out_degree() const { return d == 0 ? 5 * k : d; }
};

/// One random trial of the sampling construction.
struct TrialOutcome {
  VertexSet W;
  VertexSet L;
  VertexSet Nplus;
  VertexSet S_heavy;  ///< empty in Case I
  VertexSet A;
  VertexSet B;
  std::size_t edges_B = 0;
  /// (V \ W) ∪ N_D^+(L) is k-dominating.
  bool domination_lemma_holds = false;
  bool accepted = false;
};

struct TrialDiagnostics {
  std::size_t index = 0;
  std::size_t size_B = 0;
  std::size_t edges_B = 0;
  std::size_t size_L = 0;
};

/// Per-trial diagnostics after the retry budget ran out.
struct FailureReport {
  std::size_t trials = 0;
  std::vector<TrialDiagnostics> diagnostics;
};

/// Thrown by partition() when no trial was accepted.
class LasVegasFailure : public Error {
 public:
  explicit LasVegasFailure(FailureReport report)
      : Error("no accepted trial in " + std::to_string(report.trials) + " attempts"),
        report_(std::move(report)) {}
  const FailureReport& report() const noexcept { return report_; }

 private:
  FailureReport report_;
};

struct PartitionResult {
  PartitionST partition;
  Case which = Case::I;
  std::size_t t = 0;
  double p = 0.5;
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;
  Report verification;
};

/// Keeps each element of `u` independently with probability p.
VertexSet sample_subset(const VertexSet& u, double p, std::mt19937_64& rng);

/// Vertices with fewer than k neighbors outside W.
VertexSet compute_L(const Graph& g, const VertexSet& w, std::size_t k);

/// Union of the out-neighborhoods of L.
VertexSet out_closure(const Orientation& d, const VertexSet& l);

/// Generator for trial `index` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t index);

/// One sample: W ⊆ X ∪ Y with probability cal.p, then L, N_D^+(L) and B
/// according to cal.which. `d` is the heavy-vertex threshold used in Case II.
/// Throws StructureInvariantViolated if the domination lemma fails while d >= k.
TrialOutcome run_trial(const Graph& g, std::size_t k, std::size_t d, const Claim1Structure& s,
                       const Calibration& cal, std::mt19937_64& rng);

struct AcceptedTrial {
  PartitionAB partition;
  std::size_t trial_index = 0;
};

/// Trials with seeds derived from (cfg.seed, index) until one is accepted.
/// Throws DegreeTooLow when δ(G) < c·k unless cfg.allow_low_degree.
std::variant<AcceptedTrial, FailureReport> find_AB(const Graph& g, const Claim1Structure& s,
                                                   const Calibration& cal, const Config& cfg);

/// Builds the structure and calibration from `cfg`, then runs the trials.
std::variant<AcceptedTrial, FailureReport> find_AB(const Graph& g, const Config& cfg);

/// S = k-core of G[B], T = V \ S. Requires (A, B) to pass verify_partition_AB.
PartitionST reduce_to_ST(const Graph& g, std::size_t k, const VertexSet& a, const VertexSet& b);

/// The full pipeline: structure, case selection, calibration, trials,
/// reduction, verification. Only verified partitions are returned.
PartitionResult partition(const Graph& g, const Config& cfg);

/// Case selection and calibration for a structure with cap t.
Calibration select_case(std::size_t t, const Config& cfg);

/// Throws DegreeTooLow when δ(G) < c·k and low degree is not allowed.
void check_degree_precondition(const Graph& g, const Config& cfg);

}  // namespace degsplit
