#include "degsplit/partitioner.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "degsplit/random.hpp"
#include "degsplit/verify.hpp"

namespace degsplit {

VertexSet sample_subset(const VertexSet& u, double p, std::mt19937_64& rng) {
  std::vector<Vertex> kept;
  for (Vertex v : u) {
    if (bernoulli(rng, p)) kept.push_back(v);
  }
  return VertexSet(std::move(kept));
}

VertexSet compute_L(const Graph& g, const VertexSet& w, std::size_t k) {
  auto in_w = w.mask(g.num_vertices());
  std::vector<Vertex> low;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) - neighbors_in(g, v, in_w) < k) low.push_back(v);
  }
  return VertexSet(std::move(low));
}

VertexSet out_closure(const Orientation& d, const VertexSet& l) {
  std::vector<Vertex> out;
  for (Vertex v : l) {
    auto nb = d.out_neighbors(v);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  return VertexSet(std::move(out));
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t index) {
  return std::mt19937_64(derive_seed(seed, index));
}

TrialOutcome run_trial(const Graph& g, std::size_t k, std::size_t d, const Claim1Structure& s,
                       const Calibration& cal, std::mt19937_64& rng) {
  const auto n = g.num_vertices();
  TrialOutcome out;
  out.W = sample_subset(set_union(s.X, s.Y), cal.p, rng);
  out.L = compute_L(g, out.W, k);
  out.Nplus = out_closure(s.D, out.L);

  const auto dominating = set_union(set_difference(VertexSet::range(n), out.W), out.Nplus);
  out.domination_lemma_holds = is_k_dominating(g, dominating, k);
  if (!out.domination_lemma_holds && d >= k) {
    throw StructureInvariantViolated("(V \\ W) ∪ N_D^+(L) is not k-dominating");
  }

  if (cal.which == Case::I) {
    out.B = set_difference(out.W, out.Nplus);
  } else {
    const auto y_w = set_intersection(s.Y, out.W);
    const auto in_yw = y_w.mask(n);
    std::vector<Vertex> heavy;
    for (Vertex x : set_intersection(s.X, out.W)) {
      if (neighbors_in(g, x, in_yw) >= d) heavy.push_back(x);
    }
    out.S_heavy = VertexSet(std::move(heavy));
    out.B = set_difference(set_union(y_w, out.S_heavy), out.Nplus);
  }
  out.A = set_difference(VertexSet::range(n), out.B);
  out.edges_B = edges_inside(g, out.B);
  out.accepted = !out.B.empty() && out.edges_B >= k * out.B.size() && is_k_dominating(g, out.A, k);
  return out;
}

void check_degree_precondition(const Graph& g, const Config& cfg) {
  if (cfg.allow_low_degree) return;
  const auto delta = min_degree(g);
  if (g.num_vertices() == 0 || delta < cfg.c * cfg.k) {
    throw DegreeTooLow("minimum degree " + std::to_string(delta) + " is below c*k = " +
                       std::to_string(cfg.c * cfg.k));
  }
}

namespace {

void check_config(const Config& cfg) {
  if (cfg.k < 1) throw InvalidArgument("k must be at least 1");
  if (cfg.c <= 5) throw InvalidArgument("c must exceed 5");
}

}  // namespace

std::variant<AcceptedTrial, FailureReport> find_AB(const Graph& g, const Claim1Structure& s,
                                                   const Calibration& cal, const Config& cfg) {
  check_config(cfg);
  check_degree_precondition(g, cfg);
  const auto d = cfg.out_degree();
  const auto threads = std::max<std::size_t>(1, cfg.threads);

  FailureReport failure;
  std::vector<std::optional<TrialOutcome>> batch;
  std::vector<std::exception_ptr> errors;
  for (std::size_t start = 0; start < cfg.max_retries; start += threads) {
    const auto count = std::min(threads, cfg.max_retries - start);
    batch.assign(count, std::nullopt);
    errors.assign(count, nullptr);
    auto work = [&](std::size_t j) {
      try {
        auto rng = trial_rng(cfg.seed, start + j);
        batch[j] = run_trial(g, cfg.k, d, s, cal, rng);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    };
    if (count == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(count);
      for (std::size_t j = 0; j < count; ++j) pool.emplace_back(work, j);
    }

    // Lowest index wins, so the outcome does not depend on scheduling.
    for (std::size_t j = 0; j < count; ++j) {
      if (errors[j]) std::rethrow_exception(errors[j]);
      const auto& trial = *batch[j];
      if (trial.accepted) {
        if (!verify_partition_AB(g, trial.A, trial.B, cfg.k).pass()) {
          throw StructureInvariantViolated("accepted trial fails the (A, B) verifier");
        }
        return AcceptedTrial{{trial.A, trial.B}, start + j};
      }
      failure.diagnostics.push_back({start + j, trial.B.size(), trial.edges_B, trial.L.size()});
      ++failure.trials;
    }
  }
  return failure;
}

std::variant<AcceptedTrial, FailureReport> find_AB(const Graph& g, const Config& cfg) {
  check_config(cfg);
  check_degree_precondition(g, cfg);
  const auto order = raise_order(g.num_vertices(), cfg.raise_order, cfg.seed);
  const auto structure = evolve_claim1(g, cfg.out_degree(), order);
  return find_AB(g, structure, select_case(structure.t, cfg), cfg);
}

PartitionST reduce_to_ST(const Graph& g, std::size_t k, const VertexSet& a, const VertexSet& b) {
  auto pre = verify_partition_AB(g, a, b, k);
  if (!pre.pass()) throw InvalidArgument("(A, B) does not satisfy the reduction precondition:\n" + pre.to_string());
  auto core = peel_to_min_degree(g, b, k);
  if (core.empty()) throw EmptyCore("the k-core of G[B] is empty");
  PartitionST st;
  st.T = set_difference(VertexSet::range(g.num_vertices()), core);
  st.S = std::move(core);
  return st;
}

Calibration select_case(std::size_t t, const Config& cfg) {
  bool case_one = false;
  switch (cfg.case_override) {
    case CaseOverride::Auto:
      case_one = is_case_one(t, cfg.k, cfg.c);
      break;
    case CaseOverride::ForceI:
      case_one = true;
      break;
    case CaseOverride::ForceII:
      case_one = false;
      break;
  }
  return case_one ? case_one_calibration(cfg.k, t, cfg.c) : calibrate_p(cfg.k, t, cfg.c);
}

PartitionResult partition(const Graph& g, const Config& cfg) {
  check_config(cfg);
  check_degree_precondition(g, cfg);
  const auto d = cfg.out_degree();

  const auto order = raise_order(g.num_vertices(), cfg.raise_order, cfg.seed);
  const auto structure = evolve_claim1(g, d, order);
  const auto cal = select_case(structure.t, cfg);

  auto found = find_AB(g, structure, cal, cfg);
  if (auto* failure = std::get_if<FailureReport>(&found)) throw LasVegasFailure(std::move(*failure));
  const auto& accepted = std::get<AcceptedTrial>(found);

  PartitionResult result;
  result.partition = reduce_to_ST(g, cfg.k, accepted.partition.A, accepted.partition.B);
  result.verification = verify_partition_ST(g, result.partition.S, result.partition.T, cfg.k);
  if (!result.verification.pass()) {
    throw StructureInvariantViolated("reduced partition fails verification:\n" + result.verification.to_string());
  }
  result.which = cal.which;
  result.t = structure.t;
  result.p = cal.p;
  result.trials_used = accepted.trial_index + 1;
  result.seed = cfg.seed;
  return result;
}

}  // namespace degsplit
