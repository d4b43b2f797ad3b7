#include <cmath>

#include "doctest.h"

#include "degsplit/errors.hpp"
#include "degsplit/generators.hpp"
#include "degsplit/partitioner.hpp"
#include "degsplit/verify.hpp"
#include "oracles.hpp"

using namespace degsplit;

namespace {

Graph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

Claim1Structure structure_for(const Graph& g, std::size_t d) {
  return evolve_claim1(g, d, raise_order(g.num_vertices(), RaiseOrder::Ascending, 0));
}

}  // namespace

TEST_CASE("sample_subset") {
  std::mt19937_64 rng(1);
  auto u = VertexSet::range(100);
  CHECK(sample_subset(u, 0.0, rng).empty());
  CHECK(sample_subset(u, 1.0, rng) == u);

  double total = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) total += static_cast<double>(sample_subset(u, 0.5, rng).size());
  const double sigma_of_mean = std::sqrt(100 * 0.25 / trials);
  CHECK(std::fabs(total / trials - 50) <= 3 * sigma_of_mean);

  auto a = trial_rng(7, 3);
  auto b = trial_rng(7, 3);
  CHECK(sample_subset(u, 0.3, a) == sample_subset(u, 0.3, b));
}

TEST_CASE("compute_L") {
  auto k5 = clique(5);
  CHECK(compute_L(k5, {}, 2).empty());
  CHECK(compute_L(k5, VertexSet::range(5), 1) == VertexSet::range(5));
  std::vector<std::pair<Vertex, Vertex>> path{{0, 1}, {1, 2}};
  CHECK(compute_L(Graph::from_edges(3, path), {1}, 1) == VertexSet{0, 2});
}

TEST_CASE("out_closure") {
  Orientation circulant({{1}, {2}, {3}, {0}});
  CHECK(out_closure(circulant, {}).empty());
  CHECK(out_closure(circulant, {0, 1}) == VertexSet{1, 2});

  auto g = clique(8);
  auto s = structure_for(g, 3);
  CHECK(out_closure(s.D, {4}).size() == 3);
}

TEST_CASE("run_trial: Case I on K_101") {
  auto g = clique(101);
  auto s = structure_for(g, 10);
  auto cal = case_one_calibration(2, static_cast<double>(s.t), 50);
  int accepted = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    auto rng = trial_rng(5, i);
    auto trial = run_trial(g, 2, 10, s, cal, rng);
    CHECK(trial.domination_lemma_holds);
    CHECK(trial.S_heavy.empty());
    CHECK(trial.B == set_difference(trial.W, trial.Nplus));
    CHECK(set_union(trial.A, trial.B) == VertexSet::range(101));
    if (trial.accepted) {
      ++accepted;
      CHECK(verify_partition_AB(g, trial.A, trial.B, 2).pass());
      CHECK(2 * trial.edges_B >= 2 * 2 * trial.B.size());
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("run_trial: Case II sets and an empty sample") {
  std::mt19937_64 grng(8);
  auto g = oracle::random_graph(60, 0.5, grng);
  auto s = structure_for(g, 5);
  Calibration cal;
  cal.which = Case::II;
  cal.p = 0.3;
  for (std::size_t i = 0; i < 30; ++i) {
    auto rng = trial_rng(1, i);
    auto trial = run_trial(g, 1, 5, s, cal, rng);
    auto yw = set_intersection(s.Y, trial.W);
    auto in_yw = yw.mask(60);
    for (Vertex x : trial.S_heavy) {
      CHECK(s.X.contains(x));
      CHECK(trial.W.contains(x));
      CHECK(neighbors_in(g, x, in_yw) >= 5);
    }
    CHECK(trial.B == set_difference(set_union(yw, trial.S_heavy), trial.Nplus));
    auto dominating = set_union(set_difference(VertexSet::range(60), trial.W), trial.Nplus);
    CHECK(std::includes(trial.A.begin(), trial.A.end(), dominating.begin(), dominating.end()));
  }

  cal.p = 0.0;
  auto rng = trial_rng(1, 0);
  auto empty = run_trial(g, 1, 5, s, cal, rng);
  CHECK(empty.W.empty());
  CHECK(empty.B.empty());
  CHECK_FALSE(empty.accepted);
}

TEST_CASE("find_AB") {
  Config cfg;
  cfg.k = 1;
  CHECK_THROWS_AS(find_AB(cycle(5), cfg), DegreeTooLow);

  auto g = clique(101);
  cfg.k = 2;
  auto found = find_AB(g, cfg);
  REQUIRE(std::holds_alternative<AcceptedTrial>(found));
  const auto& ab = std::get<AcceptedTrial>(found).partition;
  CHECK(verify_partition_AB(g, ab.A, ab.B, 2).pass());

  cfg.max_retries = 0;
  auto none = find_AB(g, cfg);
  REQUIRE(std::holds_alternative<FailureReport>(none));
  CHECK(std::get<FailureReport>(none).trials == 0);
}

TEST_CASE("find_AB failure report carries per-trial diagnostics") {
  // With sampling probability 0 every trial has B = ∅ and is rejected.
  auto g = clique(12);
  Config cfg;
  cfg.k = 1;
  cfg.allow_low_degree = true;
  cfg.d = 2;
  cfg.max_retries = 7;
  auto s = structure_for(g, 2);
  Calibration cal;
  cal.which = Case::II;
  cal.p = 0.0;
  auto r = find_AB(g, s, cal, cfg);
  REQUIRE(std::holds_alternative<FailureReport>(r));
  const auto& f = std::get<FailureReport>(r);
  CHECK(f.trials == 7);
  REQUIRE(f.diagnostics.size() == 7);
  CHECK(f.diagnostics[6].index == 6);
  CHECK(f.diagnostics[0].size_B == 0);
}

TEST_CASE("reduce_to_ST") {
  // B induces K_5 (k = 2) and every vertex has two neighbors in A.
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < 11; ++u) {
    for (Vertex v = u + 1; v < 11; ++v) {
      if (u < 5 && v >= 5 && (v - 5 != u && v - 6 != u)) continue;
      e.emplace_back(u, v);
    }
  }
  auto g = Graph::from_edges(11, e);
  VertexSet b{0, 1, 2, 3, 4};
  auto a = set_difference(VertexSet::range(11), b);
  auto st = reduce_to_ST(g, 2, a, b);
  CHECK(st.S == b);
  CHECK(st.T == a);
  CHECK(verify_partition_ST(g, st.S, st.T, 2).pass());

  CHECK_THROWS_AS(reduce_to_ST(g, 2, VertexSet::range(11), {}), InvalidArgument);
}

TEST_CASE("partition end to end") {
  Config cfg;
  cfg.k = 2;
  cfg.seed = 7;
  auto g = clique(101);
  auto r = partition(g, cfg);
  CHECK(r.verification.pass());
  CHECK(r.which == Case::I);
  CHECK(r.p == 0.5);
  auto in_t = r.partition.T.mask(101);
  for (Vertex v : r.partition.S) CHECK(neighbors_in(g, v, in_t) >= 2);

  // Reproducible, and independent of the thread count.
  auto again = partition(g, cfg);
  CHECK(again.partition.S == r.partition.S);
  CHECK(again.trials_used == r.trials_used);
  cfg.threads = 4;
  auto threaded = partition(g, cfg);
  CHECK(threaded.partition.S == r.partition.S);
  CHECK(threaded.trials_used == r.trials_used);

  cfg.raise_order = RaiseOrder::SeededShuffle;
  CHECK(partition(g, cfg).verification.pass());
}

TEST_CASE("partition preconditions and forced cases") {
  Config cfg;
  cfg.k = 1;
  CHECK_THROWS_AS(partition(cycle(5), cfg), DegreeTooLow);

  cfg.k = 2;
  cfg.case_override = CaseOverride::ForceII;
  CHECK_THROWS_AS(partition(clique(101), cfg), NoRootInRange);

  cfg.k = 0;
  CHECK_THROWS_AS(partition(clique(101), cfg), InvalidArgument);
}

TEST_CASE("partition in low-degree empirical mode") {
  std::mt19937_64 grng(4);
  auto g = oracle::random_graph(80, 0.5, grng);
  Config cfg;
  cfg.k = 2;
  cfg.allow_low_degree = true;
  cfg.seed = 3;
  cfg.case_override = CaseOverride::ForceI;
  auto r = partition(g, cfg);
  CHECK(verify_partition_ST(g, r.partition.S, r.partition.T, 2).pass());
}
