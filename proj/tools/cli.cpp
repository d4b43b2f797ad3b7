#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "degsplit/errors.hpp"
#include "degsplit/generators.hpp"
#include "degsplit/json_io.hpp"
#include "degsplit/numerics.hpp"
#include "degsplit/orientation.hpp"
#include "degsplit/partitioner.hpp"
#include "degsplit/verify.hpp"

namespace degsplit::cli {

namespace {

Graph load_graph(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  auto parsed = parse_edge_list(in);
  if (parsed.duplicate_edges > 0) {
    err << "warning: collapsed " << parsed.duplicate_edges << " duplicate edge(s) in " << path << '\n';
  }
  return std::move(parsed.graph);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::size_t env_threads() {
  const char* raw = std::getenv("DEGSPLIT_THREADS");
  if (!raw || !*raw) return 1;
  char* end = nullptr;
  const auto value = std::strtoul(raw, &end, 10);
  if (*end != '\0' || value == 0) return 1;
  return value;
}

struct GenerateArgs {
  std::size_t n = 0;
  std::size_t ell = 0;
  double p = 0.5;
  std::size_t min_degree = 0;
  std::size_t retries = 100;
  std::uint64_t seed = 0;
  std::string out;
};

struct StructureArgs {
  std::string input;
  std::size_t k = 0;
  std::size_t d = 0;
  std::string order = "ascending";
  std::uint64_t seed = 0;
};

struct CalibrateArgs {
  std::size_t k = 0;
  double t = 0;
  std::size_t c = 50;
  std::string which = "2";
};

struct PartitionArgs {
  std::string input;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t max_retries = 1000;
  std::size_t c = 50;
  std::size_t d = 0;
  std::string force_case = "auto";
  std::string order = "ascending";
  bool allow_low_degree = false;
  std::string json_out;
};

struct VerifyArgs {
  std::string input;
  std::size_t k = 0;
  std::string partition;
  std::string mode = "st";
};

int run_structure(const StructureArgs& a, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(a.input, err);
  if ((a.k == 0) == (a.d == 0)) throw InvalidArgument("give exactly one of --k or --out-degree");
  const auto d = a.d != 0 ? a.d : 5 * a.k;
  const auto kind = a.order == "shuffle" ? RaiseOrder::SeededShuffle : RaiseOrder::Ascending;
  const auto s = evolve_claim1(g, d, raise_order(g.num_vertices(), kind, a.seed));
  out << canonical_dump(structure_to_json(s));
  return 0;
}

int run_calibrate(const CalibrateArgs& a, std::ostream& out) {
  Calibration cal;
  if (a.which == "1" || (a.which == "auto" && is_case_one(a.t, a.k, a.c))) {
    cal = case_one_calibration(a.k, a.t, a.c);
  } else {
    cal = calibrate_p(a.k, a.t, a.c);
  }
  out << canonical_dump(calibration_to_json(cal));
  return 0;
}

int run_partition(const PartitionArgs& a, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(a.input, err);
  Config cfg;
  cfg.k = a.k;
  cfg.c = a.c;
  cfg.d = a.d;
  cfg.seed = a.seed;
  cfg.max_retries = a.max_retries;
  cfg.allow_low_degree = a.allow_low_degree;
  cfg.case_override = a.force_case == "1"   ? CaseOverride::ForceI
                      : a.force_case == "2" ? CaseOverride::ForceII
                                            : CaseOverride::Auto;
  cfg.raise_order = a.order == "shuffle" ? RaiseOrder::SeededShuffle : RaiseOrder::Ascending;
  cfg.threads = env_threads();

  try {
    const auto result = partition(g, cfg);
    // partition() only returns verified results; re-check before anything is written.
    const auto recheck = verify_partition_ST(g, result.partition.S, result.partition.T, cfg.k);
    if (!recheck.pass()) {
      err << "error: partition failed re-verification\n" << recheck.to_string();
      return 1;
    }
    const auto text = canonical_dump(partition_to_json(g, cfg.k, result));
    if (!a.json_out.empty()) write_text(a.json_out, text);
    out << text;
    return 0;
  } catch (const LasVegasFailure& e) {
    err << "error: " << e.what() << '\n';
    out << canonical_dump(failure_to_json(e.report()));
    return 2;
  }
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(a.input, err);
  std::ifstream in(a.partition);
  if (!in) throw InvalidArgument("cannot open " + a.partition);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed partition file: ") + e.what());
  }
  const Report r = a.mode == "ab"
                       ? verify_partition_AB(g, vertex_set_member(j, "A"), vertex_set_member(j, "B"), a.k)
                       : verify_partition_ST(g, vertex_set_member(j, "S"), vertex_set_member(j, "T"), a.k);
  out << r.to_string();
  return r.pass() ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-degree graph partitioning with a k-dominating side", "degsplit"};
  app.require_subcommand(1);

  // generate
  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a test graph as an edge list");
  generate->require_subcommand(1);
  auto* ko = generate->add_subcommand("kuhn-osthus", "Membership graph of [n] and its ell-subsets");
  ko->add_option("--n", gen.n, "ground set size")->required();
  ko->add_option("--ell", gen.ell, "subset size")->required();
  auto* gnp_cmd = generate->add_subcommand("gnp", "Erdős–Rényi G(n, p)");
  gnp_cmd->add_option("--n", gen.n, "vertex count")->required();
  gnp_cmd->add_option("--p", gen.p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gnp_cmd->add_option("--min-degree", gen.min_degree, "resample until the minimum degree is reached");
  gnp_cmd->add_option("--retries", gen.retries, "resampling budget");
  auto* clique_cmd = generate->add_subcommand("clique", "Complete graph K_n");
  clique_cmd->add_option("--n", gen.n, "vertex count")->required();
  for (auto* sub : {ko, gnp_cmd, clique_cmd}) {
    sub->add_option("--seed", gen.seed, "random seed");
    sub->add_option("--out", gen.out, "output edge-list file")->required();
  }

  // structure
  StructureArgs st;
  auto* structure = app.add_subcommand("structure", "Minimal-cap orientation with its tight sets X and Y");
  structure->add_option("--input", st.input, "edge-list file")->required();
  structure->add_option("--k", st.k, "uses out-degree 5k");
  structure->add_option("--out-degree", st.d, "explicit out-degree");
  structure->add_option("--order", st.order, "cap raise order")->check(CLI::IsMember({"ascending", "shuffle"}));
  structure->add_option("--seed", st.seed, "seed for --order shuffle");

  // calibrate
  CalibrateArgs cal;
  auto* calibrate = app.add_subcommand("calibrate", "Solve p * Pr[Bin((c-5)k, p) >= 5k] = 5k/t");
  calibrate->add_option("--k", cal.k, "k")->required()->check(CLI::PositiveNumber);
  calibrate->add_option("--t", cal.t, "maximum in-degree t (may be written as 1e40)")->required();
  calibrate->add_option("--c", cal.c, "degree constant c");
  calibrate->add_option("--case", cal.which, "2 solves for p, 1 reports p = 1/2, auto picks by t")
      ->check(CLI::IsMember({"auto", "1", "2"}));

  // partition
  PartitionArgs pa;
  auto* part = app.add_subcommand("partition", "Compute a verified (S, T) partition");
  part->add_option("--input", pa.input, "edge-list file")->required();
  part->add_option("--k", pa.k, "target minimum degree")->required()->check(CLI::PositiveNumber);
  part->add_option("--seed", pa.seed, "random seed");
  part->add_option("--max-retries", pa.max_retries, "trial budget");
  part->add_option("--c", pa.c, "degree constant c");
  part->add_option("--out-degree", pa.d, "orientation out-degree (default 5k)");
  part->add_option("--force-case", pa.force_case, "auto, 1 or 2")->check(CLI::IsMember({"auto", "1", "2"}));
  part->add_option("--order", pa.order, "cap raise order")->check(CLI::IsMember({"ascending", "shuffle"}));
  part->add_flag("--allow-low-degree", pa.allow_low_degree, "skip the minimum degree >= c*k check");
  part->add_option("--json", pa.json_out, "also write the JSON result to this file");

  // verify
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a partition file against a graph");
  verify->add_option("--input", va.input, "edge-list file")->required();
  verify->add_option("--k", va.k, "target minimum degree")->required();
  verify->add_option("--partition", va.partition, "JSON with S/T or A/B arrays")->required();
  verify->add_option("--mode", va.mode, "st or ab")->check(CLI::IsMember({"st", "ab"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 3;
  }

  try {
    if (generate->parsed()) {
      Graph g;
      if (ko->parsed()) {
        g = kuhn_osthus(gen.n, gen.ell);
      } else if (gnp_cmd->parsed()) {
        g = gen.min_degree > 0 ? gnp_min_degree(gen.n, gen.p, gen.min_degree, gen.retries, gen.seed)
                               : gnp(gen.n, gen.p, gen.seed);
      } else {
        g = clique(gen.n);
      }
      std::ostringstream text;
      write_edge_list(text, g);
      write_text(gen.out, text.str());
      return 0;
    }
    if (structure->parsed()) return run_structure(st, out, err);
    if (calibrate->parsed()) return run_calibrate(cal, out);
    if (part->parsed()) return run_partition(pa, out, err);
    if (verify->parsed()) return run_verify(va, out, err);
  } catch (const StructureInvariantViolated& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}

}  // namespace degsplit::cli
