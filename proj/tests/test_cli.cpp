#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "cli.hpp"
#include "degsplit/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = degsplit::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("degsplit_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("cli: generate, partition, verify") {
  TempDir dir;
  const auto graph = dir / "k101.txt";
  const auto part = dir / "out.json";
  REQUIRE(invoke({"generate", "clique", "--n", "101", "--out", graph}).code == 0);

  auto r = invoke({"partition", "--input", graph, "--k", "2", "--seed", "7", "--json", part});
  REQUIRE(r.code == 0);
  auto j = degsplit::Json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(j["case"] == "I");
  CHECK(j["n"] == 101);
  CHECK(j["S"].size() + j["T"].size() == 101);
  CHECK(read_file(part) == r.out);

  // Same seed, same bytes.
  CHECK(invoke({"partition", "--input", graph, "--k", "2", "--seed", "7"}).out == r.out);

  auto ok = invoke({"verify", "--input", graph, "--k", "2", "--partition", part});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  // Put a T vertex into S as well, so the sides overlap.
  j["S"].push_back(j["T"][0]);
  write_file(part, j.dump());
  auto bad = invoke({"verify", "--input", graph, "--k", "2", "--partition", part});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli: precondition and usage errors exit with 3") {
  TempDir dir;
  const auto c5 = dir / "c5.txt";
  write_file(c5, "0 1\n1 2\n2 3\n3 4\n4 0\n");
  auto r = invoke({"partition", "--input", c5, "--k", "1"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  CHECK(invoke({"frobnicate"}).code == 3);
  CHECK(invoke({}).code == 3);
  CHECK(invoke({"partition", "--k", "1"}).code == 3);
  CHECK(invoke({"partition", "--input", dir / "missing.txt", "--k", "1"}).code == 3);

  const auto loop = dir / "loop.txt";
  write_file(loop, "0 1\n2 2\n");
  auto parse = invoke({"structure", "--input", loop, "--out-degree", "1"});
  CHECK(parse.code == 3);
  CHECK(parse.err.find("line 2") != std::string::npos);

  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("cli: Las Vegas failure exits with 2 and reports trials") {
  TempDir dir;
  const auto graph = dir / "k101.txt";
  REQUIRE(invoke({"generate", "clique", "--n", "101", "--out", graph}).code == 0);
  auto r = invoke({"partition", "--input", graph, "--k", "2", "--max-retries", "0"});
  CHECK(r.code == 2);
  auto j = degsplit::Json::parse(r.out);
  CHECK(j["trials"] == 0);
}

TEST_CASE("cli: structure and calibrate") {
  TempDir dir;
  const auto star = dir / "star.txt";
  write_file(star, "# star\n0 1\n0 2\n0 3\n");
  auto r = invoke({"structure", "--input", star, "--out-degree", "1"});
  REQUIRE(r.code == 0);
  auto j = degsplit::Json::parse(r.out);
  CHECK(j["t"] == 3);
  CHECK(j["X"] == degsplit::Json::array({1, 2, 3}));
  CHECK(j["Y"] == degsplit::Json::array({0}));
  CHECK(j["y_last"] == 0);
  CHECK(j["arcs"].size() == 4);
  CHECK(j["caps_at_stop"]["0"] == 3);

  auto cal = invoke({"calibrate", "--k", "60", "--t", "1e12"});
  REQUIRE(cal.code == 0);
  auto c = degsplit::Json::parse(cal.out);
  CHECK(c["case"] == "II");
  CHECK(c["p"].get<double>() > 0);
  CHECK(c["p"].get<double>() < 0.5);

  CHECK(invoke({"calibrate", "--k", "60", "--t", "1e12", "--case", "auto"}).out.find("\"I\"") !=
        std::string::npos);
  CHECK(invoke({"calibrate", "--k", "1", "--t", "10"}).code == 3);
}

TEST_CASE("cli: generators write parseable edge lists") {
  TempDir dir;
  const auto ko = dir / "ko.txt";
  REQUIRE(invoke({"generate", "kuhn-osthus", "--n", "4", "--ell", "2", "--out", ko}).code == 0);
  CHECK(read_file(ko).rfind("n 10\n", 0) == 0);

  const auto g1 = dir / "g1.txt";
  const auto g2 = dir / "g2.txt";
  REQUIRE(invoke({"generate", "gnp", "--n", "60", "--p", "0.3", "--seed", "5", "--out", g1}).code == 0);
  REQUIRE(invoke({"generate", "gnp", "--n", "60", "--p", "0.3", "--seed", "5", "--out", g2}).code == 0);
  CHECK(read_file(g1) == read_file(g2));
  CHECK(invoke({"generate", "gnp", "--n", "60", "--p", "1.5", "--out", g1}).code == 3);
}
