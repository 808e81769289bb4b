#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lpbsa/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpbsa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lpbsa::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("lpbsa_cli_" + name);
  std::filesystem::remove_all(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"run", "--pop"}).code == 2);
  CHECK(run({"run", "--algorithm", "ga"}).code == 2);
  CHECK(run({"run", "--tf", "TF42"}).code == 2);
  CHECK(run({"run", "--sub", "3"}).code == 2);
  CHECK(run({"bench", "--tf", "TF1"}).code == 2);
  CHECK(run({"compare"}).code == 2);
  CHECK(run({"run", "--tf", "TF14", "--dim", "3"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bench") != std::string::npos);
  CHECK(run({"bench", "--help"}).code == 0);
}

TEST_CASE("run prints the best point") {
  const auto r = run({"run", "--tf", "TF1", "--dim", "2", "--budget", "2000", "--seed", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("function TF1\n") != std::string::npos);
  CHECK(r.out.find("evaluations ") != std::string::npos);
  CHECK(r.out == run({"run", "--tf", "TF1", "--dim", "2", "--budget", "2000", "--seed", "3"}).out);
  CHECK(r.out != run({"run", "--tf", "TF1", "--dim", "2", "--budget", "2000", "--seed", "4"}).out);
}

TEST_CASE("bench --list needs no seed") {
  const auto r = run({"bench", "--list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("TF19") != std::string::npos);
}

TEST_CASE("trace reproduces the averages and is byte-stable") {
  const auto a = run({"trace"});
  REQUIRE(a.code == 0);
  CHECK(a.out.size() > 1000);
  CHECK(a.out.substr(a.out.size() - 27) == "28889053 52649382 55693299\n");
  CHECK(a.out == run({"trace"}).out);
}

TEST_CASE("trace with an explicit script file") {
  const auto dir = scratch("trace");
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.script";
  write(good, slurp(LPBSA_DATA_DIR "/case_study.script"));
  CHECK(run({"trace", "--script", good.string()}).out == run({"trace"}).out);

  const auto bad = dir / "bad.script";
  write(bad, "INIT B1 1 2\nWHAT\n");
  const auto parse = run({"trace", "--script", bad.string()});
  CHECK(parse.code == 3);
  CHECK(parse.err.find("line 2") != std::string::npos);

  const auto short_script = dir / "short.script";
  write(short_script, "INIT B1 1 2\n");
  const auto desync = run({"trace", "--script", short_script.string()});
  CHECK(desync.code == 3);
  CHECK(desync.err.find("desync") != std::string::npos);

  CHECK(run({"trace", "--script", (dir / "missing.script").string()}).code == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bench writes identical files for identical invocations") {
  const auto dir = scratch("bench");
  const std::vector<std::string> base{"bench", "--tf", "TF1,TF16", "--runs", "3", "--budget", "800",
                                      "--dim", "0", "--seed", "9", "--with-paper-refs"};
  auto a = base;
  a.insert(a.end(), {"--out", (dir / "a").string()});
  auto b = base;
  b.insert(b.end(), {"--out", (dir / "b").string()});
  const auto ra = run(a);
  const auto rb = run(b);
  REQUIRE(ra.code == 0);
  REQUIRE(rb.code == 0);
  CHECK(ra.out == rb.out);
  for (const char* f : {"stats.csv", "finals.csv", "convergence.csv", "comparison.csv", "config.txt"}) {
    CAPTURE(f);
    CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));
    CHECK(!slurp(dir / "a" / f).empty());
  }
  CHECK(slurp(dir / "a" / "config.txt").find("seed = 9") != std::string::npos);
  CHECK(slurp(dir / "a" / "comparison.csv").find("ref_GA_AVA") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bench reports unwritable output with code 4") {
  const auto blocker = scratch("blocker");
  write(blocker, "x");
  const auto r = run({"bench", "--tf", "TF1", "--runs", "1", "--budget", "300", "--dim", "2",
                      "--seed", "1", "--algorithms", "lpb", "--out", (blocker / "out").string()});
  CHECK(r.code == 4);
  std::filesystem::remove_all(blocker);
}

TEST_CASE("config file values apply and flags override them") {
  const auto dir = scratch("config");
  std::filesystem::create_directories(dir);
  write(dir / "cfg.ini", "budget = 400\ndim = 2\ntf = TF9\n");
  const auto from_file = run({"run", "--config", (dir / "cfg.ini").string()});
  REQUIRE(from_file.code == 0);
  CHECK(from_file.out.find("function TF9\n") != std::string::npos);
  CHECK(from_file.out.find("dimension 2\n") != std::string::npos);
  const auto overridden = run({"run", "--config", (dir / "cfg.ini").string(), "--tf", "TF1"});
  CHECK(overridden.out.find("function TF1\n") != std::string::npos);
  CHECK(overridden.out.find("dimension 2\n") != std::string::npos);
  CHECK(run({"run", "--config", (dir / "none.ini").string()}).code == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("compare pairs the two engines") {
  const auto r = run({"compare", "--tf", "TF1", "--dim", "2", "--runs", "4", "--budget", "600", "--seed", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("run,seed,lpbsa,lpb\n", 0) == 0);
  CHECK(r.out.find("of 4 runs") != std::string::npos);
}
