#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "fidest/harness/csv.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fidest::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("trace prints one line per iteration plus a summary") {
  const auto r = run_cli({"trace", "--dim", "2", "--k-max", "5", "--seed", "7"});
  CHECK(r.code == fidest::cli::kExitOk);
  CHECK(lines(r.out) == 6);
  CHECK(r.out.rfind("k=1 basis=theta=", 0) == 0);
  CHECK(r.out.find("summary strategy=adaptive dim=2 k=5") != std::string::npos);
  CHECK(run_cli({"trace", "--dim", "2", "--k-max", "5", "--seed", "7"}).out == r.out);
  CHECK(run_cli({"trace", "--dim", "2", "--k-max", "5", "--seed", "8"}).out != r.out);

  const auto cat = run_cli({"trace", "--strategy", "nonadaptive", "--k-max", "3"});
  CHECK(cat.out.rfind("k=1 basis=Z ", 0) == 0);
}

TEST_CASE("trace rejects the continuous strategy beyond qubits") {
  const auto r = run_cli({"trace", "--dim", "4", "--strategy", "adaptive"});
  CHECK(r.code == fidest::cli::kExitUsage);
  CHECK(r.err.find("only available for d = 2") != std::string::npos);
  CHECK(run_cli({"trace", "--strategy", "bogus"}).code == fidest::cli::kExitUsage);
  CHECK(run_cli({}).code == fidest::cli::kExitUsage);
}

TEST_CASE("experiment from a config file") {
  const auto cfg = temp_file("fidest_cli_config.json");
  const auto csv = temp_file("fidest_cli_out.csv");
  const auto svg = temp_file("fidest_cli_out.svg");
  {
    std::ofstream f(cfg);
    f << R"({"dim": 2, "n_experiments": 3, "k_max": 3, "seed": 4,
      "strategies": [{"kind": "adaptive"}, {"kind": "restricted-adaptive"}, {"kind": "nonadaptive"}, {"kind": "random"}],
      "output": {"csv": ")"
      << csv.string() << R"(", "svg": ")" << svg.string() << R"("}})";
  }
  const auto r = run_cli({"experiment", "--config", cfg.string()});
  CHECK(r.code == fidest::cli::kExitOk);
  CHECK(lines(r.out) == 5);
  const auto stats = fidest::harness::read_csv(csv);
  CHECK(stats.series.size() == 4);
  CHECK(stats.k_max() == 3);
  CHECK(std::filesystem::file_size(svg) > 0);

  const auto first = fidest::harness::format_csv(stats);
  CHECK(run_cli({"experiment", "--config", cfg.string(), "--seed", "5"}).code == fidest::cli::kExitOk);
  CHECK(fidest::harness::format_csv(fidest::harness::read_csv(csv)) != first);

  CHECK(run_cli({"experiment", "--config", cfg.string(), "--dim", "2"}).code == fidest::cli::kExitUsage);
  for (const auto& p : {cfg, csv, svg}) std::filesystem::remove(p);
}

TEST_CASE("experiment reports a missing config file") {
  const auto r = run_cli({"experiment", "--config", "/nonexistent/fidest.json"});
  CHECK(r.code == fidest::cli::kExitUsage);
  CHECK(r.err.find("/nonexistent/fidest.json") != std::string::npos);
}

TEST_CASE("scripted table check") {
  const auto r = run_cli({"validate-table1"});
  CHECK(r.code == fidest::cli::kExitOk);
  CHECK(lines(r.out) == 4);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run_cli({"validate-table1"}).out == r.out);

  const auto bad = run_cli({"validate-table1", "--perturb", "0.05"});
  CHECK(bad.code == fidest::cli::kExitFailure);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("bound listing") {
  const auto r = run_cli({"bound", "--k-max", "2"});
  CHECK(r.code == fidest::cli::kExitOk);
  CHECK(r.out == "k=0 bound=0.5\nk=1 bound=0.333333333333\nk=2 bound=0.25\n");
}

}  // TEST_SUITE
