#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>

#include "fidest/harness/config.hpp"
#include "fidest/harness/csv.hpp"
#include "fidest/harness/experiment.hpp"
#include "fidest/harness/svg.hpp"
#include "fidest/optimizer/catalog.hpp"
#include "fidest/quantum/errors.hpp"

using namespace fidest;
using namespace fidest::harness;

namespace {

ExperimentConfig small_config(std::size_t n, std::size_t k_max) {
  ExperimentConfig c;
  c.dim = 2;
  c.strategies = {Strategy::restricted_adaptive(pauli_catalog()), Strategy::random_haar()};
  c.n_experiments = n;
  c.k_max = k_max;
  c.seed = 17;
  return c;
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("reference bound") {
  CHECK(massar_bound(0) == doctest::Approx(0.5));
  CHECK(massar_bound(1) == doctest::Approx(1.0 / 3.0));
  CHECK(massar_bound(30) == doctest::Approx(1.0 / 32.0));
}

TEST_CASE("summary statistics") {
  StrategySeries s{"x", {}, {}, {}, {{1.0, 2.0, 3.0}, {0.5, 0.5, 0.5}}};
  summarize(s);
  CHECK(s.mean[0] == doctest::Approx(2.0));
  CHECK(s.stderr_mean[0] == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(s.stderr_mean[1] == 0.0);
  CHECK(s.n[1] == 3);
}

TEST_CASE("one random measurement gives infidelity one third on average") {
  ExperimentConfig c;
  c.dim = 2;
  c.strategies = {Strategy::random_haar()};
  c.n_experiments = 2000;
  c.k_max = 1;
  c.seed = 3;
  const auto stats = run_experiment(c);
  const auto& s = stats.at("random");
  CHECK(s.mean[0] == doctest::Approx(0.5).epsilon(0.05));
  CHECK(std::abs(s.mean[1] - 1.0 / 3.0) < 3.0 * s.stderr_mean[1]);
}

TEST_CASE("configuration validation") {
  auto c = small_config(0, 3);
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = small_config(2, 0);
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = small_config(2, 3);
  c.strategies.push_back(Strategy::random_haar());
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = small_config(2, 3);
  c.dim = 4;
  c.strategies = {Strategy::restricted_adaptive(local_pauli_catalog())};
  c.k_max = 30;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c.k_max = 3;
  CHECK_NOTHROW(validate(c));
  c.strategies = {Strategy::adaptive()};
  CHECK_THROWS_AS(validate(c), ValidationError);
}

TEST_CASE("results do not depend on thread count") {
  auto c = small_config(6, 4);
  c.threads = 1;
  const auto one = run_experiment(c);
  c.threads = 3;
  const auto three = run_experiment(c);
  for (const auto& s : one.series) CHECK(three.at(s.label).samples == s.samples);
  CHECK(format_csv(one) == format_csv(three));

  std::size_t calls = 0;
  c.threads = 2;
  run_experiment(c, [&](std::size_t done, std::size_t total) {
    ++calls;
    CHECK(done <= total);
  });
  CHECK(calls > 0);
}

TEST_CASE("CSV output and round trip") {
  const auto stats = run_experiment(small_config(4, 3));
  const auto text = format_csv(stats);
  CHECK(text.rfind("strategy,k,mean_infidelity,stderr,n,bound\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 8);
  const auto back = parse_csv(text);
  CHECK(format_csv(back) == text);
  CHECK(back.dim == 2);
  for (std::size_t k = 0; k <= 3; ++k)
    CHECK(back.at("random").mean[k] == doctest::Approx(stats.at("random").mean[k]).epsilon(1e-11));

  const auto path = std::filesystem::temp_directory_path() / "fidest_roundtrip.csv";
  write_csv(stats, path);
  CHECK(format_csv(read_csv(path)) == text);
  std::filesystem::remove(path);

  RunStatistics d4;
  d4.dim = 4;
  d4.series.push_back({"nonadaptive", {0.75, 0.7}, {0.0, 0.01}, {3, 3}, {}});
  const auto t4 = format_csv(d4);
  CHECK(t4.find("nonadaptive,1,0.7,0.01,3,\n") != std::string::npos);

  CHECK_THROWS_AS(parse_csv("strategy,k\n"), ValidationError);
  CHECK_THROWS_AS(parse_csv("strategy,k,mean_infidelity,stderr,n,bound\na,1,0.5,0,1,\n"), ValidationError);
  CHECK_THROWS_AS(read_csv("/nonexistent/fidest.csv"), IoError);
}

TEST_CASE("SVG plot structure") {
  auto c = small_config(3, 3);
  c.strategies = {Strategy::adaptive(), Strategy::restricted_adaptive(pauli_catalog()),
                  Strategy::nonadaptive_cycle(pauli_catalog()), Strategy::random_haar()};
  const auto stats = run_experiment(c);
  const auto svg = render_svg(stats);
  CHECK(count_matches(svg, "<polyline class=\"series\"") == 4);
  CHECK(count_matches(svg, "<polyline class=\"bound\"") == 1);
  CHECK(svg == render_svg(stats));
  CHECK(render_svg(stats, {.log_scale = false}) != svg);
  CHECK_THROWS_AS(render_svg(RunStatistics{}), ValidationError);
}

TEST_CASE("JSON configuration") {
  const auto cfg = parse_config(R"({"dim": 2, "strategies": [{"kind": "adaptive"}, {"kind": "nonadaptive"}],
    "n_experiments": 5, "k_max": 4, "seed": 9, "optimizer": {"restarts": 3, "tol": 1e-6},
    "output": {"csv": "out.csv", "svg": "out.svg"}})");
  CHECK(cfg.strategies.size() == 2);
  CHECK(cfg.strategies[1].catalog->kind() == BasisCatalog::Kind::PauliQubit);
  CHECK(cfg.optimizer.restarts == 3);
  CHECK(cfg.optimizer.cg.grad_tol == 1e-6);
  CHECK(cfg.output.svg == "out.svg");

  const auto d4 = parse_config(R"({"dim": 4, "strategies": [{"kind": "restricted-adaptive"}],
    "n_experiments": 1, "k_max": 2, "seed": 1, "output": {"csv": "x.csv"}})");
  CHECK(d4.strategies[0].catalog->kind() == BasisCatalog::Kind::LocalPauliTwoQubit);

  CHECK_THROWS_AS(parse_config(R"({"dim": 2, "strategies": [{"kind": "adaptive"}], "n_experiments": 1,
    "k_max": 1, "seed": 1, "output": {"csv": "a"}, "extra": 1})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"dim": 2, "strategies": [{"kind": "random", "catalog": "pauli"}],
    "n_experiments": 1, "k_max": 1, "seed": 1, "output": {"csv": "a"}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_config("{not json"), ValidationError);
  CHECK_THROWS_AS(load_config("/nonexistent/fidest.json"), IoError);
  CHECK_THROWS_AS(catalog_by_name("mub"), ValidationError);
}

}  // TEST_SUITE
