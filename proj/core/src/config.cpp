#include "fidest/harness/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fidest/quantum/errors.hpp"

namespace fidest::harness {

using nlohmann::json;

BasisCatalog catalog_by_name(std::string_view name) {
  if (name == "pauli") return pauli_catalog();
  if (name == "local-pauli-2q") return local_pauli_catalog();
  throw ValidationError("unknown catalog '" + std::string(name) + "' (expected pauli or local-pauli-2q)");
}

Strategy make_strategy(std::string_view kind, const std::optional<std::string>& catalog, std::size_t dim) {
  const auto k = parse_strategy_kind(kind);
  if (!k)
    throw ValidationError("unknown strategy '" + std::string(kind) +
                          "' (expected adaptive, restricted-adaptive, nonadaptive or random)");
  Strategy s{*k, std::nullopt};
  if (!s.uses_catalog()) {
    if (catalog) throw ValidationError("strategy '" + std::string(kind) + "' does not take a catalog");
    return s;
  }
  if (catalog) {
    s.catalog = catalog_by_name(*catalog);
  } else if (dim == 2) {
    s.catalog = pauli_catalog();
  } else if (dim == 4) {
    s.catalog = local_pauli_catalog();
  } else {
    throw ValidationError("strategy '" + std::string(kind) + "' needs a catalog for d = " + std::to_string(dim));
  }
  return s;
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ValidationError(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw ValidationError("unknown key '" + key + "' in " + where);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError("missing key '" + key + "' in " + where);
  return *it;
}

std::uint64_t as_unsigned(const json& v, const std::string& key) {
  if (!v.is_number_unsigned()) throw ValidationError("'" + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

double as_positive_real(const json& v, const std::string& key) {
  if (!v.is_number()) throw ValidationError("'" + key + "' must be a number");
  const double x = v.get<double>();
  if (!(x > 0.0)) throw ValidationError("'" + key + "' must be positive");
  return x;
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ValidationError("'" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(doc, {"dim", "strategies", "n_experiments", "k_max", "seed", "optimizer", "output"}, "config");

  ExperimentConfig cfg;
  cfg.dim = as_unsigned(require(doc, "dim", "config"), "dim");
  cfg.n_experiments = as_unsigned(require(doc, "n_experiments", "config"), "n_experiments");
  cfg.k_max = as_unsigned(require(doc, "k_max", "config"), "k_max");
  cfg.seed = as_unsigned(require(doc, "seed", "config"), "seed");

  const json& strategies = require(doc, "strategies", "config");
  if (!strategies.is_array()) throw ValidationError("'strategies' must be an array");
  for (const auto& entry : strategies) {
    reject_unknown(entry, {"kind", "catalog"}, "strategy entry");
    std::optional<std::string> catalog;
    if (entry.contains("catalog")) catalog = as_string(entry["catalog"], "catalog");
    cfg.strategies.push_back(make_strategy(as_string(require(entry, "kind", "strategy entry"), "kind"), catalog, cfg.dim));
  }

  if (doc.contains("optimizer")) {
    const json& opt = doc["optimizer"];
    reject_unknown(opt, {"restarts", "grad_step", "tol"}, "optimizer");
    if (opt.contains("restarts")) cfg.optimizer.restarts = as_unsigned(opt["restarts"], "restarts");
    if (opt.contains("grad_step")) cfg.optimizer.cg.grad_step = as_positive_real(opt["grad_step"], "grad_step");
    if (opt.contains("tol")) cfg.optimizer.cg.grad_tol = as_positive_real(opt["tol"], "tol");
  }

  const json& out = require(doc, "output", "config");
  reject_unknown(out, {"csv", "svg"}, "output");
  cfg.output.csv = as_string(require(out, "csv", "output"), "csv");
  if (out.contains("svg")) cfg.output.svg = as_string(out["svg"], "svg");

  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace fidest::harness
