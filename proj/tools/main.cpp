// chargeshare command-line entry point.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "chargeshare/csv.hpp"
#include "chargeshare/experiments.hpp"
#include "chargeshare/params.hpp"
#include "chargeshare/validation.hpp"
#include "chargeshare/version.hpp"

namespace fs = std::filesystem;
using namespace chargeshare;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string config;
  std::vector<std::string> sets;
  std::uint64_t seed = 1;
  std::string out = "out";
  unsigned jobs = 1;
  std::string policy;
  bool quick = false;
};

// A manifest carries its parameter set under `params`; plain configs are
// parameter documents themselves.
ParamSet resolve_params(const Options& o) {
  if (o.config.empty()) return load_params("", o.sets).params;
  const YAML::Node doc = YAML::LoadFile(o.config);
  LoadResult r;
  if (doc["params"]) {
    YAML::Emitter e;
    e << doc["params"];
    r = load_params(e.c_str(), o.sets);
  } else {
    r = load_params_file(o.config, o.sets);
  }
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  return r.params;
}

void write_manifest(const fs::path& path, const std::string& experiment, const Options& o,
                    const ParamSet& p, const std::vector<std::string>& outputs) {
  YAML::Emitter e;
  e << YAML::BeginMap;
  e << YAML::Key << "experiment" << YAML::Value << experiment;
  e << YAML::Key << "version" << YAML::Value << std::string(version_string());
  e << YAML::Key << "seed" << YAML::Value << o.seed;
  e << YAML::Key << "quick" << YAML::Value << o.quick;
  e << YAML::Key << "policy" << YAML::Value << (o.policy.empty() ? std::string("both") : o.policy);
  e << YAML::Key << "jobs" << YAML::Value << o.jobs;
  e << YAML::Key << "outputs" << YAML::Value << YAML::BeginSeq;
  for (const auto& f : outputs) e << f;
  e << YAML::EndSeq;
  e << YAML::Key << "params" << YAML::Value << YAML::Load(emit_params(p));
  e << YAML::EndMap;
  std::ofstream f(path);
  f << e.c_str() << '\n';
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

int run_validate(const Options& o) {
  const ParamSet p = resolve_params(o);
  int failed = 0;
  for (const auto& c : run_invariants(p, o.seed)) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    failed += c.pass ? 0 : 1;
  }
  std::cout << (failed ? fmt::format("{} invariant(s) failed\n", failed) : std::string("all invariants hold\n"));
  return failed ? kFailed : kOk;
}

int run_figure(const std::string& name, const Options& o) {
  ExperimentOptions eo;
  eo.params = resolve_params(o);
  eo.seed = o.seed;
  eo.jobs = o.jobs;
  eo.quick = o.quick;
  if (!o.policy.empty()) eo.policy = parse_policy_kind(o.policy);
  const Table t = run_experiment(name, eo);
  fs::create_directories(o.out);
  const fs::path csv = fs::path(o.out) / (name + ".csv");
  write_csv_file(csv.string(), t);
  write_manifest(fs::path(o.out) / (name + ".manifest.yaml"), name, o, eo.params, {csv.filename().string()});
  std::cout << csv.string() << '\n';
  return kOk;
}

int run_oracle(const Options& o) {
  const ParamSet p = resolve_params(o);
  fs::create_directories(o.out);
  std::vector<std::string> outputs;
  for (const auto& [name, table] : oracle_tables(p, o.seed, o.quick, o.jobs)) {
    std::cout << "== " << name << '\n' << to_csv(table);
    const fs::path f = fs::path(o.out) / ("oracle-" + name + ".csv");
    write_csv_file(f.string(), table);
    outputs.push_back(f.filename().string());
  }
  write_manifest(fs::path(o.out) / "oracle.manifest.yaml", "oracle", o, p, outputs);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Charging-infrastructure sharing between EVs and UAVs: analysis and simulation"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--config", o.config, "YAML parameter file or a run manifest")->check(CLI::ExistingFile);
  app.add_option("--set", o.sets, "Override, section.key=value (repeatable)");
  app.add_option("--seed", o.seed, "Master seed");
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--policy", o.policy, "Association policy")->check(CLI::IsMember({"biased", "thinning"}));
  app.add_flag("--quick", o.quick, "Smaller sweeps and fewer simulation draws");

  std::string chosen;
  auto sub = [&](const std::string& name, const std::string& help) {
    app.add_subcommand(name, help)->callback([&chosen, name] { chosen = name; });
  };
  sub("validate", "Run the invariant suite; exit 1 on any failure");
  sub("oracle", "Analytic vs simulation deviation tables");
  for (const auto& name : experiment_names()) sub(name, "Write the " + name + " CSV table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (chosen == "validate") return run_validate(o);
    if (chosen == "oracle") return run_oracle(o);
    return run_figure(chosen, o);
  } catch (const ParamError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kUsage;
  } catch (const YAML::Exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
