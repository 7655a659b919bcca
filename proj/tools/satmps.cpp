#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satmps/harness/commands.hpp"
#include "satmps/harness/config.hpp"

int main(int argc, char** argv) {
  using namespace satmps;
  CLI::App app{"Imaginary-time MPS experiments on random 3-SAT"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out;
  int workers = 0;
  std::string backend;
  bool no_timestamp = false;
  std::vector<std::string> overrides;

  const char* names[][2] = {{"generate", "Write seeded DIMACS instances and a manifest"},
                            {"evolve", "Imaginary-time entanglement traces"},
                            {"flat", "Clause-projector traces, counts and certificates"},
                            {"models", "Statistical model curves"},
                            {"magic", "Stabilizer Renyi entropies along imaginary time"},
                            {"verify", "Check an MPS snapshot against a CNF"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : names) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--seed", seed, "master seed");
    sub->add_option("--out", out, "output file or directory ('-' for stdout)");
    sub->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--backend", backend, "dense, mps or both")->check(CLI::IsMember({"dense", "mps", "both"}));
    sub->add_flag("--no-timestamp", no_timestamp, "omit the timestamp comment line");
    sub->add_option("--set", overrides, "config override key=value (JSON value)");
    subs.push_back(sub);
  }
  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  const auto* sub = app.get_subcommands().front();
  harness::ExperimentConfig config;
  try {
    if (!config_path.empty()) config = harness::load_config(config_path);
    for (const auto& o : overrides) harness::apply_override(config, o);
  } catch (const harness::ConfigError& e) {
    std::cerr << "satmps: config error: " << e.what() << '\n';
    return harness::kExitUsage;
  }
  if (sub->count("--seed")) config.seed = seed;
  if (sub->count("--out")) config.out = out;
  if (sub->count("--workers")) config.workers = workers;
  if (sub->count("--backend")) config.backend = backend;
  if (no_timestamp) config.timestamp = false;
  return harness::run_command(command, config);
}
