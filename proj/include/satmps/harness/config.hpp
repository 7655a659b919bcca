#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace satmps::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Experiment parameters. Every key can be set in the JSON config file or
// overridden on the command line; unknown keys are rejected.
struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::string out = "-";  // "-" is stdout; generate and models take a directory
  int workers = 1;
  std::string backend = "mps";  // dense | mps | both
  bool timestamp = true;

  // Instance sweep.
  std::vector<int> n{10};
  std::vector<double> alpha{4.27};
  int instances = 1;
  std::string ensemble = "satisfiable";  // random | satisfiable | unique
  int rejection_budget = 10000;
  std::string instance_file;  // explicit DIMACS file instead of a sweep

  // Evolution and truncation.
  double dtau = 0.05;
  double tau_max = 12.0;
  int record_every = 1;
  int max_bond = 256;
  double cutoff = 1e-10;
  int cut = -1;
  double cross_check_tolerance = 1e-3;

  // flat / verify
  std::string snapshot_dir;
  std::string mps_file;
  double tolerance = 1e-9;

  // models
  std::vector<std::string> reports{"constants"};
  std::vector<double> filling{0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  int samples = 100;
  int m_max = -1;  // -1: a default per report
  bool corrections = true;

  // magic
  std::vector<double> tau{0.0, 0.5, 1.0, 2.0, 4.0};
  long pauli_samples = 1000;
  long chain_length = 200000;
  long burn_in = -1;
  int batches = 20;
  bool exact = true;
};

ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);
// key=value with a JSON value; a bare word is taken as a string.
void apply_override(ExperimentConfig& config, std::string_view assignment);
std::string to_json(const ExperimentConfig& config);
// Throws ConfigError on inconsistent values.
void validate(const ExperimentConfig& config);

// Seed of the k-th instance of an (n, m) cell: depends only on its own
// coordinates, so adding cells or instances leaves earlier seeds unchanged.
std::uint64_t instance_seed(std::uint64_t master, int n, int m, int k) noexcept;

}  // namespace satmps::harness
