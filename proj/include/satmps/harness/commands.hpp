#pragma once

#include <string_view>

#include "satmps/harness/config.hpp"

namespace satmps::harness {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // an internal cross-check or verification failed
inline constexpr int kExitUsage = 2;        // bad configuration or inputs
inline constexpr int kExitError = 3;        // the computation itself failed

// DIMACS files plus manifest.json in the `out` directory.
int cmd_generate(const ExperimentConfig& config);
// Imaginary-time traces and bump summaries (CSV).
int cmd_evolve(const ExperimentConfig& config);
// Clause-by-clause projector traces and certificate verdicts (CSV).
int cmd_flat(const ExperimentConfig& config);
// Model curves, one CSV per report, in the `out` directory.
int cmd_models(const ExperimentConfig& config);
// Stabilizer entropy estimates along imaginary time (CSV).
int cmd_magic(const ExperimentConfig& config);
// Certificate check of mps_file against instance_file.
int cmd_verify(const ExperimentConfig& config);

// Dispatches by name; catches errors and maps them to exit codes.
int run_command(std::string_view name, const ExperimentConfig& config);

}  // namespace satmps::harness
