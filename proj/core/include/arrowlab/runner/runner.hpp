#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "arrowlab/runner/config.hpp"
#include "arrowlab/runner/summary.hpp"

namespace arrowlab::runner {

/// Runs every trial of the configured experiment and aggregates the results.
///
/// Trial i is seeded by derive_trial_seed(master_seed, i) and is a pure
/// function of that seed, so any worker count yields the same summary; the
/// aggregation is a fold over trial indices in ascending order.
RunSummary run(const ExperimentConfig& config, int workers = 1);

/// Parsed command line of the CLI tool, after flag handling.
struct CliOptions {
    enum class Command { Run, Validate };

    Command command = Command::Run;
    std::string config_path;
    std::optional<std::uint64_t> trials_override;
    std::optional<std::uint64_t> seed_override;   // --seed flag
    std::optional<std::uint64_t> env_seed;        // ARROWLAB_SEED
    std::optional<std::string> output_override;
    std::optional<OutputFormat> format_override;
    int workers = 1;
};

/// Executes a CLI command: parse + validate, run, emit. Returns the process
/// exit code (0 success, 2 config error, 3 runtime error). Human-readable
/// progress goes to `err`; results go to the configured path or `out`.
int cli_main(const CliOptions& options, std::ostream& out, std::ostream& err);

}  // namespace arrowlab::runner
