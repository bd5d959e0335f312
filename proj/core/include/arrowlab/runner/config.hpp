#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "arrowlab/billiard/protocols.hpp"

namespace arrowlab::runner {

inline constexpr int kConfigSchemaVersion = 1;

enum class ExperimentKind {
    InverseEpr,
    HardyChain,
    BellTable,
    MixedMeasurement,
    BilliardBreak,
    BilliardEcho,
};

const char* to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(const std::string& name);

enum class OutputFormat { Json, Csv };

const char* to_string(OutputFormat format);
OutputFormat format_from_string(const std::string& name);

struct InverseEprParams {};

struct MixedMeasurementParams {
    /// When true, `trials` counts disrupted-entangled trials; raw trials are
    /// consumed (in seed order) until that many survive post-selection.
    bool count_disrupted = false;
};

struct HardyChainParams {
    int n_atoms = 3;
    bool measure_until_found = true;
};

enum class BellSource {
    /// Each round post-selects an atom pair from fresh interferometer runs.
    PostSelected,
    /// Each round measures the analytic reference pair state directly.
    Singlet,
    /// Product state |Z+>|Z+>; a correlated-but-local baseline.
    ZProduct,
};

const char* to_string(BellSource source);

struct BellTableParams {
    BellSource source = BellSource::PostSelected;
};

struct BilliardBreakParams {
    int n_targets = 15;
    double speed = 2.0;
    double table_width = 100.0;
    double table_height = 50.0;
    double radius = 1.0;
    std::uint64_t collisions = 500;
    std::uint64_t sample_every = 10;
    int grid = 8;
    double cue_jitter = 0.01;
    double perturb_angle = 0.0;  // 0 = unperturbed run
    std::uint64_t perturb_at_collision = 100;
    int perturb_ball = 0;
    /// When set, the diagnostics / trajectory CSV of trial 0 is written here.
    std::optional<std::string> diagnostics_path;
    std::optional<std::string> trajectory_path;

    billiard::BreakRunParams to_protocol_params() const;
};

struct BilliardEchoParams {
    int n_targets = 15;
    double speed = 2.0;
    double table_width = 100.0;
    double table_height = 50.0;
    double radius = 1.0;
    std::uint64_t collisions = 200;  // per leg
    int grid = 8;
    double cue_jitter = 0.01;
    /// Disturbance for the perturbed variant of each trial.
    double perturb_angle = 1e-3;
    billiard::PerturbationSpec::Leg perturb_leg =
        billiard::PerturbationSpec::Leg::Forward;
    std::uint64_t perturb_at_collision = 100;
    int perturb_ball = 0;

    billiard::EchoParams to_protocol_params(bool perturbed) const;
};

using ExperimentParams =
    std::variant<InverseEprParams, HardyChainParams, BellTableParams,
                 MixedMeasurementParams, BilliardBreakParams, BilliardEchoParams>;

struct ExperimentConfig {
    int schema_version = kConfigSchemaVersion;
    ExperimentKind experiment = ExperimentKind::InverseEpr;
    std::uint64_t trials = 10000;
    std::uint64_t master_seed = 1;
    ExperimentParams params;
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::Json;
};

/// Parses and validates a JSON config document. Unknown keys, a wrong
/// schema_version, type mismatches and out-of-range values are all
/// ConfigErrors naming the offending key path.
ExperimentConfig parse_config(const std::string& text);

/// parse_config on the contents of `path`.
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace arrowlab::runner
