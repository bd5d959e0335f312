#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "arrowlab/bell/chsh.hpp"
#include "arrowlab/runner/config.hpp"

namespace arrowlab::runner {

/// Count, frequency and binomial standard error of one classification bucket.
struct ClassStat {
    std::string name;
    std::uint64_t count = 0;
    double frequency = 0.0;
    double stderr_f = 0.0;
};

struct EprRunSummary {
    std::uint64_t trials = 0;
    std::vector<ClassStat> classes;  // scattered / disrupted_entangled / intact
    /// Smallest fidelity of a disrupted trial's atom pair against the
    /// reference pair state; 1 when no trial was disrupted.
    double min_singlet_fidelity = 1.0;
};

struct MixedRunSummary {
    std::uint64_t raw_trials = 0;
    std::vector<ClassStat> classes;
    std::uint64_t disrupted_trials = 0;
    std::uint64_t mixed_pair_count = 0;
    double mixed_pair_fraction = 0.0;  // among disrupted trials
    double mixed_pair_stderr = 0.0;
    std::uint64_t atom1_z_trials = 0;
    std::uint64_t atom1_z_intersecting = 0;
    double atom1_z_intersecting_fraction = 0.0;
    std::uint64_t same_axis_trials = 0;
    std::uint64_t same_axis_opposite = 0;
    double same_axis_opposite_fraction = 0.0;
};

struct HardyRunSummary {
    std::uint64_t trials = 0;
    int n_atoms = 0;
    bool measure_until_found = true;
    std::vector<ClassStat> ports;  // scattered / bright / dark
    std::uint64_t dark_trials = 0;
    std::uint64_t first_atom_intersecting = 0;
    double first_atom_intersecting_fraction = 0.0;  // among dark trials
    /// Dark trials whose measured atoms were all outside the intersecting
    /// boxes (should never happen).
    std::uint64_t dark_without_intersecting = 0;
    /// Smallest visibility of any unmeasured atom across dark trials.
    double min_residual_visibility = 1.0;
};

struct BellRunSummary {
    std::uint64_t trials = 0;
    BellSource source = BellSource::PostSelected;
    bell::CorrelationTable table;
    bell::Verdict verdict = bell::Verdict::Inconclusive;
    bell::ChshResult chsh_optimal;
};

struct BreakTrialRow {
    std::uint64_t trial = 0;
    std::uint64_t collisions = 0;
    double final_time = 0.0;
    double initial_entropy = 0.0;
    double final_entropy = 0.0;
    double equilibrium_entropy = 0.0;
    double final_spread = 0.0;
    double relative_energy_drift = 0.0;
};

struct BreakRunSummary {
    std::uint64_t trials = 0;
    std::vector<BreakTrialRow> rows;
    double final_entropy_mean = 0.0;
    double final_entropy_std = 0.0;
    double max_relative_energy_drift = 0.0;
};

struct EchoTrialRow {
    std::uint64_t trial = 0;
    std::uint64_t collisions = 0;
    double echo_error = 0.0;
    double perturbed_echo_error = 0.0;
    double initial_entropy = 0.0;
    double equilibrium_entropy = 0.0;
    double final_entropy = 0.0;            // unperturbed echo
    double perturbed_final_entropy = 0.0;  // perturbed echo
};

struct EchoRunSummary {
    std::uint64_t trials = 0;
    std::vector<EchoTrialRow> rows;
};

using SummaryPayload =
    std::variant<EprRunSummary, HardyRunSummary, BellRunSummary,
                 MixedRunSummary, BreakRunSummary, EchoRunSummary>;

struct RunSummary {
    ExperimentConfig config;
    SummaryPayload payload;
    /// Wall-clock duration. Reported on stderr only; excluded from emit() so
    /// repeated runs produce byte-identical files.
    double duration_seconds = 0.0;
};

/// Serializes a summary. JSON has a stable key order; CSV column orders are
/// fixed per experiment. Numbers carry 12 significant digits.
std::string emit(const RunSummary& summary, OutputFormat format);

}  // namespace arrowlab::runner
