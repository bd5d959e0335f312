#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arrowlab/billiard/diagnostics.hpp"
#include "arrowlab/billiard/world.hpp"

namespace arrowlab::billiard {

/// A single velocity-rotation disturbance injected mid-run.
struct PerturbationSpec {
    enum class Leg { Forward, Return };

    Leg leg = Leg::Forward;
    /// Collision count within the leg at which the disturbance is applied.
    std::uint64_t at_collision = 100;
    std::size_t ball = 0;
    double angle = 1e-3;
};

struct BreakRunParams {
    BreakLayout layout{};
    std::uint64_t collisions = 500;
    std::uint64_t sample_every = 10;
    int grid = 8;
    /// Cue direction jitter half-width (radians) drawn from the trial seed,
    /// so distinct seeds give distinct trajectories.
    double cue_jitter = 0.01;
    std::optional<PerturbationSpec> perturbation;
};

struct BreakRunResult {
    std::uint64_t collisions = 0;
    double final_time = 0.0;
    double initial_entropy = 0.0;
    double final_entropy = 0.0;
    /// Mean sampled entropy over the second half of the run.
    double equilibrium_entropy = 0.0;
    double initial_spread = 0.0;
    double final_spread = 0.0;
    double relative_energy_drift = 0.0;
    std::vector<EntropySample> samples;
};

/// Forward-only break run with diagnostics (and an optional mid-run
/// disturbance).
BreakRunResult run_break(const BreakRunParams& params, std::uint64_t seed);

struct EchoParams {
    BreakLayout layout{};
    /// Collisions per leg (K): forward K, reverse, return K, reverse.
    std::uint64_t collisions = 200;
    int grid = 8;
    double cue_jitter = 0.01;
    std::optional<PerturbationSpec> perturbation;
};

struct EchoResult {
    std::uint64_t collisions = 0;
    /// Largest per-ball position deviation from the initial configuration
    /// after the full reversal protocol, in units of the table width.
    double echo_error = 0.0;
    double initial_entropy = 0.0;
    /// Mean sampled entropy over the second half of the forward leg.
    double equilibrium_entropy = 0.0;
    /// Coarse entropy of the returned configuration.
    double final_entropy = 0.0;
};

/// Loschmidt echo: simulate K collisions, reverse all momenta, simulate K
/// more, reverse again, and measure the distance to the starting
/// configuration.
EchoResult run_echo(const EchoParams& params, std::uint64_t seed);

}  // namespace arrowlab::billiard
