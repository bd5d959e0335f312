#include "arrowlab/billiard/protocols.hpp"

#include <algorithm>
#include <cmath>

#include "arrowlab/rng.hpp"

namespace arrowlab::billiard {

namespace {

BilliardWorld jittered_break(const BreakLayout& layout, double jitter,
                             std::uint64_t seed) {
    BilliardWorld world = init_break(layout);
    if (jitter != 0.0) {
        Rng rng(seed);
        const double angle = (2.0 * rng.uniform() - 1.0) * jitter;
        world = perturb(world, 0, angle);
    }
    return world;
}

/// Runs a leg of `leg_collisions` events on top of the world's current
/// count, injecting the perturbation mid-leg when requested.
BilliardWorld run_leg(BilliardWorld world, std::uint64_t leg_collisions,
                      const std::optional<PerturbationSpec>& perturbation,
                      PerturbationSpec::Leg which, Recorder* recorder) {
    const std::uint64_t start = world.collision_count;
    if (perturbation && perturbation->leg == which &&
        perturbation->at_collision < leg_collisions) {
        world = simulate(std::move(world),
                         {.collisions = start + perturbation->at_collision},
                         recorder);
        world = perturb(world, perturbation->ball, perturbation->angle);
    }
    return simulate(std::move(world), {.collisions = start + leg_collisions},
                    recorder);
}

double mean_second_half(std::span<const EntropySample> samples) {
    if (samples.empty()) return 0.0;
    const std::size_t begin = samples.size() / 2;
    double sum = 0.0;
    for (std::size_t i = begin; i < samples.size(); ++i) {
        sum += samples[i].coarse_entropy;
    }
    return sum / static_cast<double>(samples.size() - begin);
}

}  // namespace

BreakRunResult run_break(const BreakRunParams& params, std::uint64_t seed) {
    BilliardWorld world = jittered_break(params.layout, params.cue_jitter, seed);
    const double initial_energy = total_kinetic_energy(world);

    BreakRunResult result;
    result.initial_entropy = coarse_entropy(world, params.grid);
    result.initial_spread = energy_share_stats(world);

    DiagnosticsRecorder recorder(params.grid, params.sample_every);
    world = run_leg(std::move(world), params.collisions, params.perturbation,
                    PerturbationSpec::Leg::Forward, &recorder);

    result.collisions = world.collision_count;
    result.final_time = world.elapsed_time;
    result.final_entropy = coarse_entropy(world, params.grid);
    result.final_spread = energy_share_stats(world);
    result.relative_energy_drift =
        std::abs(total_kinetic_energy(world) - initial_energy) / initial_energy;
    result.samples.assign(recorder.samples().begin(), recorder.samples().end());
    result.equilibrium_entropy = mean_second_half(result.samples);
    return result;
}

EchoResult run_echo(const EchoParams& params, std::uint64_t seed) {
    const BilliardWorld start =
        jittered_break(params.layout, params.cue_jitter, seed);

    EchoResult result;
    result.collisions = params.collisions;
    result.initial_entropy = coarse_entropy(start, params.grid);

    DiagnosticsRecorder recorder(
        params.grid, std::max<std::uint64_t>(1, params.collisions / 50));
    BilliardWorld world = run_leg(start, params.collisions, params.perturbation,
                                  PerturbationSpec::Leg::Forward, &recorder);
    result.equilibrium_entropy = mean_second_half(recorder.samples());

    // Return leg: match the forward duration so the final ballistic drift
    // completes (the last undone collision happens strictly before it).
    const double forward_duration = world.elapsed_time - start.elapsed_time;
    world = reverse(world);
    if (params.perturbation &&
        params.perturbation->leg == PerturbationSpec::Leg::Return) {
        world = simulate(std::move(world),
                         {.collisions = world.collision_count +
                                        params.perturbation->at_collision},
                         nullptr);
        world = perturb(world, params.perturbation->ball,
                        params.perturbation->angle);
    }
    world = simulate(std::move(world),
                     {.time = start.elapsed_time + 2.0 * forward_duration},
                     nullptr);
    world = reverse(world);

    double worst = 0.0;
    for (std::size_t i = 0; i < world.balls.size(); ++i) {
        const Vec2 d = world.balls[i].position - start.balls[i].position;
        worst = std::max(worst, d.norm());
    }
    result.echo_error = worst / world.table.width;
    result.final_entropy = coarse_entropy(world, params.grid);
    return result;
}

}  // namespace arrowlab::billiard
