#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "arrowlab/billiard/events.hpp"
#include "arrowlab/billiard/world.hpp"

namespace arrowlab::billiard {

/// Spatial coarse-grained entropy -sum p_i ln p_i (nats) over the occupancy
/// distribution of an m x m grid of table cells. 0 when all balls share one
/// cell, at most ln(m^2). Throws DomainError when m < 2.
double coarse_entropy(const BilliardWorld& world, int grid);

/// Coefficient of variation (population std / mean) of per-ball kinetic
/// energies; 0 means perfect equipartition. Throws DomainError with fewer
/// than 2 balls.
double energy_share_stats(const BilliardWorld& world);

struct EntropySample {
    double time = 0.0;
    double coarse_entropy = 0.0;
    double energy_share_spread = 0.0;
};

/// Samples entropy and equipartition spread every `every_collisions` events.
class DiagnosticsRecorder : public Recorder {
public:
    DiagnosticsRecorder(int grid, std::uint64_t every_collisions);

    void on_state(const BilliardWorld& world) override;

    std::span<const EntropySample> samples() const { return samples_; }

private:
    int grid_;
    std::uint64_t every_;
    std::vector<EntropySample> samples_;
};

struct TrajectorySample {
    double time = 0.0;
    int ball = 0;
    double x = 0.0, y = 0.0, vx = 0.0, vy = 0.0;
};

/// Records a snapshot row per ball every `every_collisions` events.
class TrajectoryRecorder : public Recorder {
public:
    explicit TrajectoryRecorder(std::uint64_t every_collisions);

    void on_state(const BilliardWorld& world) override;

    std::span<const TrajectorySample> samples() const { return samples_; }

private:
    std::uint64_t every_;
    std::vector<TrajectorySample> samples_;
};

/// CSV export, one row per sample: time,entropy,energy_share_spread.
void write_diagnostics_csv(std::ostream& out,
                           std::span<const EntropySample> samples);

/// CSV export, one row per ball snapshot: time,ball,x,y,vx,vy.
void write_trajectory_csv(std::ostream& out,
                          std::span<const TrajectorySample> samples);

}  // namespace arrowlab::billiard
