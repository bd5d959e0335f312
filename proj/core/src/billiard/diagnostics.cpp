#include "arrowlab/billiard/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "arrowlab/errors.hpp"

namespace arrowlab::billiard {

namespace {

std::string format_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

double coarse_entropy(const BilliardWorld& world, int grid) {
    if (grid < 2) throw DomainError("entropy grid must be at least 2x2");
    if (world.balls.empty()) return 0.0;

    std::vector<std::uint32_t> counts(static_cast<std::size_t>(grid) * grid, 0);
    for (const Ball& b : world.balls) {
        auto cell_of = [&](double pos, double extent) {
            const int c = static_cast<int>(std::floor(pos / extent * grid));
            return std::clamp(c, 0, grid - 1);
        };
        const int ix = cell_of(b.position.x, world.table.width);
        const int iy = cell_of(b.position.y, world.table.height);
        ++counts[static_cast<std::size_t>(iy) * grid + ix];
    }

    const double n = static_cast<double>(world.balls.size());
    double entropy = 0.0;
    for (std::uint32_t c : counts) {
        if (c == 0) continue;
        const double p = c / n;
        entropy -= p * std::log(p);
    }
    return entropy;
}

double energy_share_stats(const BilliardWorld& world) {
    if (world.balls.size() < 2) {
        throw DomainError("energy_share_stats needs at least 2 balls");
    }
    const double n = static_cast<double>(world.balls.size());
    double mean = 0.0;
    for (const Ball& b : world.balls) mean += b.kinetic_energy();
    mean /= n;
    if (mean <= 0.0) return 0.0;  // everything at rest

    double var = 0.0;
    for (const Ball& b : world.balls) {
        const double d = b.kinetic_energy() - mean;
        var += d * d;
    }
    var /= n;
    return std::sqrt(var) / mean;
}

DiagnosticsRecorder::DiagnosticsRecorder(int grid, std::uint64_t every_collisions)
    : grid_(grid), every_(every_collisions == 0 ? 1 : every_collisions) {}

void DiagnosticsRecorder::on_state(const BilliardWorld& world) {
    if (world.collision_count % every_ != 0) return;
    // simulate() reports the same state twice when a time bound lands on a
    // sampled collision; keep one row per (time, count).
    if (!samples_.empty() && samples_.back().time == world.elapsed_time) return;
    samples_.push_back({world.elapsed_time, coarse_entropy(world, grid_),
                        energy_share_stats(world)});
}

TrajectoryRecorder::TrajectoryRecorder(std::uint64_t every_collisions)
    : every_(every_collisions == 0 ? 1 : every_collisions) {}

void TrajectoryRecorder::on_state(const BilliardWorld& world) {
    if (world.collision_count % every_ != 0) return;
    if (!samples_.empty() && samples_.back().time == world.elapsed_time) return;
    for (std::size_t i = 0; i < world.balls.size(); ++i) {
        const Ball& b = world.balls[i];
        samples_.push_back({world.elapsed_time, static_cast<int>(i), b.position.x,
                            b.position.y, b.velocity.x, b.velocity.y});
    }
}

void write_diagnostics_csv(std::ostream& out,
                           std::span<const EntropySample> samples) {
    out << "time,entropy,energy_share_spread\n";
    for (const EntropySample& s : samples) {
        out << format_g(s.time) << ',' << format_g(s.coarse_entropy) << ','
            << format_g(s.energy_share_spread) << '\n';
    }
}

void write_trajectory_csv(std::ostream& out,
                          std::span<const TrajectorySample> samples) {
    out << "time,ball,x,y,vx,vy\n";
    for (const TrajectorySample& s : samples) {
        out << format_g(s.time) << ',' << s.ball << ',' << format_g(s.x) << ','
            << format_g(s.y) << ',' << format_g(s.vx) << ',' << format_g(s.vy)
            << '\n';
    }
}

}  // namespace arrowlab::billiard
