#pragma once

#include <cstdint>
#include <vector>

namespace arrowlab::billiard {

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm_squared() const { return x * x + y * y; }
    double norm() const;
};

struct Ball {
    Vec2 position;
    Vec2 velocity;
    double radius = 1.0;
    double mass = 1.0;

    double kinetic_energy() const {
        return 0.5 * mass * velocity.norm_squared();
    }
};

/// Axis-aligned rectangular table [0, width] x [0, height].
struct Table {
    double width = 100.0;
    double height = 50.0;
};

struct BilliardWorld {
    std::vector<Ball> balls;
    Table table;
    double elapsed_time = 0.0;
    std::uint64_t collision_count = 0;
};

/// Break geometry: a triangular rack of targets at rest and a cue ball
/// aimed at it. Everything here can be overridden through the run config.
struct BreakLayout {
    int n_targets = 15;
    double speed = 2.0;
    Table table{};
    double radius = 1.0;
    double mass = 1.0;
    /// Center-to-center gap added on top of touching distance in the rack.
    double rack_gap = 1e-4;
    double rack_apex_x = 65.0;
    double cue_x = 25.0;
    /// Vertical offset of the cue from the rack axis; a slightly off-center
    /// hit avoids a fully mirror-symmetric break.
    double cue_offset_y = 0.5;
};

/// Targets packed in a triangular lattice at rest plus a cue ball moving
/// toward them at `speed`. Throws DomainError when fewer than 3 targets are
/// requested, speed is not positive, or the rack does not fit the table.
BilliardWorld init_break(int n_targets, double speed);
BilliardWorld init_break(const BreakLayout& layout);

/// Every velocity negated; positions, time and counters unchanged.
BilliardWorld reverse(const BilliardWorld& world);

/// Rotates one ball's velocity by `angle` radians. Speed (and so kinetic
/// energy) is preserved; momentum is not. Throws DomainError on a bad index
/// or non-finite angle.
BilliardWorld perturb(const BilliardWorld& world, std::size_t ball_index,
                      double angle);

double total_kinetic_energy(const BilliardWorld& world);
Vec2 total_momentum(const BilliardWorld& world);

/// Checks the world invariants: positive radii and masses, all balls inside
/// the table, and pairwise center distances >= (ri+rj)(1 - 1e-9). Throws
/// DomainError on violation.
void validate(const BilliardWorld& world);

}  // namespace arrowlab::billiard
