#pragma once

#include <optional>

#include "arrowlab/billiard/world.hpp"

namespace arrowlab::billiard {

/// Wall identifiers: 0 = left (x=0), 1 = right (x=width), 2 = bottom (y=0),
/// 3 = top (y=height).
enum Wall { kWallLeft = 0, kWallRight = 1, kWallBottom = 2, kWallTop = 3 };

struct CollisionEvent {
    enum class Kind { BallBall, BallWall };

    double time = 0.0;  // absolute
    Kind kind = Kind::BallBall;
    int first = 0;   // ball index
    int second = 0;  // other ball index, or wall id

    /// Total order used for simultaneous events:
    /// (time, kind with BallBall first, first, second).
    friend bool operator<(const CollisionEvent& a, const CollisionEvent& b);
};

/// Earliest future contact, from the quadratic time-of-impact solutions.
/// Throws NoEventError when every ball is at rest.
CollisionEvent next_event(const BilliardWorld& world);

/// Ballistic drift of every ball to absolute time `t` (t >= elapsed_time).
BilliardWorld advance_to(const BilliardWorld& world, double t);

/// Applies the elastic impulse for `event`. Requires the world already
/// advanced to the event time with the contact geometry realized within
/// 1e-9; throws DomainError otherwise.
BilliardWorld resolve_collision(const BilliardWorld& world,
                                const CollisionEvent& event);

/// next_event + advance_to + resolve_collision.
BilliardWorld step(const BilliardWorld& world);

/// Stop condition for simulate(): absolute time and/or total collision
/// count, whichever comes first.
struct SimulateUntil {
    std::optional<double> time;
    std::optional<std::uint64_t> collisions;
};

/// Observer hook; simulate() calls on_state once on entry and after every
/// resolved collision (and after the final drift of a time-bounded run).
class Recorder {
public:
    virtual ~Recorder() = default;
    virtual void on_state(const BilliardWorld& world) = 0;
};

BilliardWorld simulate(BilliardWorld world, const SimulateUntil& until,
                       Recorder* recorder = nullptr);

}  // namespace arrowlab::billiard
