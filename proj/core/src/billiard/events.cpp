#include "arrowlab/billiard/events.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "arrowlab/errors.hpp"

namespace arrowlab::billiard {

namespace {

constexpr double kContactTolerance = 1e-9;

/// Time until two balls touch, or nullopt when they never do.
std::optional<double> ball_ball_impact(const Ball& a, const Ball& b) {
    const Vec2 dr = b.position - a.position;
    const Vec2 dv = b.velocity - a.velocity;
    const double approach = dr.dot(dv);
    if (approach >= 0.0) return std::nullopt;  // receding or parallel

    const double a2 = dv.norm_squared();
    const double contact = a.radius + b.radius;
    const double c = dr.norm_squared() - contact * contact;
    const double disc = approach * approach - a2 * c;
    if (disc <= 0.0) return std::nullopt;  // glancing miss

    const double t = (-approach - std::sqrt(disc)) / a2;
    // A hair negative means the pair is already in contact due to round-off.
    return t < 0.0 ? 0.0 : t;
}

std::optional<double> ball_wall_impact(const Ball& b, const Table& table,
                                       int wall) {
    switch (wall) {
        case kWallLeft:
            if (b.velocity.x < 0.0)
                return (b.radius - b.position.x) / b.velocity.x;
            return std::nullopt;
        case kWallRight:
            if (b.velocity.x > 0.0)
                return (table.width - b.radius - b.position.x) / b.velocity.x;
            return std::nullopt;
        case kWallBottom:
            if (b.velocity.y < 0.0)
                return (b.radius - b.position.y) / b.velocity.y;
            return std::nullopt;
        case kWallTop:
            if (b.velocity.y > 0.0)
                return (table.height - b.radius - b.position.y) / b.velocity.y;
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

}  // namespace

bool operator<(const CollisionEvent& a, const CollisionEvent& b) {
    return std::tie(a.time, a.kind, a.first, a.second) <
           std::tie(b.time, b.kind, b.first, b.second);
}

CollisionEvent next_event(const BilliardWorld& world) {
    bool found = false;
    CollisionEvent best{std::numeric_limits<double>::infinity(),
                        CollisionEvent::Kind::BallBall, 0, 0};

    const int n = static_cast<int>(world.balls.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (auto t = ball_ball_impact(world.balls[i], world.balls[j])) {
                CollisionEvent e{world.elapsed_time + *t,
                                 CollisionEvent::Kind::BallBall, i, j};
                if (!found || e < best) best = e, found = true;
            }
        }
        for (int wall = 0; wall < 4; ++wall) {
            if (auto t = ball_wall_impact(world.balls[i], world.table, wall)) {
                const double dt = *t < 0.0 ? 0.0 : *t;
                CollisionEvent e{world.elapsed_time + dt,
                                 CollisionEvent::Kind::BallWall, i, wall};
                if (!found || e < best) best = e, found = true;
            }
        }
    }
    if (!found) throw NoEventError();
    return best;
}

BilliardWorld advance_to(const BilliardWorld& world, double t) {
    if (t < world.elapsed_time) {
        throw DomainError("advance_to: target time precedes current time");
    }
    BilliardWorld out = world;
    const double dt = t - world.elapsed_time;
    for (Ball& b : out.balls) b.position = b.position + b.velocity * dt;
    out.elapsed_time = t;
    return out;
}

BilliardWorld resolve_collision(const BilliardWorld& world,
                                const CollisionEvent& event) {
    if (std::abs(world.elapsed_time - event.time) > kContactTolerance) {
        throw DomainError("resolve_collision: world not advanced to event time");
    }
    BilliardWorld out = world;

    if (event.kind == CollisionEvent::Kind::BallBall) {
        Ball& a = out.balls[static_cast<std::size_t>(event.first)];
        Ball& b = out.balls[static_cast<std::size_t>(event.second)];
        const Vec2 dr = b.position - a.position;
        const double dist = dr.norm();
        const double contact = a.radius + b.radius;
        if (std::abs(dist - contact) > kContactTolerance * contact) {
            throw DomainError("resolve_collision: balls not in contact");
        }
        const Vec2 normal = dr * (1.0 / dist);
        const double closing = (a.velocity - b.velocity).dot(normal);
        if (closing > 0.0) {
            const double impulse =
                2.0 * a.mass * b.mass / (a.mass + b.mass) * closing;
            a.velocity = a.velocity - normal * (impulse / a.mass);
            b.velocity = b.velocity + normal * (impulse / b.mass);
        }
    } else {
        Ball& b = out.balls[static_cast<std::size_t>(event.first)];
        double gap = 0.0;
        switch (event.second) {
            case kWallLeft: gap = b.position.x - b.radius; break;
            case kWallRight: gap = world.table.width - b.radius - b.position.x; break;
            case kWallBottom: gap = b.position.y - b.radius; break;
            case kWallTop: gap = world.table.height - b.radius - b.position.y; break;
            default: throw DomainError("resolve_collision: bad wall id");
        }
        if (std::abs(gap) > kContactTolerance) {
            throw DomainError("resolve_collision: ball not at the wall");
        }
        if (event.second == kWallLeft || event.second == kWallRight) {
            b.velocity.x = -b.velocity.x;
        } else {
            b.velocity.y = -b.velocity.y;
        }
    }

    ++out.collision_count;
    return out;
}

BilliardWorld step(const BilliardWorld& world) {
    const CollisionEvent event = next_event(world);
    return resolve_collision(advance_to(world, event.time), event);
}

BilliardWorld simulate(BilliardWorld world, const SimulateUntil& until,
                       Recorder* recorder) {
    if (recorder) recorder->on_state(world);
    while (true) {
        if (until.collisions && world.collision_count >= *until.collisions) break;

        const CollisionEvent event = next_event(world);
        if (until.time && event.time > *until.time) {
            world = advance_to(world, *until.time);
            if (recorder) recorder->on_state(world);
            break;
        }
        world = resolve_collision(advance_to(world, event.time), event);
        if (recorder) recorder->on_state(world);
    }
    return world;
}

}  // namespace arrowlab::billiard
