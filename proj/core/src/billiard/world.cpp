#include "arrowlab/billiard/world.hpp"

#include <cmath>
#include <string>

#include "arrowlab/errors.hpp"

namespace arrowlab::billiard {

double Vec2::norm() const { return std::sqrt(x * x + y * y); }

BilliardWorld init_break(int n_targets, double speed) {
    BreakLayout layout;
    layout.n_targets = n_targets;
    layout.speed = speed;
    return init_break(layout);
}

BilliardWorld init_break(const BreakLayout& layout) {
    if (layout.n_targets < 3) {
        throw DomainError("init_break needs at least 3 target balls");
    }
    if (!(layout.speed > 0.0)) throw DomainError("cue speed must be positive");
    if (!(layout.radius > 0.0) || !(layout.mass > 0.0)) {
        throw DomainError("radius and mass must be positive");
    }

    BilliardWorld world;
    world.table = layout.table;

    Ball cue;
    cue.position = {layout.cue_x, layout.table.height / 2 + layout.cue_offset_y};
    cue.velocity = {layout.speed, 0.0};
    cue.radius = layout.radius;
    cue.mass = layout.mass;
    world.balls.push_back(cue);

    // Triangular lattice opening away from the cue, apex toward it.
    const double spacing = 2.0 * layout.radius + layout.rack_gap;
    const double row_dx = spacing * std::sqrt(3.0) / 2.0;
    const double mid_y = layout.table.height / 2;
    int placed = 0;
    for (int row = 0; placed < layout.n_targets; ++row) {
        for (int i = 0; i <= row && placed < layout.n_targets; ++i, ++placed) {
            Ball b;
            b.position = {layout.rack_apex_x + row * row_dx,
                          mid_y + (i - row / 2.0) * spacing};
            b.velocity = {0.0, 0.0};
            b.radius = layout.radius;
            b.mass = layout.mass;
            world.balls.push_back(b);
        }
    }

    try {
        validate(world);
    } catch (const DomainError& e) {
        throw DomainError(std::string("break layout does not fit the table: ") +
                          e.what());
    }
    return world;
}

BilliardWorld reverse(const BilliardWorld& world) {
    BilliardWorld out = world;
    for (Ball& b : out.balls) {
        b.velocity.x = -b.velocity.x;
        b.velocity.y = -b.velocity.y;
    }
    return out;
}

BilliardWorld perturb(const BilliardWorld& world, std::size_t ball_index,
                      double angle) {
    if (ball_index >= world.balls.size()) {
        throw DomainError("perturb: ball index " + std::to_string(ball_index) +
                          " out of range");
    }
    if (!std::isfinite(angle)) throw DomainError("perturb: angle must be finite");

    BilliardWorld out = world;
    Ball& b = out.balls[ball_index];
    const double c = std::cos(angle), s = std::sin(angle);
    const Vec2 v = b.velocity;
    b.velocity = {v.x * c - v.y * s, v.x * s + v.y * c};
    return out;
}

double total_kinetic_energy(const BilliardWorld& world) {
    double e = 0.0;
    for (const Ball& b : world.balls) e += b.kinetic_energy();
    return e;
}

Vec2 total_momentum(const BilliardWorld& world) {
    Vec2 p;
    for (const Ball& b : world.balls) p = p + b.velocity * b.mass;
    return p;
}

void validate(const BilliardWorld& world) {
    constexpr double kOverlapTolerance = 1e-9;
    for (std::size_t i = 0; i < world.balls.size(); ++i) {
        const Ball& b = world.balls[i];
        if (!(b.radius > 0.0) || !(b.mass > 0.0)) {
            throw DomainError("ball " + std::to_string(i) +
                              ": radius and mass must be positive");
        }
        if (b.position.x < b.radius - kOverlapTolerance ||
            b.position.x > world.table.width - b.radius + kOverlapTolerance ||
            b.position.y < b.radius - kOverlapTolerance ||
            b.position.y > world.table.height - b.radius + kOverlapTolerance) {
            throw DomainError("ball " + std::to_string(i) + " outside the table");
        }
        for (std::size_t j = i + 1; j < world.balls.size(); ++j) {
            const double min_dist = (b.radius + world.balls[j].radius) *
                                    (1.0 - kOverlapTolerance);
            const Vec2 dr = world.balls[j].position - b.position;
            if (dr.norm_squared() < min_dist * min_dist) {
                throw DomainError("balls " + std::to_string(i) + " and " +
                                  std::to_string(j) + " overlap");
            }
        }
    }
}

}  // namespace arrowlab::billiard
