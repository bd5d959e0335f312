#include "arrowlab/quantum/measurement.hpp"

#include <cmath>

#include "arrowlab/errors.hpp"

namespace arrowlab::quantum {

namespace {

/// Applies a 2x2 operator to one subsystem of the amplitude array.
std::vector<Complex> apply_single(const StateVector& s, std::size_t subsystem,
                                  const Mat2& op) {
    const std::size_t n = s.subsystem_count();
    const std::size_t bit = n - 1 - subsystem;
    const std::size_t stride = std::size_t{1} << bit;

    std::vector<Complex> out(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i & stride) continue;  // handle each (i0, i1) pair once
        const Complex a0 = out[i];
        const Complex a1 = out[i | stride];
        out[i] = op(0, 0) * a0 + op(0, 1) * a1;
        out[i | stride] = op(1, 0) * a0 + op(1, 1) * a1;
    }
    return out;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 axis_vector(Axis axis) {
    switch (axis) {
        case Axis::X: return {1.0, 0.0, 0.0};
        case Axis::Y: return {0.0, 1.0, 0.0};
        case Axis::Z: return {0.0, 0.0, 1.0};
    }
    throw DomainError("invalid axis");
}

const char* axis_name(Axis axis) {
    switch (axis) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        case Axis::Z: return "z";
    }
    return "?";
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
        }
    }
    return r;
}

Mat2 Mat2::adjoint() const {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
    }
    return r;
}

Mat2 Mat2::identity() {
    Mat2 r;
    r(0, 0) = 1.0;
    r(1, 1) = 1.0;
    return r;
}

std::pair<Mat2, Mat2> axis_projectors(Axis axis) {
    return spin_projectors(axis_vector(axis));
}

std::pair<Mat2, Mat2> spin_projectors(const Vec3& a) {
    if (std::abs(a.norm() - 1.0) > 1e-9) {
        throw DomainError("measurement axis is not a unit vector");
    }
    // a·sigma = [[ z, x-iy ], [ x+iy, -z ]]
    Mat2 plus, minus;
    plus(0, 0) = 0.5 * (1.0 + a.z);
    plus(0, 1) = 0.5 * Complex{a.x, -a.y};
    plus(1, 0) = 0.5 * Complex{a.x, a.y};
    plus(1, 1) = 0.5 * (1.0 - a.z);
    minus(0, 0) = 0.5 * (1.0 - a.z);
    minus(0, 1) = -plus(0, 1);
    minus(1, 0) = -plus(1, 0);
    minus(1, 1) = 0.5 * (1.0 + a.z);
    return {plus, minus};
}

ProjectionResult project(const StateVector& s, std::string_view target,
                         const Mat2& projector) {
    const std::size_t k = s.index_of(target);

    const double dev = max_abs_diff(projector * projector, projector);
    if (dev > kProjectorTolerance) throw InvalidProjectorError(dev);

    std::vector<Complex> projected = apply_single(s, k, projector);
    double prob = 0.0;
    for (const Complex& a : projected) prob += std::norm(a);

    ProjectionResult result;
    result.probability = prob;
    if (prob > kProbabilityFloor) {
        const double inv = 1.0 / std::sqrt(prob);
        for (Complex& a : projected) a *= inv;
        result.collapsed = StateVector(
            std::vector<std::string>(s.labels().begin(), s.labels().end()),
            std::move(projected));
    }
    return result;
}

std::pair<Outcome, StateVector> measure_along(const StateVector& s,
                                              std::string_view target,
                                              const Vec3& axis, Rng& rng) {
    const auto [p_plus, p_minus] = spin_projectors(axis);
    ProjectionResult plus = project(s, target, p_plus);

    // One draw per call regardless of branch, so stream positions stay
    // aligned across outcome patterns.
    const double u = rng.uniform();

    double prob = plus.probability;
    if (prob < kProbabilityFloor) prob = 0.0;
    if (prob > 1.0 - kProbabilityFloor) prob = 1.0;

    if (u < prob) {
        return {Outcome::Plus, std::move(*plus.collapsed)};
    }
    ProjectionResult minus = project(s, target, p_minus);
    if (!minus.collapsed) {
        // Both outcomes below the floor means the input was not normalized.
        throw DomainError("measurement on a state with no admissible outcome");
    }
    return {Outcome::Minus, std::move(*minus.collapsed)};
}

std::pair<Outcome, StateVector> measure(const StateVector& s,
                                        std::string_view target, Axis axis,
                                        Rng& rng) {
    return measure_along(s, target, axis_vector(axis), rng);
}

StateVector apply_unitary(const StateVector& s, std::string_view target,
                          const Mat2& u) {
    if (max_abs_diff(u.adjoint() * u, Mat2::identity()) > 1e-10) {
        throw InvalidUnitaryError();
    }
    const std::size_t k = s.index_of(target);
    return StateVector(std::vector<std::string>(s.labels().begin(), s.labels().end()),
                       apply_single(s, k, u));
}

ProjectionResult project_mask(const StateVector& s,
                              const std::function<bool(std::size_t)>& keep) {
    std::vector<Complex> projected(s.amplitudes().begin(), s.amplitudes().end());
    double prob = 0.0;
    for (std::size_t i = 0; i < projected.size(); ++i) {
        if (keep(i)) {
            prob += std::norm(projected[i]);
        } else {
            projected[i] = 0.0;
        }
    }
    ProjectionResult result;
    result.probability = prob;
    if (prob > kProbabilityFloor) {
        const double inv = 1.0 / std::sqrt(prob);
        for (Complex& a : projected) a *= inv;
        result.collapsed = StateVector(
            std::vector<std::string>(s.labels().begin(), s.labels().end()),
            std::move(projected));
    }
    return result;
}

Mat2 reduced_density(const StateVector& s, std::string_view target) {
    const std::size_t k = s.index_of(target);
    const std::size_t bit = s.subsystem_count() - 1 - k;
    const std::size_t stride = std::size_t{1} << bit;

    Mat2 rho;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (i & stride) continue;
        const Complex a0 = s.amplitude(i);
        const Complex a1 = s.amplitude(i | stride);
        rho(0, 0) += a0 * std::conj(a0);
        rho(0, 1) += a0 * std::conj(a1);
        rho(1, 0) += a1 * std::conj(a0);
        rho(1, 1) += a1 * std::conj(a1);
    }
    return rho;
}

StateVector remove_definite(const StateVector& s, std::string_view target) {
    const std::size_t k = s.index_of(target);
    const std::size_t bit = s.subsystem_count() - 1 - k;
    const std::size_t stride = std::size_t{1} << bit;

    double slice_norm[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        slice_norm[(i >> bit) & 1u] += std::norm(s.amplitude(i));
    }
    const int value = slice_norm[1] > slice_norm[0] ? 1 : 0;
    if (slice_norm[1 - value] > kProbabilityFloor) {
        throw DomainError("subsystem '" + std::string(target) +
                          "' is not in a definite basis state");
    }

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < s.subsystem_count(); ++i) {
        if (i != k) labels.push_back(std::string(s.labels()[i]));
    }
    std::vector<Complex> amps(s.dimension() / 2, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (((i >> bit) & 1u) == static_cast<unsigned>(value)) {
            // Drop the fixed bit, keeping the relative order of the others.
            const std::size_t high = (i >> (bit + 1)) << bit;
            const std::size_t low = i & (stride - 1);
            amps[high | low] = s.amplitude(i);
        }
    }
    StateVector reduced(std::move(labels), std::move(amps));
    return reduced.normalized() ? reduced : reduced.renormalized();
}

}  // namespace arrowlab::quantum
