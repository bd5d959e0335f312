#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "arrowlab/quantum/state_vector.hpp"
#include "arrowlab/rng.hpp"

namespace arrowlab::quantum {

/// Spin measurement axis. Conventions: x = (1,0,0), y = (0,1,0), z = (0,0,1)
/// with the standard Pauli matrices; |Z+> is basis value 0.
enum class Axis { X, Y, Z };

enum class Outcome { Plus, Minus };

inline int sign_of(Outcome o) { return o == Outcome::Plus ? +1 : -1; }

/// Unit direction on the Bloch sphere, for measurements along arbitrary axes.
struct Vec3 {
    double x = 0, y = 0, z = 0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
};

Vec3 axis_vector(Axis axis);
const char* axis_name(Axis axis);

/// 2x2 complex matrix in row-major order; just enough linear algebra for
/// single-subsystem operators.
struct Mat2 {
    std::array<Complex, 4> m{};  // m[2*row + col]

    Complex operator()(int row, int col) const { return m[2 * row + col]; }
    Complex& operator()(int row, int col) { return m[2 * row + col]; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 adjoint() const;
    static Mat2 identity();
};

/// Projector pair (P+, P-) = ((I ± a·sigma)/2) for measurement axis `a`.
/// Each is Hermitian and idempotent; P+ + P- = I.
std::pair<Mat2, Mat2> axis_projectors(Axis axis);

/// Same, for an arbitrary axis. Throws DomainError when `a` is not unit
/// length within 1e-9.
std::pair<Mat2, Mat2> spin_projectors(const Vec3& a);

/// Outcomes with probability below this floor are treated as impossible, so
/// round-off noise is never renormalized into a state.
inline constexpr double kProbabilityFloor = 1e-15;

/// Tolerance for the idempotency check on projectors.
inline constexpr double kProjectorTolerance = 1e-10;

struct ProjectionResult {
    double probability = 0.0;
    /// Renormalized post-projection state; absent when probability is below
    /// the floor.
    std::optional<StateVector> collapsed;
};

/// Projective collapse of one subsystem: probability <s|P|s> and the
/// renormalized state P|s>. Throws UnknownLabelError / InvalidProjectorError.
ProjectionResult project(const StateVector& s, std::string_view target,
                         const Mat2& projector);

/// Born-rule measurement of one subsystem along `axis`. Consumes exactly one
/// draw from `rng`; identical (state, target, axis, rng stream) quadruples
/// give bit-identical results.
std::pair<Outcome, StateVector> measure(const StateVector& s,
                                        std::string_view target, Axis axis,
                                        Rng& rng);

/// Measurement along an arbitrary unit axis.
std::pair<Outcome, StateVector> measure_along(const StateVector& s,
                                              std::string_view target,
                                              const Vec3& axis, Rng& rng);

/// Applies a single-subsystem unitary in place of the subsystem's 2x2 block.
/// Throws InvalidUnitaryError when U†U deviates from I by more than 1e-10.
StateVector apply_unitary(const StateVector& s, std::string_view target,
                          const Mat2& u);

/// Projection onto the span of the basis states selected by `keep`
/// (a diagonal projector). Used for sector measurements whose subspaces are
/// not single-subsystem products.
ProjectionResult project_mask(const StateVector& s,
                              const std::function<bool(std::size_t)>& keep);

/// One-subsystem reduced density matrix (row-major 2x2).
Mat2 reduced_density(const StateVector& s, std::string_view target);

/// Removes a subsystem that is in a definite basis state (all amplitude in
/// one slice). Throws DomainError when neither slice holds the full norm.
StateVector remove_definite(const StateVector& s, std::string_view target);

}  // namespace arrowlab::quantum
