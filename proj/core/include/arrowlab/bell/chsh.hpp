#pragma once

#include "arrowlab/bell/correlation.hpp"
#include "arrowlab/quantum/measurement.hpp"
#include "arrowlab/quantum/state_vector.hpp"

namespace arrowlab::bell {

inline constexpr double kClassicalBound = 2.0;
extern const double kTsirelsonBound;  // 2*sqrt(2)

struct ChshResult {
    quantum::Vec3 a, a_prime, b, b_prime;
    double value = 0.0;
    double classical_bound = kClassicalBound;
    double quantum_bound = 0.0;  // 2*sqrt(2)
};

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b'), from exact correlations.
/// Axes may be arbitrary unit vectors; throws DomainError when one is off
/// unit length by more than 1e-9.
ChshResult chsh(const quantum::StateVector& state, const quantum::Vec3& a,
                const quantum::Vec3& a_prime, const quantum::Vec3& b,
                const quantum::Vec3& b_prime);

/// The settings that maximize |S| for the spin-anticorrelated pair
/// (a = z, a' = x, b = -(z+x)/sqrt(2), b' = (z-x)/sqrt(2)).
ChshResult chsh_optimal_singlet_settings(const quantum::StateVector& state);

enum class Verdict {
    ConsistentWithLocalModel,
    ViolatesLocalModel,
    Inconclusive,
};

const char* to_string(Verdict v);

/// Judges a sampled nine-pair table against the deterministic local-model
/// envelope. The table's cells estimate the state's correlation matrix T;
/// the largest CHSH value any settings can reach on that state is
/// 2*sqrt(m1+m2) with m1, m2 the two largest eigenvalues of T^T T. The
/// verdict is a violation when that value clears the classical bound 2 by
/// more than three propagated standard errors, and inconclusive when any
/// cell has too few trials to estimate.
Verdict nonlocality_verdict(const CorrelationTable& table);

}  // namespace arrowlab::bell
