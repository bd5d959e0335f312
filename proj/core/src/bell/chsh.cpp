#include "arrowlab/bell/chsh.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "arrowlab/errors.hpp"

namespace arrowlab::bell {

using quantum::Axis;
using quantum::StateVector;
using quantum::Vec3;

const double kTsirelsonBound = 2.0 * std::sqrt(2.0);

namespace {

constexpr std::uint64_t kMinCellTrials = 25;

void require_unit(const Vec3& v, const char* name) {
    if (std::abs(v.norm() - 1.0) > 1e-9) {
        throw DomainError(std::string("CHSH axis '") + name +
                          "' is not a unit vector");
    }
}

/// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi rotations.
std::array<double, 3> symmetric_eigenvalues(std::array<std::array<double, 3>, 3> m) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::abs(m[0][1]) + std::abs(m[0][2]) + std::abs(m[1][2]);
        if (off < 1e-15) break;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(m[p][q]) < 1e-18) continue;
                const double theta = 0.5 * std::atan2(2.0 * m[p][q], m[q][q] - m[p][p]);
                const double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < 3; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    std::array<double, 3> eig{m[0][0], m[1][1], m[2][2]};
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::ConsistentWithLocalModel: return "consistent_with_local_model";
        case Verdict::ViolatesLocalModel: return "violates_local_model";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

ChshResult chsh(const StateVector& state, const Vec3& a, const Vec3& a_prime,
                const Vec3& b, const Vec3& b_prime) {
    require_unit(a, "a");
    require_unit(a_prime, "a'");
    require_unit(b, "b");
    require_unit(b_prime, "b'");

    ChshResult r;
    r.a = a;
    r.a_prime = a_prime;
    r.b = b;
    r.b_prime = b_prime;
    r.quantum_bound = kTsirelsonBound;
    r.value = correlation_exact(state, a, b) - correlation_exact(state, a, b_prime) +
              correlation_exact(state, a_prime, b) +
              correlation_exact(state, a_prime, b_prime);
    return r;
}

ChshResult chsh_optimal_singlet_settings(const StateVector& state) {
    const double r = 1.0 / std::sqrt(2.0);
    const Vec3 a{0.0, 0.0, 1.0};
    const Vec3 a_prime{1.0, 0.0, 0.0};
    const Vec3 b{-r, 0.0, -r};
    const Vec3 b_prime{-r, 0.0, r};
    return chsh(state, a, a_prime, b, b_prime);
}

Verdict nonlocality_verdict(const CorrelationTable& table) {
    if (table.min_cell_trials() < kMinCellTrials) return Verdict::Inconclusive;

    // T[i][j] estimates tr(rho sigma_i x sigma_j); the best CHSH value any
    // settings can extract from a state with correlation matrix T is
    // 2*sqrt(m1+m2), m1 >= m2 the leading eigenvalues of T^T T.
    std::array<std::array<double, 3>, 3> t{};
    double var_sum = 0.0;
    const auto axes = CorrelationTable::axes();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const auto& c = table.cell(axes[i], axes[j]);
            t[i][j] = c.e();
            const double se = c.stderr_e();
            var_sum += se * se;
        }
    }

    std::array<std::array<double, 3>, 3> tt{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) tt[i][j] += t[k][i] * t[k][j];
        }
    }
    const auto eig = symmetric_eigenvalues(tt);
    const double m1 = std::max(eig[0], 0.0);
    const double m2 = std::max(eig[1], 0.0);
    const double s_max = 2.0 * std::sqrt(m1 + m2);

    // |dS/dT_ij| <= 2, so this overestimates the standard error of s_max.
    const double sigma = 2.0 * std::sqrt(var_sum);

    return s_max - 3.0 * sigma > kClassicalBound ? Verdict::ViolatesLocalModel
                                                 : Verdict::ConsistentWithLocalModel;
}

}  // namespace arrowlab::bell
