#pragma once

#include <array>
#include <cstdint>

#include "arrowlab/quantum/measurement.hpp"
#include "arrowlab/quantum/state_vector.hpp"
#include "arrowlab/rng.hpp"

namespace arrowlab::bell {

/// One cell of the nine-pair protocol: outcomes of measuring axis pair
/// (a1, a2) on repeated copies of a two-qubit state.
struct CorrelationCell {
    std::uint64_t trials = 0;
    std::uint64_t same = 0;  // both Plus or both Minus

    /// Correlation estimate E = P(same) - P(opposite).
    double e() const {
        return trials == 0 ? 0.0
                           : (2.0 * static_cast<double>(same) -
                              static_cast<double>(trials)) /
                                 static_cast<double>(trials);
    }

    /// Binomial standard error of the estimate.
    double stderr_e() const;
};

/// 3x3 grid of correlation estimates keyed by (axis1, axis2).
class CorrelationTable {
public:
    const CorrelationCell& cell(quantum::Axis a1, quantum::Axis a2) const {
        return cells_[index(a1)][index(a2)];
    }

    void add(quantum::Axis a1, quantum::Axis a2, bool same) {
        auto& c = cells_[index(a1)][index(a2)];
        ++c.trials;
        if (same) ++c.same;
    }

    /// Cell-wise sum; used to merge per-shard tables.
    CorrelationTable& merge(const CorrelationTable& other);

    std::uint64_t total_trials() const;
    std::uint64_t min_cell_trials() const;

    static constexpr std::array<quantum::Axis, 3> axes() {
        return {quantum::Axis::X, quantum::Axis::Y, quantum::Axis::Z};
    }

private:
    static std::size_t index(quantum::Axis a) { return static_cast<std::size_t>(a); }

    std::array<std::array<CorrelationCell, 3>, 3> cells_{};
};

/// Born-rule expectation of the product of the two +-1 outcomes, computed by
/// enumerating the four joint projectors (no sampling). Throws DomainError
/// unless the state has exactly two subsystems.
double correlation_exact(const quantum::StateVector& state, const quantum::Vec3& a,
                         const quantum::Vec3& b);
double correlation_exact(const quantum::StateVector& state, quantum::Axis a,
                         quantum::Axis b);

/// Samples `trials` measurement rounds; each round draws an independent
/// uniform axis pair and measures both qubits on a fresh copy of `state`.
CorrelationTable sample_table(const quantum::StateVector& state,
                              std::uint64_t trials, Rng& rng);

}  // namespace arrowlab::bell
