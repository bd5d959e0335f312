#include "arrowlab/bell/correlation.hpp"

#include <cmath>
#include <string>

#include "arrowlab/errors.hpp"

namespace arrowlab::bell {

using quantum::Axis;
using quantum::StateVector;
using quantum::Vec3;

namespace {

void require_two_qubits(const StateVector& state) {
    if (state.subsystem_count() != 2) {
        throw DomainError("correlation requires a two-subsystem state, got " +
                          std::to_string(state.subsystem_count()));
    }
}

Axis axis_from_index(std::uint64_t i) {
    switch (i) {
        case 0: return Axis::X;
        case 1: return Axis::Y;
        default: return Axis::Z;
    }
}

}  // namespace

double CorrelationCell::stderr_e() const {
    if (trials == 0) return 0.0;
    const double estimate = e();
    const double var = (1.0 - estimate * estimate) / static_cast<double>(trials);
    return var > 0.0 ? std::sqrt(var) : 0.0;
}

CorrelationTable& CorrelationTable::merge(const CorrelationTable& other) {
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            cells_[i][j].trials += other.cells_[i][j].trials;
            cells_[i][j].same += other.cells_[i][j].same;
        }
    }
    return *this;
}

std::uint64_t CorrelationTable::total_trials() const {
    std::uint64_t total = 0;
    for (const auto& row : cells_) {
        for (const auto& c : row) total += c.trials;
    }
    return total;
}

std::uint64_t CorrelationTable::min_cell_trials() const {
    std::uint64_t least = ~std::uint64_t{0};
    for (const auto& row : cells_) {
        for (const auto& c : row) least = std::min(least, c.trials);
    }
    return least;
}

double correlation_exact(const StateVector& state, const Vec3& a, const Vec3& b) {
    require_two_qubits(state);
    const auto pa = quantum::spin_projectors(a);
    const auto pb = quantum::spin_projectors(b);
    const auto label1 = std::string(state.labels()[0]);
    const auto label2 = std::string(state.labels()[1]);

    double e = 0.0;
    for (int s1 = 0; s1 < 2; ++s1) {
        const auto first =
            quantum::project(state, label1, s1 == 0 ? pa.first : pa.second);
        if (!first.collapsed) continue;
        for (int s2 = 0; s2 < 2; ++s2) {
            const auto second = quantum::project(
                *first.collapsed, label2, s2 == 0 ? pb.first : pb.second);
            const double joint = first.probability * second.probability;
            e += (s1 == s2 ? joint : -joint);
        }
    }
    return e;
}

double correlation_exact(const StateVector& state, Axis a, Axis b) {
    return correlation_exact(state, quantum::axis_vector(a), quantum::axis_vector(b));
}

CorrelationTable sample_table(const StateVector& state, std::uint64_t trials,
                              Rng& rng) {
    require_two_qubits(state);
    const auto label1 = std::string(state.labels()[0]);
    const auto label2 = std::string(state.labels()[1]);

    CorrelationTable table;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Axis a1 = axis_from_index(rng.below(3));
        const Axis a2 = axis_from_index(rng.below(3));
        auto [o1, after1] = quantum::measure(state, label1, a1, rng);
        auto [o2, after2] = quantum::measure(after1, label2, a2, rng);
        table.add(a1, a2, o1 == o2);
    }
    return table;
}

}  // namespace arrowlab::bell
