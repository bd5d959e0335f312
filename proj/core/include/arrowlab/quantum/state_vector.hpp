#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arrowlab::quantum {

using Complex = std::complex<double>;

/// Pure state of a register of labeled two-level subsystems, stored as a
/// dense amplitude array of length 2^n.
///
/// Index convention: the first label is the most significant bit, so
/// tensor(a, b) is the plain Kronecker product of the amplitude arrays.
/// Basis value 0 of a subsystem is its |Z+> state, value 1 is |Z->.
class StateVector {
public:
    /// Builds a state from explicit amplitudes. Throws DomainError when the
    /// amplitude count is not 2^(label count) or labels repeat.
    StateVector(std::vector<std::string> labels, std::vector<Complex> amplitudes);

    /// Basis state |value> of a single subsystem (0 -> |Z+>, 1 -> |Z->).
    static StateVector basis(std::string label, int value);

    /// Equal superposition (|Z+> + |Z->)/sqrt(2) of a single subsystem.
    static StateVector plus(std::string label);

    std::size_t subsystem_count() const { return labels_.size(); }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const std::string> labels() const { return labels_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex amplitude(std::size_t basis_index) const { return amplitudes_[basis_index]; }

    /// Position of `label` in the label list. Throws UnknownLabelError.
    std::size_t index_of(std::string_view label) const;
    bool has_label(std::string_view label) const;

    /// Basis value (0 or 1) of subsystem `k` within basis index `i`.
    int basis_value(std::size_t i, std::size_t k) const {
        return static_cast<int>((i >> (labels_.size() - 1 - k)) & 1u);
    }

    double norm_squared() const;
    double norm() const;

    /// True when the squared-amplitude sum was within 1e-12 of 1 at
    /// construction time.
    bool normalized() const { return normalized_; }

    /// Same state scaled to unit norm. Throws DomainError on a zero vector.
    StateVector renormalized() const;

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Complex> amplitudes_;
    bool normalized_ = false;
};

/// Kronecker product; result labels are a's labels followed by b's.
/// Throws DuplicateLabelError when the label sets intersect.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Inner product <a|b>. Throws LabelMismatchError unless the label lists
/// are identical (same names, same order).
Complex overlap(const StateVector& a, const StateVector& b);

/// |<a|b>|^2 — fidelity between pure states.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace arrowlab::quantum
