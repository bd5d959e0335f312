#include "arrowlab/quantum/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "arrowlab/errors.hpp"

namespace arrowlab::quantum {

namespace {

constexpr double kNormTolerance = 1e-12;

void check_labels_unique(const std::vector<std::string>& labels) {
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) throw DuplicateLabelError(label);
    }
}

}  // namespace

StateVector::StateVector(std::vector<std::string> labels,
                         std::vector<Complex> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != (std::size_t{1} << labels_.size())) {
        throw DomainError("amplitude count " + std::to_string(amplitudes_.size()) +
                          " is not 2^" + std::to_string(labels_.size()));
    }
    check_labels_unique(labels_);
    normalized_ = std::abs(norm_squared() - 1.0) <= kNormTolerance;
}

StateVector StateVector::basis(std::string label, int value) {
    if (value != 0 && value != 1) throw DomainError("basis value must be 0 or 1");
    std::vector<Complex> amps(2, Complex{0.0, 0.0});
    amps[static_cast<std::size_t>(value)] = 1.0;
    return StateVector({std::move(label)}, std::move(amps));
}

StateVector StateVector::plus(std::string label) {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector({std::move(label)}, {Complex{r, 0.0}, Complex{r, 0.0}});
}

std::size_t StateVector::index_of(std::string_view label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        if (labels_[k] == label) return k;
    }
    throw UnknownLabelError(std::string(label));
}

bool StateVector::has_label(std::string_view label) const {
    return std::any_of(labels_.begin(), labels_.end(),
                       [&](const std::string& l) { return l == label; });
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes_) sum += std::norm(a);
    return sum;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector StateVector::renormalized() const {
    const double n = norm();
    if (n <= 0.0) throw DomainError("cannot normalize a zero state vector");
    std::vector<Complex> amps(amplitudes_);
    for (Complex& a : amps) a /= n;
    return StateVector(labels_, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    for (const auto& label : b.labels()) {
        if (a.has_label(label)) throw DuplicateLabelError(label);
    }
    std::vector<std::string> labels(a.labels().begin(), a.labels().end());
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());

    std::vector<Complex> amps(a.dimension() * b.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < b.dimension(); ++j) {
            amps[i * b.dimension() + j] = a.amplitude(i) * b.amplitude(j);
        }
    }
    return StateVector(std::move(labels), std::move(amps));
}

Complex overlap(const StateVector& a, const StateVector& b) {
    if (a.labels().size() != b.labels().size() ||
        !std::equal(a.labels().begin(), a.labels().end(), b.labels().begin())) {
        throw LabelMismatchError();
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        sum += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return sum;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(overlap(a, b));
}

}  // namespace arrowlab::quantum
