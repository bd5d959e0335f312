#include "arrowlab/experiments/hardy_chain.hpp"

#include <cmath>

#include "arrowlab/errors.hpp"
#include "arrowlab/quantum/measurement.hpp"

namespace arrowlab::experiments {

using quantum::Mat2;
using quantum::StateVector;

namespace {

Mat2 output_splitter() {
    const double r = 1.0 / std::sqrt(2.0);
    Mat2 u;
    u(0, 0) = r;
    u(0, 1) = r;
    u(1, 0) = r;
    u(1, 1) = -r;
    return u;
}

}  // namespace

std::string chain_atom_label(int k) { return "atom" + std::to_string(k); }

const char* to_string(HardyPort p) {
    switch (p) {
        case HardyPort::Scattered: return "scattered";
        case HardyPort::Bright: return "bright";
        case HardyPort::Dark: return "dark";
    }
    return "?";
}

const char* to_string(AtomResult r) {
    switch (r) {
        case AtomResult::Intersecting: return "intersecting";
        case AtomResult::NonIntersecting: return "non_intersecting";
        case AtomResult::Unmeasured: return "unmeasured";
    }
    return "?";
}

StateVector build_hardy_chain(int n) {
    if (n < 1 || n > kMaxChainAtoms) {
        throw DomainError("n_atoms must be between 1 and " +
                          std::to_string(kMaxChainAtoms));
    }
    StateVector state = StateVector::plus(kArmLabel);
    for (int k = 1; k <= n; ++k) {
        state = tensor(std::move(state), StateVector::plus(chain_atom_label(k)));
    }
    return state;
}

HardyChainOutcome run_hardy_chain(int n, Rng& rng, bool measure_until_found) {
    StateVector psi = build_hardy_chain(n);

    // Arm value 1 is the rail through the boxes; atom value 0 means the atom
    // sits in its intersecting box. The photon scatters iff it rides that
    // rail and at least one atom is in the way.
    const std::size_t atom_mask = (std::size_t{1} << n) - 1;
    const std::size_t arm_bit = std::size_t{1} << n;
    auto scattering = [=](std::size_t i) {
        return (i & arm_bit) != 0 && (i & atom_mask) != atom_mask;
    };

    HardyChainOutcome out;
    out.n_atoms = n;
    out.atom_results.assign(static_cast<std::size_t>(n), AtomResult::Unmeasured);

    double p_scatter = 0.0;
    for (std::size_t i = 0; i < psi.dimension(); ++i) {
        if (scattering(i)) p_scatter += std::norm(psi.amplitude(i));
    }
    if (rng.uniform() < p_scatter) {
        out.port = HardyPort::Scattered;
        return out;
    }

    auto survived = quantum::project_mask(
        psi, [&](std::size_t i) { return !scattering(i); });
    StateVector recombined =
        apply_unitary(*survived.collapsed, kArmLabel, output_splitter());

    // Port detection: arm value 0 = bright, 1 = dark.
    auto [port_outcome, collapsed] =
        quantum::measure(recombined, kArmLabel, quantum::Axis::Z, rng);
    StateVector atoms = quantum::remove_definite(collapsed, kArmLabel);

    if (port_outcome == quantum::Outcome::Plus) {
        out.port = HardyPort::Bright;
        out.residual_state = std::move(atoms);
        return out;
    }

    out.port = HardyPort::Dark;
    out.dark_detected = true;
    for (int k = 1; k <= n; ++k) {
        auto [box, next] =
            quantum::measure(atoms, chain_atom_label(k), quantum::Axis::Z, rng);
        const bool intersecting = box == quantum::Outcome::Plus;
        out.atom_results[static_cast<std::size_t>(k - 1)] =
            intersecting ? AtomResult::Intersecting : AtomResult::NonIntersecting;
        atoms = quantum::remove_definite(next, chain_atom_label(k));
        if (measure_until_found && intersecting) break;
    }
    out.residual_state = std::move(atoms);
    return out;
}

double subsystem_visibility(const StateVector& s, std::string_view label) {
    const Mat2 rho = quantum::reduced_density(s, label);
    return 2.0 * std::abs(rho(0, 1));
}

std::vector<double> residual_visibility(const StateVector& residual) {
    std::vector<double> out;
    out.reserve(residual.subsystem_count());
    for (const auto& label : residual.labels()) {
        out.push_back(subsystem_visibility(residual, label));
    }
    return out;
}

}  // namespace arrowlab::experiments
