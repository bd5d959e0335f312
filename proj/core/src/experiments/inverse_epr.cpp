#include "arrowlab/experiments/inverse_epr.hpp"

#include <cmath>

#include "arrowlab/errors.hpp"

namespace arrowlab::experiments {

using quantum::Complex;
using quantum::Mat2;
using quantum::StateVector;

namespace {

// Basis-index bits of the 3-qubit register (photon, atom1, atom2).
constexpr std::size_t kPhotonBit = 2;
constexpr std::size_t kAtom1Bit = 1;
constexpr std::size_t kAtom2Bit = 0;

// Photon path value i runs past atom (i+1); atom value 0 = intersecting box.
bool photon_scattered(std::size_t i) {
    const auto path = (i >> kPhotonBit) & 1u;
    const auto atom1 = (i >> kAtom1Bit) & 1u;
    const auto atom2 = (i >> kAtom2Bit) & 1u;
    return (path == 0 && atom1 == 0) || (path == 1 && atom2 == 0);
}

bool one_atom_blocks_other_path(std::size_t i) {
    const auto path = (i >> kPhotonBit) & 1u;
    const auto atom1 = (i >> kAtom1Bit) & 1u;
    const auto atom2 = (i >> kAtom2Bit) & 1u;
    return (path == 0 && atom1 == 1 && atom2 == 0) ||
           (path == 1 && atom1 == 0 && atom2 == 1);
}

// Output beam splitter: path superposition (|0> + |1>)/sqrt(2) exits the
// bright port (photon value 0), (|0> - |1>)/sqrt(2) the dark port.
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

const char* to_string(EprClass c) {
    switch (c) {
        case EprClass::Scattered: return "scattered";
        case EprClass::DisruptedEntangled: return "disrupted_entangled";
        case EprClass::InterferenceIntact: return "interference_intact";
    }
    return "?";
}

const char* to_string(PhotonPort p) {
    switch (p) {
        case PhotonPort::Bright: return "bright";
        case PhotonPort::Dark: return "dark";
        case PhotonPort::None: return "none";
    }
    return "?";
}

StateVector singlet_state(std::string label1, std::string label2) {
    const double r = 1.0 / std::sqrt(2.0);
    // (|Z->|Z+>  -  |Z+>|Z->)/sqrt(2); |Z+> is basis value 0.
    return StateVector({std::move(label1), std::move(label2)},
                       {Complex{0.0, 0.0}, Complex{-r, 0.0}, Complex{r, 0.0},
                        Complex{0.0, 0.0}});
}

StateVector build_inverse_epr() {
    return tensor(tensor(StateVector::plus(kPhotonLabel),
                         StateVector::plus(kAtom1Label)),
                  StateVector::plus(kAtom2Label));
}

InverseEprOutcome run_inverse_epr(Rng& rng) {
    const StateVector psi = build_inverse_epr();

    // Three-outcome sector measurement. The sectors are mutually orthogonal
    // subspaces: the scattering interaction marks every branch where the
    // photon's own path is blocked, and within the remainder the
    // exactly-one-blocked-path branches are distinguishable from the
    // both-clear ones by which arm carries the photon.
    double p_scatter = 0.0;
    double p_disrupted = 0.0;
    for (std::size_t i = 0; i < psi.dimension(); ++i) {
        const double w = std::norm(psi.amplitude(i));
        if (photon_scattered(i)) {
            p_scatter += w;
        } else if (one_atom_blocks_other_path(i)) {
            p_disrupted += w;
        }
    }

    const double u = rng.uniform();
    InverseEprOutcome out;

    if (u < p_scatter) {
        out.classification = EprClass::Scattered;
        out.photon_port = PhotonPort::None;
        return out;
    }

    const bool disrupted = u < p_scatter + p_disrupted;
    auto sector = disrupted
                      ? quantum::project_mask(psi, one_atom_blocks_other_path)
                      : quantum::project_mask(psi, [](std::size_t i) {
                            return !photon_scattered(i) &&
                                   !one_atom_blocks_other_path(i);
                        });
    StateVector conditioned = apply_unitary(*sector.collapsed, kPhotonLabel,
                                            output_splitter());

    if (disrupted) {
        // A dark click heralds disrupted interference. The bright-exit
        // component of this sector carries the same atom pair up to a local
        // phase flip and is folded into the dark record.
        auto dark = quantum::project(conditioned, kPhotonLabel,
                                     quantum::axis_projectors(quantum::Axis::Z).second);
        out.classification = EprClass::DisruptedEntangled;
        out.photon_port = PhotonPort::Dark;
        out.atom_state = quantum::remove_definite(*dark.collapsed, kPhotonLabel);
    } else {
        // Both paths clear: full interference, all amplitude exits bright.
        auto bright = quantum::project(conditioned, kPhotonLabel,
                                       quantum::axis_projectors(quantum::Axis::Z).first);
        out.classification = EprClass::InterferenceIntact;
        out.photon_port = PhotonPort::Bright;
        out.atom_state = quantum::remove_definite(*bright.collapsed, kPhotonLabel);
    }
    return out;
}

}  // namespace arrowlab::experiments
