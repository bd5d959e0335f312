#pragma once

#include <optional>

#include "arrowlab/quantum/measurement.hpp"
#include "arrowlab/quantum/state_vector.hpp"
#include "arrowlab/rng.hpp"

namespace arrowlab::experiments {

/// Subsystem labels used by the two-atom interferometer experiment.
inline constexpr const char* kPhotonLabel = "photon";
inline constexpr const char* kAtom1Label = "atom1";
inline constexpr const char* kAtom2Label = "atom2";

enum class EprClass { Scattered, DisruptedEntangled, InterferenceIntact };
enum class PhotonPort { Bright, Dark, None };

const char* to_string(EprClass c);
const char* to_string(PhotonPort p);

struct InverseEprOutcome {
    EprClass classification = EprClass::Scattered;
    PhotonPort photon_port = PhotonPort::None;
    /// Post-selected state of the two atoms; absent for scattered trials.
    std::optional<quantum::StateVector> atom_state;
};

/// The spin-anticorrelated two-atom pair state
/// (|Z-> |Z+>  -  |Z+> |Z->) / sqrt(2), the reference the post-selected
/// atoms are compared against.
quantum::StateVector singlet_state(std::string label1, std::string label2);

/// Initial state of one trial: photon path qubit and both atom position
/// qubits, each in an equal superposition (8 amplitudes of modulus
/// 1/sqrt(8)). Photon path value i runs past atom (i+1)'s intersecting box;
/// atom basis value 0 means "in the intersecting box".
quantum::StateVector build_inverse_epr();

/// One trial: a three-outcome sector measurement (photon scattered by the
/// atom on its own path / exactly one atom blocking the other path / both
/// atoms clear), followed by the output-port projection for the photon.
/// Consumes exactly one rng draw.
InverseEprOutcome run_inverse_epr(Rng& rng);

}  // namespace arrowlab::experiments
