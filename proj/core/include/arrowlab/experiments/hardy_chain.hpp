#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrowlab/quantum/state_vector.hpp"
#include "arrowlab/rng.hpp"

namespace arrowlab::experiments {

inline constexpr const char* kArmLabel = "arm";
inline constexpr int kMaxChainAtoms = 12;

/// Label of the k-th chain atom, 1-based ("atom1", "atom2", ...).
std::string chain_atom_label(int k);

enum class HardyPort { Scattered, Bright, Dark };
enum class AtomResult { Intersecting, NonIntersecting, Unmeasured };

const char* to_string(HardyPort p);
const char* to_string(AtomResult r);

struct HardyChainOutcome {
    int n_atoms = 0;
    HardyPort port = HardyPort::Scattered;
    bool dark_detected = false;
    /// Box measurement result per atom, in chain order.
    std::vector<AtomResult> atom_results;
    /// Joint state of the atoms that were not box-measured; absent for
    /// scattered trials.
    std::optional<quantum::StateVector> residual_state;
};

/// Initial state: interferometer arm qubit and n atom position qubits, all
/// in equal superpositions. Arm value 1 is the rail that runs through every
/// atom's intersecting box; atom value 0 means "in the intersecting box".
/// Throws DomainError unless 1 <= n <= 12.
quantum::StateVector build_hardy_chain(int n);

/// One trial: scatter-sector sampling, recombination at the output splitter,
/// port detection, and (on a dark click) box measurements of the atoms in
/// chain order. With measure_until_found the sequence stops at the first
/// atom found in its intersecting box, leaving the rest unmeasured.
HardyChainOutcome run_hardy_chain(int n, Rng& rng, bool measure_until_found);

/// Interference visibility 2|rho01| of one subsystem's reduced state.
/// 1 means a fully coherent equal superposition, 0 a box eigenstate.
double subsystem_visibility(const quantum::StateVector& s, std::string_view label);

/// Visibility of every subsystem of `residual`, in label order.
std::vector<double> residual_visibility(const quantum::StateVector& residual);

}  // namespace arrowlab::experiments
