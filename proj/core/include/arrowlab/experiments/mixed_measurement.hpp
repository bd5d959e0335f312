#pragma once

#include <optional>

#include "arrowlab/experiments/inverse_epr.hpp"
#include "arrowlab/quantum/measurement.hpp"
#include "arrowlab/rng.hpp"

namespace arrowlab::experiments {

/// Result of an inverse-EPR trial whose surviving atom pair is measured
/// along independently drawn axes.
struct MixedMeasurementOutcome {
    EprClass classification = EprClass::Scattered;
    /// True when the trial was disrupted-entangled and both atoms were
    /// spin-measured; the fields below are meaningful only then.
    bool measured = false;
    quantum::Axis axis1 = quantum::Axis::Z;
    quantum::Axis axis2 = quantum::Axis::Z;
    quantum::Outcome outcome1 = quantum::Outcome::Plus;
    quantum::Outcome outcome2 = quantum::Outcome::Plus;

    /// Exactly one of the two axes is z (a box check paired with a
    /// reunited-box spin measurement).
    bool is_mixed_axis_pair() const;

    /// Whether atom k (1 or 2) was z-measured and found in its intersecting
    /// box; empty when that atom was not z-measured.
    std::optional<bool> z_found_intersecting(int atom) const;
};

/// One trial: runs the inverse-EPR protocol; on a disrupted-entangled
/// outcome draws an independent uniform axis from {x, y, z} for each atom
/// and measures both.
MixedMeasurementOutcome run_mixed_measurement(Rng& rng);

}  // namespace arrowlab::experiments
