#include "arrowlab/experiments/mixed_measurement.hpp"

namespace arrowlab::experiments {

using quantum::Axis;
using quantum::Outcome;

namespace {

Axis draw_axis(Rng& rng) {
    switch (rng.below(3)) {
        case 0: return Axis::X;
        case 1: return Axis::Y;
        default: return Axis::Z;
    }
}

}  // namespace

bool MixedMeasurementOutcome::is_mixed_axis_pair() const {
    return measured && ((axis1 == Axis::Z) != (axis2 == Axis::Z));
}

std::optional<bool> MixedMeasurementOutcome::z_found_intersecting(int atom) const {
    if (!measured) return std::nullopt;
    const Axis axis = atom == 1 ? axis1 : axis2;
    if (axis != Axis::Z) return std::nullopt;
    // |Z+> is the intersecting box.
    return (atom == 1 ? outcome1 : outcome2) == Outcome::Plus;
}

MixedMeasurementOutcome run_mixed_measurement(Rng& rng) {
    const InverseEprOutcome epr = run_inverse_epr(rng);

    MixedMeasurementOutcome out;
    out.classification = epr.classification;
    if (epr.classification != EprClass::DisruptedEntangled) return out;

    out.axis1 = draw_axis(rng);
    out.axis2 = draw_axis(rng);
    auto [o1, after1] = quantum::measure(*epr.atom_state, kAtom1Label, out.axis1, rng);
    auto [o2, after2] = quantum::measure(after1, kAtom2Label, out.axis2, rng);
    out.outcome1 = o1;
    out.outcome2 = o2;
    out.measured = true;
    return out;
}

}  // namespace arrowlab::experiments
