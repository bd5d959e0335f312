#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "arrowlab/experiments/hardy_chain.hpp"
#include "arrowlab/experiments/inverse_epr.hpp"
#include "arrowlab/experiments/mixed_measurement.hpp"

namespace arrowlab::experiments {

/// One recorded experiment run. The seed is captured before any sampling,
/// so re-running the matching trial function with it reproduces the payload
/// exactly.
struct TrialRecord {
    std::string experiment;
    std::uint64_t seed = 0;
    std::variant<InverseEprOutcome, HardyChainOutcome, MixedMeasurementOutcome>
        payload;
};

TrialRecord run_inverse_epr_trial(std::uint64_t seed);
TrialRecord run_hardy_chain_trial(int n, bool measure_until_found,
                                  std::uint64_t seed);
TrialRecord run_mixed_measurement_trial(std::uint64_t seed);

}  // namespace arrowlab::experiments
