#include "arrowlab/experiments/trial_record.hpp"

namespace arrowlab::experiments {

TrialRecord run_inverse_epr_trial(std::uint64_t seed) {
    TrialRecord record{"inverse_epr", seed, {}};
    Rng rng(seed);
    record.payload = run_inverse_epr(rng);
    return record;
}

TrialRecord run_hardy_chain_trial(int n, bool measure_until_found,
                                  std::uint64_t seed) {
    TrialRecord record{"hardy_chain", seed, {}};
    Rng rng(seed);
    record.payload = run_hardy_chain(n, rng, measure_until_found);
    return record;
}

TrialRecord run_mixed_measurement_trial(std::uint64_t seed) {
    TrialRecord record{"mixed_measurement", seed, {}};
    Rng rng(seed);
    record.payload = run_mixed_measurement(rng);
    return record;
}

}  // namespace arrowlab::experiments
