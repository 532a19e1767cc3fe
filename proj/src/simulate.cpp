#include "preacq/solver.hpp"

#include "preacq/errors.hpp"
#include "preacq/residual.hpp"

namespace preacq {

LabeledSample simulate(const Candidate& candidate, const SolverConfig& config) {
    validate(candidate.pde);
    if (candidate.ic_field.channels() != family_channels(candidate.pde.family)) {
        throw ConfigError("candidate IC channel count does not match family");
    }

    LabeledSample sample;
    sample.candidate = candidate;
    if (candidate.pde.family == PdeFamily::Burgers1D) {
        sample.truth = solve_burgers(candidate.ic_field, candidate.pde.nu(), config);
    } else {
        sample.truth = solve_ns2d(candidate.ic_field, candidate.pde.eta(), candidate.pde.zeta(),
                                  candidate.pde.gamma, config);
    }
    sample.truth_score = score(pre_for(sample.truth, candidate.pde));
    return sample;
}

} // namespace preacq
