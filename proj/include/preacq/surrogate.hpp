#pragma once

#include "preacq/types.hpp"

#include <memory>
#include <string>
#include <vector>

namespace preacq {

/// One-step surrogate model contract: fit on labeled samples, then advance a
/// field by one stored-frame interval conditioned on the PDE parameters.
/// Rollout is the repeated step from frame 0; it is deterministic for a fixed
/// fitted model and always yields exactly grid.n_frames frames.
class Surrogate {
public:
    virtual ~Surrogate() = default;

    virtual void fit(const std::vector<LabeledSample>& training) = 0;

    /// Next-frame prediction. Requires a fitted model of matching family.
    virtual Field step(const Field& state, const PdeParameters& pde) const = 0;

    virtual PdeFamily family() const = 0;
    virtual bool fitted() const = 0;
    virtual std::string kind() const = 0;

    /// Autoregressive rollout; throws SolverError with the step index if an
    /// intermediate frame goes non-finite.
    virtual Trajectory rollout(const Candidate& candidate) const;

    /// Rollout for evaluation: values are clamped to [-cap, cap] instead of
    /// throwing, and *clamped reports whether clamping ever fired.
    virtual Trajectory rollout_clamped(const Candidate& candidate, double cap,
                                       bool* clamped = nullptr) const;
};

/// Serialize a fitted model (header + flat 64-bit coefficient dump).
void save_model(const std::string& path, const Surrogate& model);
std::unique_ptr<Surrogate> load_model(const std::string& path);

} // namespace preacq
