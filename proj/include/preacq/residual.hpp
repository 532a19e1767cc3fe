#pragma once

#include "preacq/types.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace preacq {

/// Per-point PDE residual of a trajectory, evaluated on interior frames
/// t = 1 .. n_frames-2 (central temporal stencil). Channels are the governed
/// equations: Burgers has one, Navier-Stokes three (continuity, x-momentum,
/// y-momentum; the energy equation is not scored).
struct ResidualField {
    Grid grid;
    std::vector<Field> frames; // frames[j] is trajectory frame j + 1

    int n_frames() const { return static_cast<int>(frames.size()); }
    int channels() const { return frames.empty() ? 0 : frames.front().channels(); }
};

/// Residual of u_t + u u_x - nu u_xx on a single-channel 1D trajectory.
/// The advection term is the pointwise product of u with its first-derivative
/// convolution.
ResidualField pre_burgers(const Trajectory& traj, double nu);

/// Continuity and momentum residuals of compressible Navier-Stokes on a
/// 4-channel (rho, v_x, v_y, p) 2D trajectory:
///   channel 0: d_t rho + D_x(rho v_x) + D_y(rho v_y)
///   channel 1, 2: rho (d_t v + (v . grad) v) + grad p - eta lap v
///                 - (zeta + eta/3) grad(div v)
ResidualField pre_ns2d(const Trajectory& traj, double eta, double zeta, double gamma);

/// Dispatch on the candidate's family.
ResidualField pre_for(const Trajectory& traj, const PdeParameters& pde);

/// Mean absolute residual over all interior frames, equation channels and
/// spatial points. Optional per-channel weights (default: all 1).
double score(const ResidualField& residual);
double score(const ResidualField& residual, std::span<const double> channel_weights);

/// Debug dump in the trajectory store format; stored frame count is the
/// interior frame count and channels are the scored equations.
void dump_residual(const std::string& path, const ResidualField& residual);

} // namespace preacq
