#pragma once

#include "preacq/types.hpp"

#include <string>

namespace preacq {

/// Internal time-step policy shared by both solvers. The internal step is
/// always capped at dt_frame; frames are stored every dt_frame.
struct SolverConfig {
    double cfl = 0.4;            // advective CFL number, in (0, 1)
    long max_steps = 2'000'000;  // cap on internal steps per trajectory
    std::string burgers_scheme = "flux-central-rk4";
    std::string ns_scheme = "rusanov-rk2";
};

/// u_t + u u_x = nu u_xx, periodic, second-order central differences in space
/// (conservative flux form for the advection term) and explicit RK4 in time.
/// Frame 0 of the result is the input field, bitwise.
Trajectory solve_burgers(const Field& ic, double nu, const SolverConfig& config = {});

/// 2D compressible Navier-Stokes on conservative variables with Rusanov
/// inviscid fluxes and central-difference viscous fluxes; ideal-gas closure
/// p = (gamma - 1)(E - rho |v|^2 / 2). Input and stored frames are primitive
/// variables (rho, v_x, v_y, p). Frame 0 is the input field, bitwise.
Trajectory solve_ns2d(const Field& ic, double eta, double zeta, double gamma,
                      const SolverConfig& config = {});

/// Run the family solver for a candidate and cache the residual score of the
/// ground-truth trajectory for acquisition normalization.
LabeledSample simulate(const Candidate& candidate, const SolverConfig& config = {});

} // namespace preacq
