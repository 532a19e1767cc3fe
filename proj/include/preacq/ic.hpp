#pragma once

#include "preacq/types.hpp"

#include <random>

namespace preacq {

/// Truncated random Fourier series generator for initial conditions.
///
/// The latent vector lambda holds (amplitude, phase) per mode per axis,
/// flattened axis-major: lambda[2*(axis*n_modes + m) + {0, 1}] for mode
/// m+1 = 1..n_modes. Wavenumbers are scaled by 2*pi/length so every mode is
/// periodic on the grid.
struct IcGeneratorSpec {
    int n_modes = 4;
    double amp_lo = -1.0;
    double amp_hi = 1.0;
    /// Scale applied to the Navier-Stokes density, velocity and pressure
    /// perturbations around the (rho, p) = (1, 1) background.
    double ns_perturbation = 0.1;

    int lambda_dim(int dim) const { return 2 * n_modes * dim; }
};

/// Materialize a(lambda, X) on the grid. Burgers: one channel,
/// u0(x) = sum_k a_k sin(k x + phi_k). Navier-Stokes: four channels
/// (rho, v_x, v_y, p) built from the same sinusoid family with per-channel
/// phase offsets; rho and p perturbation amplitudes are rescaled so both stay
/// above 0.1 pointwise.
Field generate_ic(const IcGeneratorSpec& spec, const IcParameters& ic, const Grid& grid,
                  PdeFamily family);

/// Draw lambda from the generator prior: amplitudes uniform in
/// [amp_lo, amp_hi], phases uniform in [0, 2*pi).
IcParameters sample_ic_params(const IcGeneratorSpec& spec, int dim, std::mt19937_64& eng);

} // namespace preacq
