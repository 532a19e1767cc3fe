#include "preacq/ic.hpp"

#include "preacq/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace preacq {

namespace {

constexpr double kMinPositive = 0.1; // floor for rho and p after clipping

// Sum of the lambda-parameterized sinusoids along both axes, with an extra
// phase offset distinguishing channels that share one latent vector.
Eigen::ArrayXd sinusoid_sum(const IcGeneratorSpec& spec, const Eigen::VectorXd& lambda,
                            const Grid& grid, double phase_offset) {
    const long n = grid.num_points();
    Eigen::ArrayXd out = Eigen::ArrayXd::Zero(n);
    const int nx = grid.nx();
    for (int axis = 0; axis < grid.dim; ++axis) {
        const double k_base = 2.0 * std::numbers::pi / grid.length[static_cast<std::size_t>(axis)];
        const double h = grid.spacing[static_cast<std::size_t>(axis)];
        for (int m = 0; m < spec.n_modes; ++m) {
            const double amp = lambda[2 * (axis * spec.n_modes + m)];
            const double phase = lambda[2 * (axis * spec.n_modes + m) + 1] + phase_offset;
            if (amp == 0.0) continue;
            const double kappa = k_base * (m + 1);
            for (long i = 0; i < n; ++i) {
                const long coord = axis == 0 ? i % nx : i / nx;
                out[i] += amp * std::sin(kappa * (coord * h) + phase);
            }
        }
    }
    return out;
}

// Rescale s so that base + s*w stays above kMinPositive everywhere.
double clip_scale(double s, const Eigen::ArrayXd& w, double base) {
    const double w_min = w.minCoeff();
    if (base + s * w_min > kMinPositive) return s;
    if (w_min >= 0.0) return s;
    // leave a margin of 2x the floor
    return std::min(s, (base - 2.0 * kMinPositive) / (-w_min));
}

} // namespace

Field generate_ic(const IcGeneratorSpec& spec, const IcParameters& ic, const Grid& grid,
                  PdeFamily family) {
    const int expected = spec.lambda_dim(grid.dim);
    if (ic.lambda.size() != expected) {
        throw ConfigError("lambda dimension mismatch: expected " + std::to_string(expected) +
                          ", got " + std::to_string(ic.lambda.size()));
    }
    if (grid.dim != family_dim(family)) {
        throw ConfigError("grid dimension does not match PDE family");
    }

    if (family == PdeFamily::Burgers1D) {
        Field f = Field::zeros(grid, 1);
        f.channel(0) = sinusoid_sum(spec, ic.lambda, grid, 0.0);
        return f;
    }

    // Navier-Stokes: (rho, v_x, v_y, p) around the (1, 0, 0, 1) background.
    Field f = Field::zeros(grid, 4);
    const double half_pi = std::numbers::pi / 2.0;
    const Eigen::ArrayXd w_rho = sinusoid_sum(spec, ic.lambda, grid, 0.0);
    const Eigen::ArrayXd w_vx = sinusoid_sum(spec, ic.lambda, grid, half_pi);
    const Eigen::ArrayXd w_vy = sinusoid_sum(spec, ic.lambda, grid, 2.0 * half_pi);
    const Eigen::ArrayXd w_p = sinusoid_sum(spec, ic.lambda, grid, 3.0 * half_pi);

    const double s = spec.ns_perturbation;
    const double s_rho = clip_scale(s, w_rho, 1.0);
    const double s_p = clip_scale(s, w_p, 1.0);

    f.channel(0) = 1.0 + s_rho * w_rho;
    f.channel(1) = s * w_vx;
    f.channel(2) = s * w_vy;
    f.channel(3) = 1.0 + s_p * w_p;

    if ((f.channel(0) <= kMinPositive).any() || (f.channel(3) <= kMinPositive).any()) {
        throw ConfigError("initial condition violates positivity after clipping");
    }
    return f;
}

IcParameters sample_ic_params(const IcGeneratorSpec& spec, int dim, std::mt19937_64& eng) {
    std::uniform_real_distribution<double> amp(spec.amp_lo, spec.amp_hi);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    IcParameters ic;
    ic.lambda.resize(spec.lambda_dim(dim));
    for (int axis = 0; axis < dim; ++axis) {
        for (int m = 0; m < spec.n_modes; ++m) {
            ic.lambda[2 * (axis * spec.n_modes + m)] = amp(eng);
            ic.lambda[2 * (axis * spec.n_modes + m) + 1] = phase(eng);
        }
    }
    return ic;
}

} // namespace preacq
