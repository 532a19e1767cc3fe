#include "preacq/solver.hpp"

#include "preacq/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace preacq {

namespace {

constexpr double kViscousSafety = 0.25; // dt <= 0.25 dx^2 / nu

// Conservative right-hand side: -d/dx(u^2/2) + nu u_xx, periodic.
void burgers_rhs(const Eigen::ArrayXd& u, double inv_2dx, double nu_inv_dx2,
                 Eigen::ArrayXd& flux, Eigen::ArrayXd& rhs) {
    const long n = u.size();
    flux = 0.5 * u.square();
    for (long i = 0; i < n; ++i) {
        const long im = i == 0 ? n - 1 : i - 1;
        const long ip = i == n - 1 ? 0 : i + 1;
        rhs[i] = -(flux[ip] - flux[im]) * inv_2dx +
                 nu_inv_dx2 * (u[ip] - 2.0 * u[i] + u[im]);
    }
}

} // namespace

Trajectory solve_burgers(const Field& ic, double nu, const SolverConfig& config) {
    if (ic.grid.dim != 1 || ic.channels() != 1) {
        throw ConfigError("solve_burgers expects a single-channel field on a 1D grid");
    }
    if (!(nu > 0.0)) {
        throw ConfigError("solve_burgers requires nu > 0");
    }
    if (!(config.cfl > 0.0 && config.cfl < 1.0)) {
        throw ConfigError("solver CFL must lie in (0, 1)");
    }
    if (!ic.all_finite()) {
        throw ConfigError("solve_burgers initial condition has non-finite values");
    }

    const Grid& g = ic.grid;
    const long n = g.num_points();
    const double dx = g.dx();
    const double inv_2dx = 1.0 / (2.0 * dx);
    const double nu_inv_dx2 = nu / (dx * dx);
    const double dt_visc = kViscousSafety * dx * dx / nu;

    Trajectory traj;
    traj.grid = g;
    traj.frames.reserve(static_cast<std::size_t>(g.n_frames));
    traj.frames.push_back(ic);

    Eigen::ArrayXd u = ic.channel(0);
    Eigen::ArrayXd flux(n), k1(n), k2(n), k3(n), k4(n), stage(n);

    long steps = 0;
    for (int frame = 1; frame < g.n_frames; ++frame) {
        double remaining = g.dt_frame;
        while (remaining > 0.0) {
            const double u_max = u.abs().maxCoeff();
            if (!std::isfinite(u_max)) {
                throw SolverError("burgers blow-up before frame " + std::to_string(frame), frame);
            }
            double dt = std::min(dt_visc, g.dt_frame);
            if (u_max > 0.0) {
                dt = std::min(dt, config.cfl * dx / u_max);
            }
            dt = std::min(dt, remaining);

            burgers_rhs(u, inv_2dx, nu_inv_dx2, flux, k1);
            stage = u + 0.5 * dt * k1;
            burgers_rhs(stage, inv_2dx, nu_inv_dx2, flux, k2);
            stage = u + 0.5 * dt * k2;
            burgers_rhs(stage, inv_2dx, nu_inv_dx2, flux, k3);
            stage = u + dt * k3;
            burgers_rhs(stage, inv_2dx, nu_inv_dx2, flux, k4);
            u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

            remaining -= dt;
            if (++steps > config.max_steps) {
                throw SolverError("burgers internal step cap exceeded at frame " +
                                      std::to_string(frame),
                                  frame);
            }
        }
        if (!u.isFinite().all()) {
            throw SolverError("burgers blow-up at frame " + std::to_string(frame), frame);
        }
        Field f = Field::zeros(g, 1);
        f.channel(0) = u;
        traj.frames.push_back(std::move(f));
    }
    return traj;
}

} // namespace preacq
