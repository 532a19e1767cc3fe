#include "preacq/solver.hpp"

#include "preacq/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace preacq {

namespace {

constexpr double kViscousSafety = 0.2;

// Work buffers for one grid. Conservative state U = (rho, mx, my, E) held as
// four arrays over flattened (iy * nx + ix) points.
struct NsWorkspace {
    int nx = 0, ny = 0;
    long n = 0;
    double dx = 0.0, dy = 0.0;

    Eigen::ArrayXd rho, mx, my, en;          // state
    Eigen::ArrayXd vx, vy, p, sound;         // primitives
    Eigen::ArrayXd txx, tyy, txy, qx, qy;    // stress and work terms
    Eigen::ArrayXd d_rho, d_mx, d_my, d_en;  // accumulated divergence

    explicit NsWorkspace(const Grid& g)
        : nx(g.nx()), ny(g.ny()), n(g.num_points()), dx(g.dx()), dy(g.dy()),
          rho(n), mx(n), my(n), en(n), vx(n), vy(n), p(n), sound(n),
          txx(n), tyy(n), txy(n), qx(n), qy(n), d_rho(n), d_mx(n), d_my(n), d_en(n) {}

    long idx(int ix, int iy) const { return static_cast<long>(iy) * nx + ix; }
    int xp(int ix) const { return ix == nx - 1 ? 0 : ix + 1; }
    int xm(int ix) const { return ix == 0 ? nx - 1 : ix - 1; }
    int yp(int iy) const { return iy == ny - 1 ? 0 : iy + 1; }
    int ym(int iy) const { return iy == 0 ? ny - 1 : iy - 1; }
};

// Primitives, sound speed and pointwise viscous stress from the current
// conservative state. Throws on positivity loss.
void decode_state(NsWorkspace& w, double eta, double zeta, double gamma, long step) {
    for (long i = 0; i < w.n; ++i) {
        if (!(w.rho[i] > 0.0)) {
            throw SolverError("ns2d density lost positivity at step " + std::to_string(step),
                              step);
        }
        w.vx[i] = w.mx[i] / w.rho[i];
        w.vy[i] = w.my[i] / w.rho[i];
        const double kinetic = 0.5 * w.rho[i] * (w.vx[i] * w.vx[i] + w.vy[i] * w.vy[i]);
        w.p[i] = (gamma - 1.0) * (w.en[i] - kinetic);
        if (!(w.p[i] > 0.0)) {
            throw SolverError("ns2d pressure lost positivity at step " + std::to_string(step),
                              step);
        }
        if (!std::isfinite(w.p[i]) || !std::isfinite(w.vx[i]) || !std::isfinite(w.vy[i])) {
            throw SolverError("ns2d blow-up at step " + std::to_string(step), step);
        }
        w.sound[i] = std::sqrt(gamma * w.p[i] / w.rho[i]);
    }

    // Cell-centered stress tensor and viscous work, central differences.
    const double inv_2dx = 1.0 / (2.0 * w.dx);
    const double inv_2dy = 1.0 / (2.0 * w.dy);
    for (int iy = 0; iy < w.ny; ++iy) {
        for (int ix = 0; ix < w.nx; ++ix) {
            const long i = w.idx(ix, iy);
            const double dvx_dx = (w.vx[w.idx(w.xp(ix), iy)] - w.vx[w.idx(w.xm(ix), iy)]) * inv_2dx;
            const double dvx_dy = (w.vx[w.idx(ix, w.yp(iy))] - w.vx[w.idx(ix, w.ym(iy))]) * inv_2dy;
            const double dvy_dx = (w.vy[w.idx(w.xp(ix), iy)] - w.vy[w.idx(w.xm(ix), iy)]) * inv_2dx;
            const double dvy_dy = (w.vy[w.idx(ix, w.yp(iy))] - w.vy[w.idx(ix, w.ym(iy))]) * inv_2dy;
            const double div = dvx_dx + dvy_dy;
            w.txx[i] = eta * (2.0 * dvx_dx - (2.0 / 3.0) * div) + zeta * div;
            w.tyy[i] = eta * (2.0 * dvy_dy - (2.0 / 3.0) * div) + zeta * div;
            w.txy[i] = eta * (dvx_dy + dvy_dx);
            w.qx[i] = w.vx[i] * w.txx[i] + w.vy[i] * w.txy[i];
            w.qy[i] = w.vx[i] * w.txy[i] + w.vy[i] * w.tyy[i];
        }
    }
}

// Flux divergence of the current decoded state into d_*. Rusanov inviscid
// fluxes plus face-averaged viscous fluxes; both telescope over the periodic
// grid, so mass, momentum and energy are conserved to round-off.
void flux_divergence(NsWorkspace& w) {
    const double inv_dx = 1.0 / w.dx;
    const double inv_dy = 1.0 / w.dy;
    w.d_rho.setZero();
    w.d_mx.setZero();
    w.d_my.setZero();
    w.d_en.setZero();

    // x faces: flux between (ix, iy) and (ix+1, iy)
    for (int iy = 0; iy < w.ny; ++iy) {
        for (int ix = 0; ix < w.nx; ++ix) {
            const long L = w.idx(ix, iy);
            const long R = w.idx(w.xp(ix), iy);
            const double a = std::max(std::abs(w.vx[L]) + w.sound[L],
                                      std::abs(w.vx[R]) + w.sound[R]);
            const double f_rho = 0.5 * (w.mx[L] + w.mx[R]) - 0.5 * a * (w.rho[R] - w.rho[L]);
            double f_mx = 0.5 * (w.mx[L] * w.vx[L] + w.p[L] + w.mx[R] * w.vx[R] + w.p[R]) -
                          0.5 * a * (w.mx[R] - w.mx[L]);
            double f_my = 0.5 * (w.my[L] * w.vx[L] + w.my[R] * w.vx[R]) -
                          0.5 * a * (w.my[R] - w.my[L]);
            double f_en = 0.5 * ((w.en[L] + w.p[L]) * w.vx[L] + (w.en[R] + w.p[R]) * w.vx[R]) -
                          0.5 * a * (w.en[R] - w.en[L]);
            // central viscous contribution, averaged to the face
            f_mx -= 0.5 * (w.txx[L] + w.txx[R]);
            f_my -= 0.5 * (w.txy[L] + w.txy[R]);
            f_en -= 0.5 * (w.qx[L] + w.qx[R]);

            w.d_rho[L] += f_rho * inv_dx;
            w.d_rho[R] -= f_rho * inv_dx;
            w.d_mx[L] += f_mx * inv_dx;
            w.d_mx[R] -= f_mx * inv_dx;
            w.d_my[L] += f_my * inv_dx;
            w.d_my[R] -= f_my * inv_dx;
            w.d_en[L] += f_en * inv_dx;
            w.d_en[R] -= f_en * inv_dx;
        }
    }

    // y faces: flux between (ix, iy) and (ix, iy+1)
    for (int iy = 0; iy < w.ny; ++iy) {
        for (int ix = 0; ix < w.nx; ++ix) {
            const long L = w.idx(ix, iy);
            const long R = w.idx(ix, w.yp(iy));
            const double a = std::max(std::abs(w.vy[L]) + w.sound[L],
                                      std::abs(w.vy[R]) + w.sound[R]);
            const double f_rho = 0.5 * (w.my[L] + w.my[R]) - 0.5 * a * (w.rho[R] - w.rho[L]);
            double f_mx = 0.5 * (w.mx[L] * w.vy[L] + w.mx[R] * w.vy[R]) -
                          0.5 * a * (w.mx[R] - w.mx[L]);
            double f_my = 0.5 * (w.my[L] * w.vy[L] + w.p[L] + w.my[R] * w.vy[R] + w.p[R]) -
                          0.5 * a * (w.my[R] - w.my[L]);
            double f_en = 0.5 * ((w.en[L] + w.p[L]) * w.vy[L] + (w.en[R] + w.p[R]) * w.vy[R]) -
                          0.5 * a * (w.en[R] - w.en[L]);
            f_mx -= 0.5 * (w.txy[L] + w.txy[R]);
            f_my -= 0.5 * (w.tyy[L] + w.tyy[R]);
            f_en -= 0.5 * (w.qy[L] + w.qy[R]);

            w.d_rho[L] += f_rho * inv_dy;
            w.d_rho[R] -= f_rho * inv_dy;
            w.d_mx[L] += f_mx * inv_dy;
            w.d_mx[R] -= f_mx * inv_dy;
            w.d_my[L] += f_my * inv_dy;
            w.d_my[R] -= f_my * inv_dy;
            w.d_en[L] += f_en * inv_dy;
            w.d_en[R] -= f_en * inv_dy;
        }
    }
}

double stable_dt(const NsWorkspace& w, double eta, double zeta, double cfl) {
    double wave = 0.0;
    double rho_min = w.rho[0];
    for (long i = 0; i < w.n; ++i) {
        wave = std::max(wave, std::max(std::abs(w.vx[i]), std::abs(w.vy[i])) + w.sound[i]);
        rho_min = std::min(rho_min, w.rho[i]);
    }
    const double h = std::min(w.dx, w.dy);
    double dt = cfl * h / wave;
    const double nu_eff = (eta + zeta + eta / 3.0) / rho_min;
    if (nu_eff > 0.0) {
        dt = std::min(dt, kViscousSafety * h * h / nu_eff);
    }
    return dt;
}

} // namespace

Trajectory solve_ns2d(const Field& ic, double eta, double zeta, double gamma,
                      const SolverConfig& config) {
    if (ic.grid.dim != 2 || ic.channels() != 4) {
        throw ConfigError("solve_ns2d expects a 4-channel field on a 2D grid");
    }
    if (!(eta > 0.0) || !(zeta > 0.0) || !(gamma > 1.0)) {
        throw ConfigError("solve_ns2d requires eta > 0, zeta > 0, gamma > 1");
    }
    if (!(config.cfl > 0.0 && config.cfl < 1.0)) {
        throw ConfigError("solver CFL must lie in (0, 1)");
    }
    if (!ic.all_finite()) {
        throw ConfigError("solve_ns2d initial condition has non-finite values");
    }
    if ((ic.channel(0) <= 0.0).any() || (ic.channel(3) <= 0.0).any()) {
        throw ConfigError("solve_ns2d initial condition needs rho > 0 and p > 0");
    }

    const Grid& g = ic.grid;
    NsWorkspace w(g);

    // primitives -> conservative
    w.rho = ic.channel(0);
    w.vx = ic.channel(1);
    w.vy = ic.channel(2);
    w.p = ic.channel(3);
    w.mx = w.rho * w.vx;
    w.my = w.rho * w.vy;
    w.en = w.p / (gamma - 1.0) + 0.5 * w.rho * (w.vx.square() + w.vy.square());

    Trajectory traj;
    traj.grid = g;
    traj.frames.reserve(static_cast<std::size_t>(g.n_frames));
    traj.frames.push_back(ic);

    Eigen::ArrayXd rho0(w.n), mx0(w.n), my0(w.n), en0(w.n);

    long steps = 0;
    for (int frame = 1; frame < g.n_frames; ++frame) {
        double remaining = g.dt_frame;
        while (remaining > 0.0) {
            decode_state(w, eta, zeta, gamma, steps);
            const double dt = std::min({stable_dt(w, eta, zeta, config.cfl), g.dt_frame,
                                        remaining});

            rho0 = w.rho;
            mx0 = w.mx;
            my0 = w.my;
            en0 = w.en;

            // SSP-RK2 (Heun)
            flux_divergence(w);
            w.rho -= dt * w.d_rho;
            w.mx -= dt * w.d_mx;
            w.my -= dt * w.d_my;
            w.en -= dt * w.d_en;

            decode_state(w, eta, zeta, gamma, steps);
            flux_divergence(w);
            w.rho = 0.5 * (rho0 + w.rho - dt * w.d_rho);
            w.mx = 0.5 * (mx0 + w.mx - dt * w.d_mx);
            w.my = 0.5 * (my0 + w.my - dt * w.d_my);
            w.en = 0.5 * (en0 + w.en - dt * w.d_en);

            remaining -= dt;
            if (++steps > config.max_steps) {
                throw SolverError("ns2d internal step cap exceeded at step " +
                                      std::to_string(steps),
                                  steps);
            }
        }

        decode_state(w, eta, zeta, gamma, steps);
        Field f = Field::zeros(g, 4);
        f.channel(0) = w.rho;
        f.channel(1) = w.vx;
        f.channel(2) = w.vy;
        f.channel(3) = w.p;
        if (!f.all_finite()) {
            throw SolverError("ns2d blow-up at frame " + std::to_string(frame), frame);
        }
        traj.frames.push_back(std::move(f));
    }
    return traj;
}

} // namespace preacq
