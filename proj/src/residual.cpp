#include "preacq/residual.hpp"

#include "preacq/errors.hpp"
#include "preacq/stencil.hpp"
#include "preacq/store.hpp"

#include <cmath>
#include <string>

namespace preacq {

namespace {

void check_finite(const ResidualField& r) {
    for (const Field& f : r.frames) {
        if (!f.all_finite()) {
            throw ConfigError("residual field contains non-finite values");
        }
    }
}

} // namespace

ResidualField pre_burgers(const Trajectory& traj, double nu) {
    if (traj.grid.dim != 1 || traj.channels() != 1) {
        throw ConfigError("pre_burgers expects a single-channel trajectory on a 1D grid");
    }
    const Grid& g = traj.grid;
    const long n = g.num_points();
    const StencilSpec st = central_stencils(g);

    ResidualField out;
    out.grid = g;
    out.frames.reserve(static_cast<std::size_t>(g.n_frames - 2));

    Eigen::ArrayXd dudx(n), d2udx2(n);
    for (int t = 1; t + 1 < g.n_frames; ++t) {
        const double* prev = traj.frames[static_cast<std::size_t>(t - 1)].channel_data(0);
        const double* cur = traj.frames[static_cast<std::size_t>(t)].channel_data(0);
        const double* next = traj.frames[static_cast<std::size_t>(t + 1)].channel_data(0);

        convolve_periodic_1d(cur, n, st.d1_x, dudx.data());
        convolve_periodic_1d(cur, n, st.d2_x, d2udx2.data());

        Field r = Field::zeros(g, 1);
        double* rv = r.channel_data(0);
        for (long i = 0; i < n; ++i) {
            const double dudt = st.d_time.taps[0] * prev[i] + st.d_time.taps[1] * cur[i] +
                                st.d_time.taps[2] * next[i];
            rv[i] = dudt + cur[i] * dudx[i] - nu * d2udx2[i];
        }
        out.frames.push_back(std::move(r));
    }
    return out;
}

ResidualField pre_ns2d(const Trajectory& traj, double eta, double zeta, double gamma) {
    (void)gamma; // enters the energy equation only, which is not scored
    if (traj.grid.dim != 2 || traj.channels() != 4) {
        throw ConfigError("pre_ns2d expects a 4-channel trajectory on a 2D grid");
    }
    const Grid& g = traj.grid;
    const int nx = g.nx();
    const int ny = g.ny();
    const long n = g.num_points();
    const StencilSpec st = central_stencils(g);
    const double bulk = zeta + eta / 3.0;

    ResidualField out;
    out.grid = g;
    out.frames.reserve(static_cast<std::size_t>(g.n_frames - 2));

    Eigen::ArrayXd momx(n), momy(n), div(n);
    Eigen::ArrayXd dxx(n), dyy(n), dx_div(n), dy_div(n);
    Eigen::ArrayXd dmomx_dx(n), dmomy_dy(n), dpx(n), dpy(n);
    Eigen::ArrayXd dvx_dx(n), dvx_dy(n), dvy_dx(n), dvy_dy(n);

    for (int t = 1; t + 1 < g.n_frames; ++t) {
        const Field& fm = traj.frames[static_cast<std::size_t>(t - 1)];
        const Field& f0 = traj.frames[static_cast<std::size_t>(t)];
        const Field& fp = traj.frames[static_cast<std::size_t>(t + 1)];

        const auto rho = f0.channel(0);
        const auto vx = f0.channel(1);
        const auto vy = f0.channel(2);
        const auto p = f0.channel(3);

        auto d_time = [&](int c, long i) {
            return st.d_time.taps[0] * fm.channel_data(c)[i] +
                   st.d_time.taps[1] * f0.channel_data(c)[i] +
                   st.d_time.taps[2] * fp.channel_data(c)[i];
        };

        momx = rho * vx;
        momy = rho * vy;
        convolve_periodic_x(momx.data(), nx, ny, st.d1_x, dmomx_dx.data());
        convolve_periodic_y(momy.data(), nx, ny, st.d1_y, dmomy_dy.data());

        convolve_periodic_x(vx.data(), nx, ny, st.d1_x, dvx_dx.data());
        convolve_periodic_y(vx.data(), nx, ny, st.d1_y, dvx_dy.data());
        convolve_periodic_x(vy.data(), nx, ny, st.d1_x, dvy_dx.data());
        convolve_periodic_y(vy.data(), nx, ny, st.d1_y, dvy_dy.data());
        div = dvx_dx + dvy_dy;
        convolve_periodic_x(div.data(), nx, ny, st.d1_x, dx_div.data());
        convolve_periodic_y(div.data(), nx, ny, st.d1_y, dy_div.data());

        convolve_periodic_x(p.data(), nx, ny, st.d1_x, dpx.data());
        convolve_periodic_y(p.data(), nx, ny, st.d1_y, dpy.data());

        Field r = Field::zeros(g, 3);
        double* r_cont = r.channel_data(0);
        double* r_mx = r.channel_data(1);
        double* r_my = r.channel_data(2);

        for (long i = 0; i < n; ++i) {
            r_cont[i] = d_time(0, i) + dmomx_dx[i] + dmomy_dy[i];
        }

        // x momentum
        convolve_periodic_x(vx.data(), nx, ny, st.d2_x, dxx.data());
        convolve_periodic_y(vx.data(), nx, ny, st.d2_y, dyy.data());
        for (long i = 0; i < n; ++i) {
            const double advect = vx[i] * dvx_dx[i] + vy[i] * dvx_dy[i];
            r_mx[i] = rho[i] * (d_time(1, i) + advect) + dpx[i] -
                      eta * (dxx[i] + dyy[i]) - bulk * dx_div[i];
        }

        // y momentum
        convolve_periodic_x(vy.data(), nx, ny, st.d2_x, dxx.data());
        convolve_periodic_y(vy.data(), nx, ny, st.d2_y, dyy.data());
        for (long i = 0; i < n; ++i) {
            const double advect = vx[i] * dvy_dx[i] + vy[i] * dvy_dy[i];
            r_my[i] = rho[i] * (d_time(2, i) + advect) + dpy[i] -
                      eta * (dxx[i] + dyy[i]) - bulk * dy_div[i];
        }

        out.frames.push_back(std::move(r));
    }
    return out;
}

ResidualField pre_for(const Trajectory& traj, const PdeParameters& pde) {
    if (pde.family == PdeFamily::Burgers1D) {
        return pre_burgers(traj, pde.nu());
    }
    return pre_ns2d(traj, pde.eta(), pde.zeta(), pde.gamma);
}

double score(const ResidualField& residual) {
    check_finite(residual);
    double acc = 0.0;
    long count = 0;
    for (const Field& f : residual.frames) {
        const int channels = f.channels();
        const long n = f.values.cols();
        for (int c = 0; c < channels; ++c) {
            const double* v = f.channel_data(c);
            for (long i = 0; i < n; ++i) {
                acc += std::abs(v[i]);
            }
            count += n;
        }
    }
    return count > 0 ? acc / static_cast<double>(count) : 0.0;
}

double score(const ResidualField& residual, std::span<const double> channel_weights) {
    if (channel_weights.empty()) return score(residual);
    check_finite(residual);
    const int channels = residual.channels();
    if (static_cast<int>(channel_weights.size()) != channels) {
        throw ConfigError("channel weight count does not match residual channels");
    }
    double weight_sum = 0.0;
    for (double w : channel_weights) {
        if (!(w >= 0.0)) throw ConfigError("channel weights must be nonnegative");
        weight_sum += w;
    }
    if (weight_sum <= 0.0) throw ConfigError("channel weights sum to zero");

    double acc = 0.0;
    long per_channel_count = 0;
    for (const Field& f : residual.frames) {
        const long n = f.values.cols();
        for (int c = 0; c < channels; ++c) {
            const double* v = f.channel_data(c);
            const double w = channel_weights[static_cast<std::size_t>(c)];
            for (long i = 0; i < n; ++i) {
                acc += w * std::abs(v[i]);
            }
        }
        per_channel_count += n;
    }
    return per_channel_count > 0 ? acc / (weight_sum * static_cast<double>(per_channel_count))
                                 : 0.0;
}

void dump_residual(const std::string& path, const ResidualField& residual) {
    if (residual.frames.empty()) {
        throw ConfigError("cannot dump an empty residual field");
    }
    Trajectory as_traj;
    as_traj.grid = residual.grid;
    as_traj.grid.n_frames = residual.n_frames();
    as_traj.frames = residual.frames;
    write_trajectory(path, as_traj);
}

} // namespace preacq
