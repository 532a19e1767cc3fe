#pragma once

#include <array>

namespace preacq {

/// Three-tap stencil with taps at offsets {-1, 0, +1}.
struct Stencil3 {
    std::array<double, 3> taps{0.0, 0.0, 0.0};

    double operator[](int offset) const { return taps[static_cast<std::size_t>(offset + 1)]; }
};

/// Central first derivative: (-1/(2h), 0, +1/(2h)).
inline Stencil3 first_derivative_stencil(double h) {
    return Stencil3{{-1.0 / (2.0 * h), 0.0, 1.0 / (2.0 * h)}};
}

/// Central second derivative: (1/h^2, -2/h^2, 1/h^2).
inline Stencil3 second_derivative_stencil(double h) {
    const double inv_h2 = 1.0 / (h * h);
    return Stencil3{{inv_h2, -2.0 * inv_h2, inv_h2}};
}

/// Central temporal derivative across stored frames: (-1/(2dt), 0, +1/(2dt)).
inline Stencil3 time_derivative_stencil(double dt) { return first_derivative_stencil(dt); }

/// Derivative stencils of one PDE family on one grid: temporal central
/// second-order on stored frames, spatial central first and second derivative
/// with periodic wrap. Time is evaluated on interior frames only.
struct StencilSpec {
    Stencil3 d_time;
    Stencil3 d1_x;
    Stencil3 d2_x;
    Stencil3 d1_y;
    Stencil3 d2_y;
};

template <typename GridT>
StencilSpec central_stencils(const GridT& grid) {
    StencilSpec s;
    s.d_time = time_derivative_stencil(grid.dt_frame);
    s.d1_x = first_derivative_stencil(grid.dx());
    s.d2_x = second_derivative_stencil(grid.dx());
    if (grid.dim == 2) {
        s.d1_y = first_derivative_stencil(grid.dy());
        s.d2_y = second_derivative_stencil(grid.dy());
    }
    return s;
}

// Stencils are applied as correlations with periodic wrap:
//   out[i] = taps[0]*u[i-1] + taps[1]*u[i] + taps[2]*u[i+1].
// The tap-order accumulation below is the reference evaluation order; tests
// pin direct index-arithmetic differencing to it bitwise.

inline void convolve_periodic_1d(const double* u, long n, const Stencil3& s, double* out) {
    for (long i = 0; i < n; ++i) {
        const long im = i == 0 ? n - 1 : i - 1;
        const long ip = i == n - 1 ? 0 : i + 1;
        out[i] = s.taps[0] * u[im] + s.taps[1] * u[i] + s.taps[2] * u[ip];
    }
}

/// Along x (fast axis) of an ny-by-nx plane stored row-major.
inline void convolve_periodic_x(const double* u, int nx, int ny, const Stencil3& s, double* out) {
    for (int iy = 0; iy < ny; ++iy) {
        convolve_periodic_1d(u + static_cast<long>(iy) * nx, nx, s, out + static_cast<long>(iy) * nx);
    }
}

/// Along y (slow axis) of an ny-by-nx plane stored row-major.
inline void convolve_periodic_y(const double* u, int nx, int ny, const Stencil3& s, double* out) {
    for (int iy = 0; iy < ny; ++iy) {
        const long ym = static_cast<long>(iy == 0 ? ny - 1 : iy - 1) * nx;
        const long yp = static_cast<long>(iy == ny - 1 ? 0 : iy + 1) * nx;
        const long y0 = static_cast<long>(iy) * nx;
        for (int ix = 0; ix < nx; ++ix) {
            out[y0 + ix] = s.taps[0] * u[ym + ix] + s.taps[1] * u[y0 + ix] + s.taps[2] * u[yp + ix];
        }
    }
}

} // namespace preacq
