#include "preacq/types.hpp"

#include "preacq/errors.hpp"

#include <cmath>
#include <string>

namespace preacq {

Grid make_grid(int dim, int n_points, double length, double dt_frame, int n_frames) {
    if (dim != 1 && dim != 2) {
        throw ConfigError("grid dim must be 1 or 2, got " + std::to_string(dim));
    }
    if (n_points <= 0) {
        throw ConfigError("grid n_points must be positive, got " + std::to_string(n_points));
    }
    if (!(length > 0.0)) {
        throw ConfigError("grid length must be positive, got " + std::to_string(length));
    }
    if (!(dt_frame > 0.0)) {
        throw ConfigError("grid dt_frame must be positive, got " + std::to_string(dt_frame));
    }
    if (n_frames < 3) {
        throw ConfigError("grid n_frames must be at least 3, got " + std::to_string(n_frames));
    }

    Grid g;
    g.dim = dim;
    g.dt_frame = dt_frame;
    g.n_frames = n_frames;
    for (int a = 0; a < dim; ++a) {
        g.n_points[a] = n_points;
        g.length[a] = length;
        g.spacing[a] = length / n_points;
    }
    return g;
}

FieldStats field_stats(const Field& field) {
    const long cols = field.values.cols();
    const int channels = field.channels();
    for (int c = 0; c < channels; ++c) {
        const double* v = field.channel_data(c);
        for (long i = 0; i < cols; ++i) {
            if (!std::isfinite(v[i])) {
                throw ConfigError("field value not finite at channel " + std::to_string(c) +
                                  ", point " + std::to_string(i));
            }
        }
    }

    FieldStats s;
    s.min = field.values.minCoeff();
    s.max = field.values.maxCoeff();
    s.mean = field.values.mean();
    s.l2_norm = std::sqrt(field.values.square().mean());
    return s;
}

void validate(const PdeParameters& p) {
    if (p.family == PdeFamily::Burgers1D) {
        if (p.coeffs.size() != 1) {
            throw ConfigError("burgers parameters need exactly one coefficient (nu)");
        }
        if (!(p.nu() > 0.0)) {
            throw ConfigError("burgers nu must be positive, got " + std::to_string(p.nu()));
        }
    } else {
        if (p.coeffs.size() != 2) {
            throw ConfigError("ns2d parameters need exactly two coefficients (eta, zeta)");
        }
        if (!(p.eta() > 0.0) || !(p.zeta() > 0.0)) {
            throw ConfigError("ns2d viscosities must be positive");
        }
        if (!(p.gamma > 1.0)) {
            throw ConfigError("ns2d adiabatic index must exceed 1");
        }
    }
}

} // namespace preacq
