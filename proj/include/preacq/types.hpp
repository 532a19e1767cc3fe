#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace preacq {

/// Dense row-major array used for field storage: rows are channels, columns
/// are flattened spatial points, so each channel is contiguous.
using RowArrayXXd = Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Uniform periodic space-time grid. No duplicated endpoint: point i of axis a
/// sits at i * spacing[a], and spacing * n_points == length.
///
/// For dim == 2 the flattened point index is iy * nx + ix (x fastest).
struct Grid {
    int dim = 1;
    std::array<int, 2> n_points{0, 0};
    std::array<double, 2> length{0.0, 0.0};
    std::array<double, 2> spacing{0.0, 0.0};
    double dt_frame = 0.0;
    int n_frames = 0;

    /// Total number of spatial points (N_s).
    long num_points() const {
        long n = n_points[0];
        if (dim == 2) n *= n_points[1];
        return n;
    }

    double t_final() const { return (n_frames - 1) * dt_frame; }

    int nx() const { return n_points[0]; }
    int ny() const { return dim == 2 ? n_points[1] : 1; }
    double dx() const { return spacing[0]; }
    double dy() const { return spacing[1]; }

    bool operator==(const Grid&) const = default;
};

/// Validated grid constructor. All axes share n_points and length.
Grid make_grid(int dim, int n_points, double length, double dt_frame, int n_frames);

/// Multi-channel field sampled on a grid at a single time.
struct Field {
    Grid grid;
    RowArrayXXd values; // channels x num_points, row-major

    static Field zeros(const Grid& grid, int channels) {
        Field f;
        f.grid = grid;
        f.values = RowArrayXXd::Zero(channels, grid.num_points());
        return f;
    }

    int channels() const { return static_cast<int>(values.rows()); }

    double* channel_data(int c) { return values.data() + static_cast<long>(c) * values.cols(); }
    const double* channel_data(int c) const {
        return values.data() + static_cast<long>(c) * values.cols();
    }

    Eigen::Map<Eigen::ArrayXd> channel(int c) {
        return Eigen::Map<Eigen::ArrayXd>(channel_data(c), values.cols());
    }
    Eigen::Map<const Eigen::ArrayXd> channel(int c) const {
        return Eigen::Map<const Eigen::ArrayXd>(channel_data(c), values.cols());
    }

    /// 2D view of one channel, shape (ny, nx): row = iy, column = ix.
    Eigen::Map<const RowArrayXXd> plane(int c) const {
        return Eigen::Map<const RowArrayXXd>(channel_data(c), grid.ny(), grid.nx());
    }
    Eigen::Map<RowArrayXXd> plane(int c) {
        return Eigen::Map<RowArrayXXd>(channel_data(c), grid.ny(), grid.nx());
    }

    bool all_finite() const { return values.isFinite().all(); }
};

struct FieldStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double l2_norm = 0.0; // root mean square over all channels and points
};

/// Summary statistics; rejects non-finite values naming the first offender.
FieldStats field_stats(const Field& field);

/// Full space-time solution: n_frames fields on one grid. Frame 0 is the
/// generating initial condition.
struct Trajectory {
    Grid grid;
    std::vector<Field> frames;

    int n_frames() const { return static_cast<int>(frames.size()); }
    int channels() const { return frames.empty() ? 0 : frames.front().channels(); }
};

enum class PdeFamily { Burgers1D, CompressibleNS2D };

inline const char* family_name(PdeFamily f) {
    return f == PdeFamily::Burgers1D ? "burgers" : "ns2d";
}

inline int family_dim(PdeFamily f) { return f == PdeFamily::Burgers1D ? 1 : 2; }
inline int family_channels(PdeFamily f) { return f == PdeFamily::Burgers1D ? 1 : 4; }
inline int family_coeff_count(PdeFamily f) { return f == PdeFamily::Burgers1D ? 1 : 2; }

/// PDE coefficient vector (delta). Burgers: (nu). Navier-Stokes: (eta, zeta)
/// with the adiabatic index fixed at 5/3 and excluded from delta.
struct PdeParameters {
    PdeFamily family = PdeFamily::Burgers1D;
    Eigen::VectorXd coeffs;
    double gamma = 5.0 / 3.0;

    double nu() const { return coeffs[0]; }
    double eta() const { return coeffs[0]; }
    double zeta() const { return coeffs[1]; }

    static PdeParameters burgers(double nu) {
        PdeParameters p;
        p.family = PdeFamily::Burgers1D;
        p.coeffs = Eigen::VectorXd::Constant(1, nu);
        return p;
    }

    static PdeParameters ns2d(double eta, double zeta, double gamma = 5.0 / 3.0) {
        PdeParameters p;
        p.family = PdeFamily::CompressibleNS2D;
        p.coeffs.resize(2);
        p.coeffs << eta, zeta;
        p.gamma = gamma;
        return p;
    }
};

/// Throws ConfigError if coefficients violate family validity.
void validate(const PdeParameters& p);

/// Latent vector generating the initial condition.
struct IcParameters {
    Eigen::VectorXd lambda;
};

/// Pool entry: parameters plus the materialized initial condition.
struct Candidate {
    long id = 0;
    PdeParameters pde;
    IcParameters ic;
    Field ic_field;
};

/// Candidate with its ground-truth trajectory and the cached residual score
/// of that trajectory (used as the acquisition normalizer).
struct LabeledSample {
    Candidate candidate;
    Trajectory truth;
    double truth_score = 0.0;
};

} // namespace preacq
