#include "preacq/spectral_ridge.hpp"

#include "preacq/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace preacq {

namespace {

using Complex = std::complex<double>;

int clamp_k_max(int k_max, const Grid& grid) {
    int n_min = grid.n_points[0];
    if (grid.dim == 2) n_min = std::min(n_min, grid.n_points[1]);
    return std::min(k_max, (n_min - 1) / 2);
}

Eigen::MatrixXcd axis_basis(int n_points, double length, int k_max) {
    const int m = 2 * k_max + 1;
    Eigen::MatrixXcd basis(n_points, m);
    const double h = length / n_points;
    const double k_base = 2.0 * std::numbers::pi / length;
    for (int j = 0; j < m; ++j) {
        const int k = j - k_max;
        for (int i = 0; i < n_points; ++i) {
            const double arg = k_base * k * (i * h);
            basis(i, j) = Complex(std::cos(arg), std::sin(arg));
        }
    }
    return basis;
}

int feature_count(int degree, int n_coeffs) {
    int f = 1;
    if (degree >= 1) f += n_coeffs;
    if (degree >= 2) f += n_coeffs * (n_coeffs + 1) / 2;
    return f;
}

} // namespace

SpectralRidgeSurrogate::SpectralRidgeSurrogate(SpectralRidgeConfig config)
    : config_(config) {
    if (config_.k_max < 1) throw ConfigError("spectral ridge k_max must be >= 1");
    if (config_.feature_degree < 0 || config_.feature_degree > 2) {
        throw ConfigError("spectral ridge feature_degree must be 0, 1 or 2");
    }
    if (config_.ridge_alpha < 0.0) throw ConfigError("spectral ridge alpha must be >= 0");
}

int SpectralRidgeSurrogate::n_features() const {
    return feature_count(config_.feature_degree, family_coeff_count(family_));
}

Eigen::VectorXd SpectralRidgeSurrogate::features(const PdeParameters& pde) const {
    const Eigen::VectorXd& d = pde.coeffs;
    Eigen::VectorXd phi(feature_count(config_.feature_degree, static_cast<int>(d.size())));
    int at = 0;
    phi[at++] = 1.0;
    if (config_.feature_degree >= 1) {
        for (long i = 0; i < d.size(); ++i) phi[at++] = d[i];
    }
    if (config_.feature_degree >= 2) {
        for (long i = 0; i < d.size(); ++i) {
            for (long j = i; j < d.size(); ++j) phi[at++] = d[i] * d[j];
        }
    }
    return phi;
}

void SpectralRidgeSurrogate::build_basis(const Grid& grid) {
    grid_ = grid;
    const int k_eff = clamp_k_max(config_.k_max, grid);
    basis_x_ = axis_basis(grid.nx(), grid.length[0], k_eff);
    modes_.clear();
    if (grid.dim == 1) {
        for (int k = -k_eff; k <= k_eff; ++k) modes_.push_back({k, 0});
    } else {
        basis_y_ = axis_basis(grid.ny(), grid.length[1], k_eff);
        for (int ky = -k_eff; ky <= k_eff; ++ky) {
            for (int kx = -k_eff; kx <= k_eff; ++kx) modes_.push_back({kx, ky});
        }
    }
}

Eigen::VectorXcd SpectralRidgeSurrogate::transform(const Field& field, int channel) const {
    const long n = grid_.num_points();
    if (grid_.dim == 1) {
        Eigen::VectorXcd u = field.channel(channel).matrix().cast<Complex>();
        return basis_x_.adjoint() * u / static_cast<double>(n);
    }
    const Eigen::MatrixXcd plane =
        field.plane(channel).matrix().cast<Complex>(); // ny x nx
    Eigen::MatrixXcd coef = basis_y_.adjoint() * plane * basis_x_.conjugate() /
                            static_cast<double>(n); // my x mx
    // flatten (my, mx) row-major to match modes_ ordering
    Eigen::VectorXcd flat(coef.size());
    long at = 0;
    for (long my = 0; my < coef.rows(); ++my) {
        for (long mx = 0; mx < coef.cols(); ++mx) flat[at++] = coef(my, mx);
    }
    return flat;
}

void SpectralRidgeSurrogate::fit(const std::vector<LabeledSample>& training) {
    if (training.empty()) {
        throw ConfigError("spectral ridge fit needs at least one sample");
    }
    const Grid& grid = training.front().truth.grid;
    const PdeFamily fam = training.front().candidate.pde.family;
    const int channels = training.front().truth.channels();
    for (const LabeledSample& s : training) {
        if (!(s.truth.grid == grid) || s.truth.channels() != channels ||
            s.candidate.pde.family != fam) {
            throw ConfigError("spectral ridge fit requires samples sharing grid and family");
        }
    }

    family_ = fam;
    channels_ = channels;
    build_basis(grid);

    const int n_modes = static_cast<int>(modes_.size());
    const int f = n_features();

    // Per (channel, mode) normal equations. The design matrix rows are
    // z * phi(delta) with complex z, so A^H A = sum |z|^2 phi phi^T is real
    // and the right-hand side splits into independent real solves.
    std::vector<Eigen::MatrixXd> gram(static_cast<std::size_t>(channels * n_modes),
                                      Eigen::MatrixXd::Zero(f, f));
    std::vector<Eigen::VectorXcd> rhs(static_cast<std::size_t>(channels * n_modes),
                                      Eigen::VectorXcd::Zero(f));

    Eigen::MatrixXcd coefs; // modes x frames, one channel of one sample
    for (const LabeledSample& s : training) {
        const Eigen::VectorXd phi = features(s.candidate.pde);
        const Eigen::MatrixXd outer = phi * phi.transpose();
        const int n_frames = s.truth.n_frames();
        for (int c = 0; c < channels; ++c) {
            coefs.resize(n_modes, n_frames);
            for (int t = 0; t < n_frames; ++t) {
                coefs.col(t) = transform(s.truth.frames[static_cast<std::size_t>(t)], c);
            }
            for (int m = 0; m < n_modes; ++m) {
                double szz = 0.0;
                Complex szy(0.0, 0.0);
                for (int t = 0; t + 1 < n_frames; ++t) {
                    const Complex z = coefs(m, t);
                    const Complex y = coefs(m, t + 1);
                    szz += std::norm(z);
                    szy += std::conj(z) * y;
                }
                const std::size_t slot = static_cast<std::size_t>(c * n_modes + m);
                gram[slot] += szz * outer;
                rhs[slot] += szy * phi;
            }
        }
    }

    coeffs_.assign(static_cast<std::size_t>(channels * n_modes), Eigen::VectorXcd::Zero(f));
    const Eigen::MatrixXd reg =
        config_.ridge_alpha * Eigen::MatrixXd::Identity(f, f);
    for (std::size_t slot = 0; slot < gram.size(); ++slot) {
        Eigen::MatrixXd normal = gram[slot] + reg;
        if (config_.ridge_alpha <= 0.0) {
            Eigen::FullPivLU<Eigen::MatrixXd> lu(normal);
            if (lu.rank() < f) {
                throw ConfigError(
                    "singular normal matrix in spectral ridge fit; set ridge_alpha > 0");
            }
        }
        Eigen::LDLT<Eigen::MatrixXd> ldlt(normal);
        const Eigen::VectorXd c_re = ldlt.solve(rhs[slot].real());
        const Eigen::VectorXd c_im = ldlt.solve(rhs[slot].imag());
        coeffs_[slot].real() = c_re;
        coeffs_[slot].imag() = c_im;
    }
    fitted_ = true;
}

Eigen::VectorXcd SpectralRidgeSurrogate::mode_multipliers(const PdeParameters& pde,
                                                          int channel) const {
    if (!fitted_) throw ConfigError("spectral ridge model is not fitted");
    const Eigen::VectorXcd phi = features(pde).cast<Complex>();
    const int n_modes = static_cast<int>(modes_.size());
    Eigen::VectorXcd mult(n_modes);
    for (int m = 0; m < n_modes; ++m) {
        // plain (unconjugated) inner product M_k = sum_j c_kj phi_j
        mult[m] = coeffs_[static_cast<std::size_t>(channel * n_modes + m)]
                      .cwiseProduct(phi)
                      .sum();
    }
    return mult;
}

Field SpectralRidgeSurrogate::step(const Field& state, const PdeParameters& pde) const {
    if (!fitted_) throw ConfigError("spectral ridge model is not fitted");
    if (pde.family != family_) throw ConfigError("spectral ridge family mismatch");
    if (!(state.grid == grid_)) throw ConfigError("spectral ridge grid mismatch");
    if (state.channels() != channels_) throw ConfigError("spectral ridge channel mismatch");

    Field out = Field::zeros(grid_, channels_);
    const int n_modes = static_cast<int>(modes_.size());
    for (int c = 0; c < channels_; ++c) {
        const Eigen::VectorXcd mult = mode_multipliers(pde, c);
        Eigen::VectorXcd coef = transform(state, c);
        coef.array() *= mult.array();
        if (grid_.dim == 1) {
            out.channel(c) = (basis_x_ * coef).real().array();
        } else {
            const long mx = basis_x_.cols();
            const long my = basis_y_.cols();
            Eigen::MatrixXcd grid_coef(my, mx);
            long at = 0;
            for (long r = 0; r < my; ++r) {
                for (long col = 0; col < mx; ++col) grid_coef(r, col) = coef[at++];
            }
            Eigen::MatrixXd plane =
                (basis_y_ * grid_coef * basis_x_.transpose()).real();
            out.plane(c) = plane.array();
        }
    }
    return out;
}

SpectralRidgeSurrogate SpectralRidgeSurrogate::identity(PdeFamily family, const Grid& grid,
                                                        SpectralRidgeConfig config) {
    SpectralRidgeSurrogate model(config);
    model.family_ = family;
    model.channels_ = family_channels(family);
    model.build_basis(grid);
    const int f = model.n_features();
    Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(f);
    unit[0] = Complex(1.0, 0.0); // constant feature is first
    model.coeffs_.assign(model.modes_.size() * static_cast<std::size_t>(model.channels_), unit);
    model.fitted_ = true;
    return model;
}

SpectralRidgeSurrogate SpectralRidgeSurrogate::restore(SpectralRidgeConfig config,
                                                       PdeFamily family, const Grid& grid,
                                                       int channels,
                                                       std::vector<Eigen::VectorXcd> coeffs) {
    SpectralRidgeSurrogate model(config);
    model.family_ = family;
    model.channels_ = channels;
    model.build_basis(grid);
    const std::size_t expected = model.modes_.size() * static_cast<std::size_t>(channels);
    if (coeffs.size() != expected) {
        throw ConfigError("spectral ridge restore: coefficient count mismatch");
    }
    for (const auto& c : coeffs) {
        if (c.size() != model.n_features()) {
            throw ConfigError("spectral ridge restore: feature count mismatch");
        }
    }
    model.coeffs_ = std::move(coeffs);
    model.fitted_ = true;
    return model;
}

} // namespace preacq
