#pragma once

#include "preacq/surrogate.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace preacq {

struct SpectralRidgeConfig {
    /// Retained modes per axis; wavenumbers above this are zeroed in
    /// prediction. Clamped to the largest resolvable mode of the grid.
    int k_max = 16;
    /// Polynomial feature degree of the parameter map phi(delta): 0 fits a
    /// constant multiplier, 2 adds linear and quadratic terms.
    int feature_degree = 2;
    double ridge_alpha = 1e-8;
};

/// Linear per-mode surrogate: each retained Fourier mode evolves as
/// u_k(t+1) = M_k(delta) u_k(t) with M_k(delta) = sum_j c_kj phi_j(delta),
/// fit by complex ridge least squares over all consecutive frame pairs.
class SpectralRidgeSurrogate final : public Surrogate {
public:
    explicit SpectralRidgeSurrogate(SpectralRidgeConfig config = {});

    void fit(const std::vector<LabeledSample>& training) override;
    Field step(const Field& state, const PdeParameters& pde) const override;
    PdeFamily family() const override { return family_; }
    bool fitted() const override { return fitted_; }
    std::string kind() const override { return "spectral_ridge"; }

    /// Model with M_k(delta) identically 1: step is the in-band identity.
    static SpectralRidgeSurrogate identity(PdeFamily family, const Grid& grid,
                                           SpectralRidgeConfig config = {});

    const SpectralRidgeConfig& config() const { return config_; }
    const Grid& grid() const { return grid_; }

    /// Retained mode wavenumbers (kx, ky), ky = 0 in 1D.
    const std::vector<std::array<int, 2>>& modes() const { return modes_; }

    /// Multiplier M_k(delta) for every retained mode of one channel.
    Eigen::VectorXcd mode_multipliers(const PdeParameters& pde, int channel) const;

    /// Flat fitted coefficients, one complex vector of length n_features per
    /// (channel, mode); used by the checkpoint format.
    const std::vector<Eigen::VectorXcd>& coefficients() const { return coeffs_; }

    // Checkpoint support: reconstruct a fitted model from its dump.
    static SpectralRidgeSurrogate restore(SpectralRidgeConfig config, PdeFamily family,
                                          const Grid& grid, int channels,
                                          std::vector<Eigen::VectorXcd> coeffs);

    int channels() const { return channels_; }
    int n_features() const;

private:
    void build_basis(const Grid& grid);
    Eigen::VectorXd features(const PdeParameters& pde) const;
    /// Coefficients of all retained modes for one channel of a field,
    /// flattened in modes() order.
    Eigen::VectorXcd transform(const Field& field, int channel) const;

    SpectralRidgeConfig config_;
    PdeFamily family_ = PdeFamily::Burgers1D;
    Grid grid_;
    int channels_ = 0;
    bool fitted_ = false;

    std::vector<std::array<int, 2>> modes_;
    Eigen::MatrixXcd basis_x_;  // nx x modes_x, entries exp(i k x)
    Eigen::MatrixXcd basis_y_;  // ny x modes_y (2D only)
    std::vector<Eigen::VectorXcd> coeffs_; // [channel * n_modes + mode] -> c_kj
};

} // namespace preacq
