#pragma once

#include "preacq/surrogate.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace preacq {

struct StencilNetConfig {
    int half_width = 2;   // points on each side of the stencil window
    int hidden = 32;      // hidden layer width
    int epochs = 30;
    double learning_rate = 0.05;
    double momentum = 0.9;
    int batch_size = 512;
    std::uint64_t seed = 0;
    double init_scale = 0.1; // 0 gives a zero-initialized network
};

/// Pointwise one-hidden-layer tanh network predicting the frame increment
/// at each grid point from the periodic stencil window around it plus the raw
/// PDE parameters: step(u, delta) = u + net([u window, delta]). Weights are
/// shared across grid points, so the map is translation equivariant by
/// construction. Trained by minibatch gradient descent with momentum on the
/// mean squared one-step error; gradients are hand-derived.
class StencilNetSurrogate final : public Surrogate {
public:
    explicit StencilNetSurrogate(StencilNetConfig config = {});

    void fit(const std::vector<LabeledSample>& training) override;
    Field step(const Field& state, const PdeParameters& pde) const override;
    PdeFamily family() const override { return PdeFamily::Burgers1D; }
    bool fitted() const override { return fitted_; }
    std::string kind() const override { return "stencil_net"; }

    const StencilNetConfig& config() const { return config_; }
    const Grid& grid() const { return grid_; }

    /// Mean training loss per epoch, recorded during fit.
    const std::vector<double>& epoch_losses() const { return epoch_losses_; }

    int input_dim() const { return 2 * config_.half_width + 1 + 1; } // window + nu
    int weight_count() const;

    /// Flat weight vector in [W1, b1, W2, b2] order.
    Eigen::VectorXd pack_weights() const;
    void set_weights(const Eigen::VectorXd& flat);

    /// Mean squared error over a batch (inputs column-wise) and, if grad is
    /// non-null, its gradient with respect to the flat weight vector.
    double loss_and_gradient(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
                             Eigen::VectorXd* grad) const;

    /// Assemble the (inputs, targets) design for all consecutive frame pairs
    /// of the given samples: one column per (sample, pair, point).
    static std::pair<Eigen::MatrixXd, Eigen::VectorXd>
    training_matrix(const std::vector<LabeledSample>& samples, int half_width);

    /// Initialize weights for a grid without training (test hook and warm
    /// start support).
    void init_weights(const Grid& grid, std::uint64_t seed);

private:
    Eigen::VectorXd forward(const Eigen::MatrixXd& inputs) const;

    StencilNetConfig config_;
    Grid grid_;
    bool fitted_ = false;
    std::vector<double> epoch_losses_;

    Eigen::MatrixXd w1_; // hidden x input
    Eigen::VectorXd b1_; // hidden
    Eigen::RowVectorXd w2_; // 1 x hidden
    double b2_ = 0.0;
};

} // namespace preacq
