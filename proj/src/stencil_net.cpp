#include "preacq/stencil_net.hpp"

#include "preacq/errors.hpp"
#include "preacq/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace preacq {

StencilNetSurrogate::StencilNetSurrogate(StencilNetConfig config) : config_(config) {
    if (config_.half_width < 1) throw ConfigError("stencil net half_width must be >= 1");
    if (config_.hidden < 1) throw ConfigError("stencil net hidden width must be >= 1");
    if (config_.epochs < 0) throw ConfigError("stencil net epochs must be >= 0");
    if (config_.batch_size < 1) throw ConfigError("stencil net batch_size must be >= 1");
}

int StencilNetSurrogate::weight_count() const {
    const int in = input_dim();
    return config_.hidden * in + config_.hidden + config_.hidden + 1;
}

Eigen::VectorXd StencilNetSurrogate::pack_weights() const {
    Eigen::VectorXd flat(weight_count());
    long at = 0;
    for (long r = 0; r < w1_.rows(); ++r) {
        for (long c = 0; c < w1_.cols(); ++c) flat[at++] = w1_(r, c);
    }
    for (long r = 0; r < b1_.size(); ++r) flat[at++] = b1_[r];
    for (long c = 0; c < w2_.size(); ++c) flat[at++] = w2_[c];
    flat[at++] = b2_;
    return flat;
}

void StencilNetSurrogate::set_weights(const Eigen::VectorXd& flat) {
    if (flat.size() != weight_count()) {
        throw ConfigError("stencil net weight vector has wrong length");
    }
    const int in = input_dim();
    w1_.resize(config_.hidden, in);
    b1_.resize(config_.hidden);
    w2_.resize(config_.hidden);
    long at = 0;
    for (long r = 0; r < w1_.rows(); ++r) {
        for (long c = 0; c < w1_.cols(); ++c) w1_(r, c) = flat[at++];
    }
    for (long r = 0; r < b1_.size(); ++r) b1_[r] = flat[at++];
    for (long c = 0; c < w2_.size(); ++c) w2_[c] = flat[at++];
    b2_ = flat[at++];
}

void StencilNetSurrogate::init_weights(const Grid& grid, std::uint64_t seed) {
    grid_ = grid;
    const int in = input_dim();
    w1_.resize(config_.hidden, in);
    b1_ = Eigen::VectorXd::Zero(config_.hidden);
    w2_.resize(config_.hidden);
    b2_ = 0.0;
    if (config_.init_scale == 0.0) {
        w1_.setZero();
        w2_.setZero();
    } else {
        std::mt19937_64 eng = make_engine(seed);
        std::normal_distribution<double> gauss(0.0, config_.init_scale / std::sqrt(in));
        for (long r = 0; r < w1_.rows(); ++r) {
            for (long c = 0; c < w1_.cols(); ++c) w1_(r, c) = gauss(eng);
        }
        std::normal_distribution<double> gauss_out(0.0,
                                                   config_.init_scale / std::sqrt(config_.hidden));
        for (long c = 0; c < w2_.size(); ++c) w2_[c] = gauss_out(eng);
    }
    fitted_ = true;
}

Eigen::VectorXd StencilNetSurrogate::forward(const Eigen::MatrixXd& inputs) const {
    const Eigen::MatrixXd hidden =
        ((w1_ * inputs).colwise() + b1_).array().tanh().matrix();
    return ((w2_ * hidden).array() + b2_).transpose();
}

double StencilNetSurrogate::loss_and_gradient(const Eigen::MatrixXd& inputs,
                                              const Eigen::VectorXd& targets,
                                              Eigen::VectorXd* grad) const {
    const long batch = inputs.cols();
    if (batch == 0) throw ConfigError("stencil net loss needs a nonempty batch");
    if (targets.size() != batch) throw ConfigError("stencil net target size mismatch");

    const Eigen::MatrixXd pre = (w1_ * inputs).colwise() + b1_; // hidden x batch
    const Eigen::MatrixXd hidden = pre.array().tanh().matrix();
    const Eigen::VectorXd out = ((w2_ * hidden).array() + b2_).transpose();
    const Eigen::VectorXd err = out - targets;
    const double loss = err.squaredNorm() / static_cast<double>(batch);

    if (grad != nullptr) {
        // dL/dout = 2 err / batch
        const Eigen::VectorXd dout = (2.0 / static_cast<double>(batch)) * err;
        const Eigen::RowVectorXd gw2 = dout.transpose() * hidden.transpose();
        const double gb2 = dout.sum();
        // backprop through tanh: dpre = (w2^T dout) .* (1 - hidden^2)
        const Eigen::MatrixXd dpre =
            (w2_.transpose() * dout.transpose()).array() * (1.0 - hidden.array().square());
        const Eigen::MatrixXd gw1 = dpre * inputs.transpose();
        const Eigen::VectorXd gb1 = dpre.rowwise().sum();

        grad->resize(weight_count());
        long at = 0;
        for (long r = 0; r < gw1.rows(); ++r) {
            for (long c = 0; c < gw1.cols(); ++c) (*grad)[at++] = gw1(r, c);
        }
        for (long r = 0; r < gb1.size(); ++r) (*grad)[at++] = gb1[r];
        for (long c = 0; c < gw2.size(); ++c) (*grad)[at++] = gw2[c];
        (*grad)[at++] = gb2;
    }
    return loss;
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd>
StencilNetSurrogate::training_matrix(const std::vector<LabeledSample>& samples, int half_width) {
    long columns = 0;
    for (const LabeledSample& s : samples) {
        columns += static_cast<long>(s.truth.n_frames() - 1) * s.truth.grid.num_points();
    }
    const int window = 2 * half_width + 1;
    Eigen::MatrixXd inputs(window + 1, columns);
    Eigen::VectorXd targets(columns);

    long col = 0;
    for (const LabeledSample& s : samples) {
        const long n = s.truth.grid.num_points();
        const double nu = s.candidate.pde.nu();
        for (int t = 0; t + 1 < s.truth.n_frames(); ++t) {
            const double* cur = s.truth.frames[static_cast<std::size_t>(t)].channel_data(0);
            const double* next = s.truth.frames[static_cast<std::size_t>(t + 1)].channel_data(0);
            for (long i = 0; i < n; ++i) {
                for (int o = -half_width; o <= half_width; ++o) {
                    long j = i + o;
                    if (j < 0) j += n;
                    if (j >= n) j -= n;
                    inputs(o + half_width, col) = cur[j];
                }
                inputs(window, col) = nu;
                targets[col] = next[i] - cur[i];
                ++col;
            }
        }
    }
    return {std::move(inputs), std::move(targets)};
}

void StencilNetSurrogate::fit(const std::vector<LabeledSample>& training) {
    if (training.empty()) throw ConfigError("stencil net fit needs at least one sample");
    const Grid& grid = training.front().truth.grid;
    for (const LabeledSample& s : training) {
        if (s.candidate.pde.family != PdeFamily::Burgers1D) {
            throw ConfigError("stencil net supports the 1D Burgers family only");
        }
        if (!(s.truth.grid == grid)) {
            throw ConfigError("stencil net fit requires samples sharing one grid");
        }
    }

    if (!fitted_ || !(grid_ == grid)) {
        init_weights(grid, derive_seed(config_.seed, {stream::fit}));
    }

    auto [inputs, targets] = training_matrix(training, config_.half_width);
    const long total = inputs.cols();

    Eigen::VectorXd weights = pack_weights();
    Eigen::VectorXd velocity = Eigen::VectorXd::Zero(weights.size());
    Eigen::VectorXd grad(weights.size());

    std::vector<long> order(static_cast<std::size_t>(total));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 eng = make_engine(derive_seed(config_.seed, {stream::fit, 1}));

    epoch_losses_.clear();
    const long batch_size = std::min<long>(config_.batch_size, total);
    Eigen::MatrixXd batch_in(inputs.rows(), batch_size);
    Eigen::VectorXd batch_tg(batch_size);

    for (int epoch = 0; epoch < config_.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), eng);
        double epoch_loss = 0.0;
        long batches = 0;
        for (long start = 0; start < total; start += batch_size) {
            const long count = std::min(batch_size, total - start);
            for (long b = 0; b < count; ++b) {
                const long src = order[static_cast<std::size_t>(start + b)];
                batch_in.col(b) = inputs.col(src);
                batch_tg[b] = targets[src];
            }
            const double loss = loss_and_gradient(batch_in.leftCols(count),
                                                  batch_tg.head(count), &grad);
            if (!std::isfinite(loss)) {
                throw SolverError("stencil net training diverged at epoch " +
                                      std::to_string(epoch),
                                  epoch);
            }
            velocity = config_.momentum * velocity - config_.learning_rate * grad;
            weights += velocity;
            set_weights(weights);
            epoch_loss += loss;
            ++batches;
        }
        epoch_losses_.push_back(batches > 0 ? epoch_loss / static_cast<double>(batches) : 0.0);
    }
    fitted_ = true;
}

Field StencilNetSurrogate::step(const Field& state, const PdeParameters& pde) const {
    if (!fitted_) throw ConfigError("stencil net model is not fitted");
    if (pde.family != PdeFamily::Burgers1D) throw ConfigError("stencil net family mismatch");
    if (!(state.grid == grid_)) throw ConfigError("stencil net grid mismatch");
    if (state.channels() != 1) throw ConfigError("stencil net expects one channel");

    const long n = state.grid.num_points();
    const int hw = config_.half_width;
    const int window = 2 * hw + 1;
    Eigen::MatrixXd inputs(window + 1, n);
    const double* u = state.channel_data(0);
    for (long i = 0; i < n; ++i) {
        for (int o = -hw; o <= hw; ++o) {
            long j = i + o;
            if (j < 0) j += n;
            if (j >= n) j -= n;
            inputs(o + hw, i) = u[j];
        }
        inputs(window, i) = pde.nu();
    }
    const Eigen::VectorXd delta = forward(inputs);

    Field out = Field::zeros(state.grid, 1);
    out.channel(0) = state.channel(0) + delta.array();
    return out;
}

} // namespace preacq
