#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "apinn/network.hpp"

namespace apinn {

/// Which input derivatives to propagate: order[i] in {0, 1, 2} for input i.
/// Mixed partials are never formed.
class JetRequest {
public:
    explicit JetRequest(std::vector<int> order);

    /// Values only.
    static JetRequest values(int input_dim);
    /// d/dx_i and d2/dx_i2 for every spatial input, d/dt for time (last input).
    static JetRequest pde_residual(int input_dim);
    /// d/dx_i for every spatial input.
    static JetRequest spatial_gradient(int input_dim);

    int input_dim() const { return static_cast<int>(order_.size()); }
    int order(int input) const { return order_[input]; }
    /// Channel 0 is the value; then first-derivative channels, then second-derivative channels.
    int channels() const { return channels_; }
    /// Channel index of d/d(input), or -1.
    int first(int input) const { return first_[input]; }
    /// Channel index of d2/d(input)2, or -1.
    int second(int input) const { return second_[input]; }

    friend bool operator==(const JetRequest& a, const JetRequest& b) { return a.order_ == b.order_; }

private:
    std::vector<int> order_, first_, second_;
    int channels_ = 1;
};

/// One network output and its requested input derivatives at one point.
/// Unrequested fields are zero.
struct Jet {
    double value = 0.0;
    double d_t = 0.0;
    double d_tt = 0.0;
    std::vector<double> d_x;   ///< per spatial axis
    std::vector<double> d_xx;  ///< per spatial axis
};

/// Output jets for a batch of points, stored channel-stacked:
/// data is output_dim x (channels * batch) and channel c occupies columns [c*batch, (c+1)*batch).
struct JetBatch {
    JetRequest request;
    Eigen::Index batch = 0;
    Eigen::MatrixXd data;

    auto channel(int c) { return data.middleCols(Eigen::Index(c) * batch, batch); }
    auto channel(int c) const { return data.middleCols(Eigen::Index(c) * batch, batch); }

    Jet jet(Eigen::Index point, int output = 0) const;
};

/// Parameter gradient with the same flat layout as Network::parameters().
struct ParamGradient {
    NetworkSpec spec;
    Eigen::VectorXd values;

    ConstMatrixMap weights(int k) const;
    ConstVectorMap bias(int k) const;
};

/// Propagates jets through the network for a batch of points (columns).
JetBatch eval_jets(const Network& net, const Eigen::MatrixXd& points, const JetRequest& request);

/// One jet per network output at a single point.
std::vector<Jet> eval_jet(const Network& net, std::span<const double> point, const JetRequest& request);

/// A loss that is a sum of per-point terms over a chunk of points.
/// Receives the index of the chunk's first point and its output jets; writes
/// d(loss)/d(jet entry) into `seeds` (same shape as jets.data) and returns the chunk loss.
using JetLoss = std::function<double(Eigen::Index first, const JetBatch& jets, Eigen::MatrixXd& seeds)>;

/// Points per kernel chunk. Chunk boundaries fall on multiples of this, so losses that
/// couple consecutive points (paired boundary samples) must keep pairs aligned to it.
inline constexpr Eigen::Index kChunkPoints = 256;

/// Evaluates `loss` over all points and adds d(loss)/d(theta) into `grad`.
/// Chunks run in parallel; their contributions are reduced in chunk order, so the
/// result is independent of the thread count. Returns the loss.
double accumulate_loss_grad(const Network& net, const Eigen::MatrixXd& points, const JetRequest& request,
                            const JetLoss& loss, Eigen::VectorXd& grad);

/// Same as accumulate_loss_grad, without gradients.
double eval_loss(const Network& net, const Eigen::MatrixXd& points, const JetRequest& request, const JetLoss& loss);

ParamGradient loss_param_grad(const Network& net, const Eigen::MatrixXd& points, const JetRequest& request,
                              const JetLoss& loss);

namespace serial {

/// Plain-loop jet propagation, one point at a time. Reference for the batched kernels.
JetBatch eval_jets(const Network& net, const Eigen::MatrixXd& points, const JetRequest& request);

/// Plain-loop reverse sweep: d(sum_ij seeds_ij * jets_ij)/d(theta).
Eigen::VectorXd seeded_param_grad(const Network& net, const Eigen::MatrixXd& points, const JetRequest& request,
                                  const Eigen::MatrixXd& seeds);

}  // namespace serial

}  // namespace apinn
