#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace apinn {

enum class Activation { tanh };

/// Shape of a fully connected network: input -> hidden_layers x hidden_width -> output.
/// Inputs are ordered spatial coordinates first, time last: (x, t) or (x, y, t).
struct NetworkSpec {
    int input_dim = 2;
    int hidden_layers = 4;
    int hidden_width = 128;
    int output_dim = 1;
    Activation activation = Activation::tanh;

    void validate() const;
    /// n_1 .. n_L (input width first, output width last).
    std::vector<int> layer_sizes() const;
    std::size_t parameter_count() const;
    int spatial_dim() const { return input_dim - 1; }

    friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

/// Offsets of every weight matrix and bias vector inside a flat parameter vector.
/// Each affine layer stores W (rows = fan_out, column-major) followed by b.
class ParamLayout {
public:
    explicit ParamLayout(const NetworkSpec& spec);

    int affine_layers() const { return static_cast<int>(fan_in_.size()); }
    int fan_in(int k) const { return fan_in_[k]; }
    int fan_out(int k) const { return fan_out_[k]; }
    std::size_t weight_offset(int k) const { return w_off_[k]; }
    std::size_t bias_offset(int k) const { return w_off_[k] + std::size_t(fan_in_[k]) * fan_out_[k]; }
    std::size_t size() const { return size_; }

private:
    std::vector<int> fan_in_, fan_out_;
    std::vector<std::size_t> w_off_;
    std::size_t size_ = 0;
};

using ConstMatrixMap = Eigen::Map<const Eigen::MatrixXd>;
using MatrixMap = Eigen::Map<Eigen::MatrixXd>;
using ConstVectorMap = Eigen::Map<const Eigen::VectorXd>;
using VectorMap = Eigen::Map<Eigen::VectorXd>;

/// Feed-forward network a[k] = tanh(W[k] a[k-1] + b[k]) with a linear output layer.
/// Parameters live in one flat vector so optimisers can work on them directly.
class Network {
public:
    /// All-zero parameters.
    explicit Network(NetworkSpec spec);

    /// Glorot-uniform weights, zero biases; deterministic per seed.
    static Network init(const NetworkSpec& spec, std::uint64_t seed);

    const NetworkSpec& spec() const { return spec_; }
    const ParamLayout& layout() const { return layout_; }
    int affine_layers() const { return layout_.affine_layers(); }

    ConstMatrixMap weights(int k) const;
    MatrixMap weights(int k);
    ConstVectorMap bias(int k) const;
    VectorMap bias(int k);

    const Eigen::VectorXd& parameters() const { return params_; }
    /// Replaces all parameters; size must match and every value must be finite.
    void set_parameters(const Eigen::VectorXd& p);

    /// Output vector (length output_dim) at one point.
    Eigen::VectorXd forward(std::span<const double> point) const;
    /// Batched forward: points are columns (input_dim x B); result is output_dim x B.
    Eigen::MatrixXd forward(const Eigen::MatrixXd& points) const;

private:
    NetworkSpec spec_;
    ParamLayout layout_;
    Eigen::VectorXd params_;
};

/// Binary checkpoint: "APINNCK1", five int32 spec fields, uint64 count, raw doubles.
void save_checkpoint(const Network& net, const std::filesystem::path& path);
Network load_checkpoint(const std::filesystem::path& path);

}  // namespace apinn
