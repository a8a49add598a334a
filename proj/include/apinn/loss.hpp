#pragma once

#include <Eigen/Dense>

#include "apinn/network.hpp"
#include "apinn/pde.hpp"
#include "apinn/sampling.hpp"

namespace apinn {

enum class BoundaryMode {
    periodic,        ///< match U and its normal derivative on opposite faces
    dirichlet_zero,  ///< U = 0 on both faces (the Burgers-type template)
};

struct LossWeights {
    double c0 = 100.0;  ///< weight on the initial-condition term
};

struct LossOptions {
    LossWeights weights;
    BoundaryMode boundary = BoundaryMode::periodic;
    /// Cahn-Hilliard only: also match mu and mu_x across the periodic faces.
    bool mu_periodic = false;
};

struct LossBreakdown {
    double mse_u = 0.0;
    double mse_b = 0.0;
    double mse_f = 0.0;
    double total = 0.0;
};

/// (1/N_u) sum |U(x_i, t0) - u_i|^2 on output 0.
double mse_u(const Network& net, const InitialSet& initial);
/// 1D periodic form: (1/N_b) sum |U(t,x_u) - U(t,x_l)|^2 + |U_x(t,x_u) - U_x(t,x_l)|^2.
double mse_b_periodic(const Network& net, const Eigen::VectorXd& times, double x_l, double x_u);
double mse_b(const Network& net, const BoundarySet& boundary, const ProblemSpec& spec, const LossOptions& opt = {});
/// Mean squared residual (Allen-Cahn) or mean of r1^2 + r2^2 (Cahn-Hilliard).
/// When `grad` is non-null, d(mse_f)/d(theta) is added to it.
double mse_f(const Network& net, const Eigen::MatrixXd& collocation, const ProblemSpec& spec,
             Eigen::VectorXd* grad = nullptr);

/// total = c0 * mse_u + mse_b + mse_f.
LossBreakdown total_loss(const Network& net, const SampleSet& set, const ProblemSpec& spec, const LossOptions& opt);

/// Composite loss over the given pieces; when `grad` is non-null, d(total)/d(theta) is added to it.
LossBreakdown composite_loss(const Network& net, const InitialSet& initial, const BoundarySet& boundary,
                             const Eigen::MatrixXd& collocation, const ProblemSpec& spec, const LossOptions& opt,
                             Eigen::VectorXd* grad);

}  // namespace apinn
