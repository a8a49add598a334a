#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apinn/autodiff.hpp"

namespace apinn {

enum class Family { ac_1d, ch_1d, ac_2d };
enum class InitialCondition { ac_cos, ac_sin, ch_cos, drop2d };
enum class BoundaryKind { periodic };

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A phase-field problem from the catalog.
///   ac_1d:  u_t = gamma1 u_xx + gamma2 (u - u^3)
///   ch_1d:  u_t = (gamma2 (u^3 - u) - gamma1 u_xx)_xx
///   ac_2d:  phi_t = lambda (eps^2 lap(phi) - phi^3 + phi)
struct ProblemSpec {
    Family family = Family::ac_1d;
    double gamma1 = 1e-4;
    double gamma2 = 5.0;
    double lambda = 10.0;
    double epsilon = 0.025;
    std::vector<Interval> space{{-1.0, 1.0}};
    double t_end = 1.0;
    InitialCondition initial = InitialCondition::ac_cos;
    BoundaryKind boundary = BoundaryKind::periodic;

    int spatial_dim() const { return static_cast<int>(space.size()); }
    int input_dim() const { return spatial_dim() + 1; }
    /// 2 for the (u, mu) Cahn-Hilliard formulation, else 1.
    int output_dim() const { return family == Family::ch_1d ? 2 : 1; }
    void validate() const;

    /// Gradient and bulk coefficients of the Ginzburg-Landau energy driving this flow.
    /// For the (lambda, eps) form these are (eps^2, 1); lambda is a mobility.
    std::pair<double, double> energy_coefficients() const;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;

    /// u_t - 1e-4 u_xx + 5u^3 - 5u = 0 on [-1,1] x [0,1], u0 = x^2 cos(pi x).
    static ProblemSpec ac_cos();
    /// Same equation with gamma2 free and u0 = x^2 sin(2 pi x).
    static ProblemSpec ac_sin(double gamma2 = 4.0);
    /// Cahn-Hilliard, gamma2 = 0.01, gamma1 = 1e-6, u0 = -cos(2 pi x).
    static ProblemSpec ch_cos();
    /// Shrinking drop on [0,1]^2, lambda = 10, eps = 0.025.
    static ProblemSpec drop2d(double t_end = 10.0);
};

std::string_view to_string(Family f);
std::string_view to_string(InitialCondition ic);
Family parse_family(std::string_view name);
/// Throws CatalogError for unknown names.
InitialCondition parse_initial_condition(std::string_view name);

/// u_t - gamma1 u_xx + gamma2 u^3 - gamma2 u.
double ac_residual_1d(const Jet& u, const ProblemSpec& spec);
/// phi_t - lambda (eps^2 (phi_xx + phi_yy) - phi^3 + phi).
double ac_residual_2d(const Jet& phi, const ProblemSpec& spec);
/// r1 = u_t - mu_xx; r2 = mu - gamma2 (u^3 - u) + gamma1 u_xx.
std::pair<double, double> ch_residuals_1d(const Jet& u, const Jet& mu, const ProblemSpec& spec);

/// Catalog initial data at a spatial point. `epsilon` is only used by drop2d.
double initial_condition(InitialCondition ic, std::span<const double> x, double epsilon = 0.025);
double initial_condition(std::string_view name, std::span<const double> x, double epsilon = 0.025);
double initial_condition(const ProblemSpec& spec, std::span<const double> x);

/// Squared residual magnitude at every point: r^2 for Allen-Cahn, r1^2 + r2^2 for Cahn-Hilliard.
Eigen::VectorXd residual_scores(const Network& net, const Eigen::MatrixXd& points, const ProblemSpec& spec);

/// Values on a uniform periodic grid. Axis 0 varies slowest; node j on an axis sits at lo + j*h.
struct GridField {
    std::vector<int> shape;
    std::vector<Interval> box;
    std::vector<double> values;
};

/// Ginzburg-Landau energy: integral of gamma1/2 |grad u|^2 + gamma2/4 (u^2 - 1)^2,
/// spectral gradient, rectangle rule (exact for band-limited periodic data).
double free_energy(const GridField& u, const ProblemSpec& spec);

}  // namespace apinn
