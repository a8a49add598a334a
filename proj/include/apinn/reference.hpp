#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "apinn/pde.hpp"

namespace apinn {

/// Dense space-time output of the spectral solver on a uniform periodic grid.
/// Slice s is stored at times[s]; values are row-major with axis 0 slowest.
struct ReferenceSolution {
    ProblemSpec problem;
    int n = 0;            ///< grid points per axis
    double dt = 0.0;      ///< solver step
    double dt_out = 0.0;  ///< spacing of stored slices
    std::vector<double> times;
    std::vector<std::vector<double>> slices;

    int dim() const { return problem.spatial_dim(); }
    double spacing(int axis) const { return problem.space[axis].length() / n; }
    double node(int axis, int j) const { return problem.space[axis].lo + j * spacing(axis); }
    std::size_t nodes_per_slice() const;
    GridField field(std::size_t slice) const;
};

struct SolverOptions {
    int n = 512;
    double dt = 1e-4;
    /// 0 selects t_end / 100, i.e. 101 stored slices.
    double dt_out = 0.0;
    /// Combine runs at dt and dt/2 as 2 u(dt/2) - u(dt), lifting the scheme to second order.
    bool extrapolate = true;
    /// Replaces the catalog initial condition when set (not recorded in archives).
    std::function<double(std::span<const double>)> initial;
};

/// First-order stabilised semi-implicit Fourier scheme; stabiliser S = 2 gamma2.
/// Every solver returns the Richardson-extrapolated result unless opt.extrapolate is false.
ReferenceSolution solve_ac_1d(const ProblemSpec& spec, const SolverOptions& opt);
/// Implicit -gamma1 d4/dx4 and S d2/dx2 stabiliser (S = 2 gamma2); the k = 0 mode is untouched.
ReferenceSolution solve_ch_1d(const ProblemSpec& spec, const SolverOptions& opt);
/// (lambda, eps) Allen-Cahn on a square periodic grid; stabiliser S = 2 lambda.
ReferenceSolution solve_ac_2d(const ProblemSpec& spec, const SolverOptions& opt);
/// Dispatches on spec.family.
ReferenceSolution solve_reference(const ProblemSpec& spec, const SolverOptions& opt);

/// Values at space-time points (columns: spatial coords then t).
/// Trigonometric interpolation in space, four-point Lagrange (cubic) in time.
Eigen::VectorXd sample(const ReferenceSolution& sol, const Eigen::MatrixXd& points);

/// Discrete free energy of every stored slice.
std::vector<double> energy_history(const ReferenceSolution& sol);
/// Spatial mean of a stored slice.
double spatial_mean(const ReferenceSolution& sol, std::size_t slice);

/// Binary archive "APINNRS1": header (problem, N, dt, dt_out, slice count), times, then values.
void save_archive(const ReferenceSolution& sol, const std::filesystem::path& path);
ReferenceSolution load_archive(const std::filesystem::path& path);

/// CSV of the stored slice nearest to time t: columns t, x[, y], u.
void write_slice_csv(const ReferenceSolution& sol, double t, const std::filesystem::path& path);

}  // namespace apinn
