#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "apinn/loss.hpp"

namespace apinn {

struct AdamSettings {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    AdamSettings settings;
    Eigen::VectorXd m, v;
    long step = 0;

    AdamState(Eigen::Index n, AdamSettings s = {})
        : settings(s), m(Eigen::VectorXd::Zero(n)), v(Eigen::VectorXd::Zero(n)) {}
};

/// Bias-corrected Adam update in place.
void adam_step(Eigen::VectorXd& params, const Eigen::VectorXd& grad, AdamState& state);

/// f(x), writing the gradient into `grad` (already sized).
using Objective = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

struct LbfgsSettings {
    int history = 50;
    int max_iter = 2000;
    double grad_tol = 1e-8;
    double rel_tol = 1e-9;  ///< stop when |f_k - f_{k+1}| <= rel_tol * (1 + |f_{k+1}|)
    double c1 = 1e-4;
    double c2 = 0.9;
    int max_search_evals = 30;
};

enum class LbfgsStatus { gradient_converged, loss_stalled, max_iterations, line_search_failed };
std::string_view to_string(LbfgsStatus s);

/// phi(0), phi'(0), accepted step, phi(step), phi'(step) of one accepted line search.
struct WolfeRecord {
    double f0, slope0, step, f, slope;
};

struct LbfgsResult {
    Eigen::VectorXd x;
    double f = 0.0;
    Eigen::VectorXd grad;
    int iterations = 0;
    int evaluations = 0;
    LbfgsStatus status = LbfgsStatus::max_iterations;
    std::vector<WolfeRecord> steps;
};

/// Called after every accepted iteration with the iteration number and loss.
using IterationHook = std::function<void(int iteration, double f)>;

/// Two-loop-recursion L-BFGS with a strong-Wolfe line search (bracketing + cubic zoom).
LbfgsResult minimize_lbfgs(const Objective& f, Eigen::VectorXd x0, const LbfgsSettings& settings,
                           const IterationHook& hook = {});

/// One row per logged point of a training run.
struct LogRow {
    std::string phase;  ///< "adam" or "lbfgs", optionally with a stage prefix
    long iteration = 0;
    LossBreakdown loss;
};

struct TrainingLog {
    std::vector<LogRow> rows;
    void add(std::string phase, long iteration, const LossBreakdown& l) { rows.push_back({std::move(phase), iteration, l}); }
    /// Columns phase, iteration, mse_u, mse_b, mse_f, total.
    void write_csv(const std::filesystem::path& path) const;
};

struct RunSummary {
    LossBreakdown final_loss;
    long iterations = 0;
    double seconds = 0.0;
    std::string status = "ok";
    bool ok() const { return status == "ok" || status.rfind("converged", 0) == 0 || status == "max_iterations"; }
};

struct AdamRun {
    AdamSettings adam;
    int epochs = 100;
    /// Collocation points per step; 0 means the full set.
    Eigen::Index batch_size = 32;
    std::uint64_t seed = 0;
};

/// Mini-batch Adam over the collocation points. Initial and boundary terms use their full sets on
/// every step. Logs the full-set loss before training and after each epoch. On a numeric failure the
/// network keeps its last finite parameters and the summary status records the error.
RunSummary run_adam(Network& net, const SampleSet& set, const ProblemSpec& spec, const LossOptions& opt,
                    const AdamRun& run, TrainingLog& log, const std::string& phase = "adam");

/// Full-set L-BFGS fine-tuning; logs every accepted iteration.
RunSummary run_lbfgs(Network& net, const SampleSet& set, const ProblemSpec& spec, const LossOptions& opt,
                     const LbfgsSettings& settings, TrainingLog& log, const std::string& phase = "lbfgs");

}  // namespace apinn
