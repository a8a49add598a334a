#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "apinn/loss.hpp"
#include "apinn/metrics.hpp"
#include "apinn/network.hpp"
#include "apinn/optimize.hpp"
#include "apinn/pde.hpp"
#include "apinn/reference.hpp"
#include "apinn/sampling.hpp"

namespace apinn {

enum class Strategy { baseline, weighted, minibatch, adaptive_resample, time_adaptive_1, time_adaptive_2 };
std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view name);

struct ResampleConfig {
    Eigen::Index candidates = 1000;
    Eigen::Index keep = 200;
    int iterations = 6;
    /// false: each resampling replaces the previously resampled points instead of adding to them.
    bool accumulate = true;
};

struct OptimizerConfig {
    AdamSettings adam;
    int epochs = 100;
    /// Collocation points per Adam step; 0 means full batch.
    Eigen::Index batch_size = 0;
    LbfgsSettings lbfgs;
};

struct TimePlan {
    /// Approach I window end points, strictly increasing and ending at the horizon.
    std::vector<double> windows;
    /// Approach I: a window is done once its mse_f drops to this value.
    double threshold = 1e-4;
    /// Approach II interval length.
    double dt = 0.25;
};

/// Shared uniform evaluation grid: nx points per spatial axis (periodic, endpoint excluded) and nt
/// times including both ends of [0, T].
struct EvalGrid {
    int nx = 256;
    int nt = 101;
    bool operator==(const EvalGrid&) const = default;
    static EvalGrid for_problem(const ProblemSpec& spec);
    /// Columns x[, y], t; time varies slowest, then x, then y.
    Eigen::MatrixXd points(const ProblemSpec& spec) const;
};

struct StrategyConfig {
    Strategy strategy = Strategy::weighted;
    int hidden_layers = 4;
    int hidden_width = 64;
    SampleCounts counts;
    LossOptions loss;
    ResampleConfig resample;
    TimePlan time;
    OptimizerConfig optim;
    Eigen::Index probe_points = 1000;
    std::uint64_t seed = 0;

    NetworkSpec network_for(const ProblemSpec& spec) const;
    /// Throws PreconditionError on an inconsistent plan.
    void validate(const ProblemSpec& spec) const;
};

/// One or more networks owning consecutive time intervals; a time on an interior break belongs to
/// the later network.
struct TrainedModel {
    std::vector<Network> nets;
    std::vector<double> breaks;  ///< nets.size() + 1 entries

    std::size_t owner(double t) const;
    /// Output 0 at every column.
    Eigen::VectorXd predict(const Eigen::MatrixXd& points) const;
};

struct RoundRecord {
    int stage = 0;
    int window = 0;
    int round = 0;
    double t_end = 0.0;
    Eigen::Index n_f = 0;
    RunSummary adam;
    RunSummary lbfgs;
    double window_mse_f = 0.0;  ///< on the round's collocation set after training
    double probe_mse_f = 0.0;   ///< on a held-out LHS set over the stage interval
};

struct StageRecord {
    double t0 = 0.0, t1 = 0.0;
    int rounds = 0;
    LossBreakdown final_loss;
    /// Mean squared mismatch between this network and its predecessor at the handoff points.
    std::optional<double> handoff_mse_u;
    std::string status = "ok";
};

struct WindowRecord {
    double t_end = 0.0;
    int rounds = 0;
    double mse_f = 0.0;
    bool reached_threshold = false;
    bool flagged = false;
};

struct TrainReport {
    Strategy strategy = Strategy::weighted;
    std::string problem;
    TrainingLog log;
    std::vector<RoundRecord> rounds;
    std::vector<StageRecord> stages;
    std::vector<WindowRecord> windows;
    std::optional<ErrorTriple> metrics;
    std::optional<EvalGrid> grid;
    std::vector<std::string> checkpoints;
    double seconds = 0.0;
    std::string status = "ok";
    /// Some window ended at its round cap with mse_f above ten times the threshold.
    bool flagged = false;

    nlohmann::json to_json(bool include_timing = true) const;
};

struct TrainResult {
    TrainReport report;
    TrainedModel model;
    /// Training points of the last stage, as used by its final round.
    SampleSet samples;
};

/// Called after every training round; for progress output only.
using RoundHook = std::function<void(const RoundRecord&)>;

/// Runs whichever strategy the config names. Optimizer failures end up in the report status.
TrainResult train(const ProblemSpec& spec, const StrategyConfig& config, const RoundHook& hook = {});

TrainResult train_baseline(const ProblemSpec& spec, StrategyConfig config, const RoundHook& hook = {});
TrainResult train_adaptive_resample(const ProblemSpec& spec, const StrategyConfig& config,
                                  const RoundHook& hook = {});
TrainResult train_time_adaptive_1(const ProblemSpec& spec, const StrategyConfig& config,
                                  const RoundHook& hook = {});
TrainResult train_time_adaptive_2(const ProblemSpec& spec, const StrategyConfig& config,
                                  const RoundHook& hook = {});

/// Errors of the model against the reference over the grid. The optional outputs receive the
/// grid points, predictions and reference samples.
ErrorTriple evaluate(const TrainedModel& model, const ReferenceSolution& ref, const EvalGrid& grid,
                     Eigen::MatrixXd* points = nullptr, Eigen::VectorXd* pred = nullptr,
                     Eigen::VectorXd* truth = nullptr);

nlohmann::json to_json(const ErrorTriple& e);
nlohmann::json to_json(const LossBreakdown& l);

}  // namespace apinn
