#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include <Eigen/Dense>

#include "apinn/network.hpp"
#include "apinn/pde.hpp"

namespace apinn {

enum class PointTag : std::uint8_t { base, resampled };

/// Initial data: points at the start time (columns: x[, y], t) and target values.
struct InitialSet {
    Eigen::MatrixXd points;
    Eigen::VectorXd values;
    Eigen::Index size() const { return points.cols(); }
};

/// Periodic boundary pairs. Column i of `lower` sits on the lower face of axis[i];
/// its partner is the same point moved to the upper face. In 1D this is (x_l, t_b).
struct BoundarySet {
    Eigen::MatrixXd lower;
    std::vector<int> axis;
    Eigen::Index size() const { return lower.cols(); }
    Eigen::MatrixXd upper(const ProblemSpec& spec) const;
    /// Boundary times t_b.
    Eigen::VectorXd times() const;
};

struct SampleSet {
    InitialSet initial;
    BoundarySet boundary;
    Eigen::MatrixXd collocation;
    std::vector<PointTag> tags;

    Eigen::Index n_u() const { return initial.size(); }
    Eigen::Index n_b() const { return boundary.size(); }
    Eigen::Index n_f() const { return collocation.cols(); }

    void append_collocation(const Eigen::MatrixXd& points, PointTag tag);
    /// Removes every resampled collocation point, keeping base points in order.
    void drop_resampled();
    Eigen::Index count(PointTag tag) const;
};

struct SampleCounts {
    Eigen::Index n_u = 200;
    Eigen::Index n_b = 200;
    Eigen::Index n_f = 2000;
};

/// Derives an independent stream seed from a base seed and a stream label.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Spatial box of the problem followed by the time interval.
std::vector<Interval> space_time_box(const ProblemSpec& spec, Interval time);

/// Latin hypercube design: on every axis the n equal bins each hold exactly one coordinate.
/// Returns one point per column.
Eigen::MatrixXd lhs(Eigen::Index n, const std::vector<Interval>& bounds, std::uint64_t seed);

/// Uniform random positions at t = t0 with catalog initial values.
InitialSet sample_initial(const ProblemSpec& spec, Eigen::Index n_u, std::uint64_t seed, double t0 = 0.0);
/// Uniform random positions at t0 with values predicted by `previous` (output 0).
InitialSet sample_handoff(const Network& previous, const ProblemSpec& spec, Eigen::Index n_u, std::uint64_t seed,
                          double t0);
/// Uniform random boundary times in `time`; in 2D pairs alternate between the x and y faces.
BoundarySet sample_boundary(const ProblemSpec& spec, Eigen::Index n_b, std::uint64_t seed, Interval time);

/// Initial (uniform), boundary (uniform) and base collocation (LHS) sets over `time`.
SampleSet build_sample_set(const ProblemSpec& spec, const SampleCounts& counts, std::uint64_t seed, Interval time);

/// Indices of the k largest scores, ties broken by lower index first.
std::vector<Eigen::Index> top_k(const Eigen::VectorXd& scores, Eigen::Index k);

struct ResampleResult {
    Eigen::MatrixXd candidates;
    Eigen::VectorXd scores;             ///< squared residual per candidate
    std::vector<Eigen::Index> chosen;   ///< candidate indices, largest residual first
    Eigen::MatrixXd points;             ///< chosen candidates in the same order
};

/// Draws `candidate_count` LHS points over the spatial box x `time`, scores them by
/// squared residual and keeps the `keep_count` worst.
ResampleResult resample_adaptive(const Network& net, const ProblemSpec& spec, Eigen::Index candidate_count,
                                 Eigen::Index keep_count, std::uint64_t seed, Interval time);

/// Keeps initial data; drops boundary and collocation points with t > t_max.
SampleSet restrict_time(const SampleSet& set, double t_max);

/// Columns x[, y], t, tag with tag in {initial, boundary, base, resampled}.
void write_points_csv(const SampleSet& set, const ProblemSpec& spec, const std::filesystem::path& path);

}  // namespace apinn
