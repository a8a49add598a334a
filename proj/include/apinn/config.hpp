#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "apinn/pde.hpp"
#include "apinn/reference.hpp"
#include "apinn/trainer.hpp"

namespace apinn {

struct ReferenceConfig {
    SolverOptions solver;
    /// Directory of the reference command; train and evaluate read dir/solution.bin.
    std::filesystem::path dir;
    std::filesystem::path archive() const { return dir / "solution.bin"; }
};

struct ExperimentConfig {
    std::string name;
    ProblemSpec problem;
    StrategyConfig strategy;
    ReferenceConfig reference;
    EvalGrid grid;
    std::vector<double> slices{0.0, 0.25, 0.5, 1.0};
    std::filesystem::path output;
    bool paper_scale = false;
    /// Resolved configuration (after paper-scale overrides) in canonical YAML form.
    std::string resolved;
};

/// Parses a YAML experiment description. With `paper_scale`, the optional top-level `paper_scale`
/// map is merged over the document first. Errors are ConfigError with origin:line:column.
ExperimentConfig parse_config(const std::string& text, const std::string& origin, bool paper_scale = false);
ExperimentConfig load_config(const std::filesystem::path& path, bool paper_scale = false);

/// 64-bit FNV-1a of the resolved configuration, as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

}  // namespace apinn
