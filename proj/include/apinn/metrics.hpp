#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace apinn {

struct ErrorTriple {
    double rel_l2 = 0.0;
    double rel_l1 = 0.0;
    double linf = 0.0;  ///< absolute
};

/// ||pred - truth||_2 / ||truth||_2; throws NormalizationError when ||truth|| = 0.
double rel_l2(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);
double rel_l1(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);
/// max |pred - truth|, not normalized.
double linf(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);
ErrorTriple error_triple(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);

/// One column of the strategy comparison table.
struct TableColumn {
    std::string label;
    ErrorTriple errors;
};

/// Strategy labels in table order.
inline const std::vector<std::string>& table1_labels() {
    static const std::vector<std::string> labels{"PINN", "Weighted Loss", "Mini-batching", "Re-sampling"};
    return labels;
}

/// Rows "Relative l2", "Relative l1", "l-inf norm"; one column per entry.
std::string comparison_markdown(const std::vector<TableColumn>& cols, const std::string& corner = "Allen-Cahn");
std::string comparison_csv(const std::vector<TableColumn>& cols);

}  // namespace apinn
