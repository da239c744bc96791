#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lcsk/errors.hpp"

namespace lcsk {

/// Binary C-SVC trained on a precomputed kernel. Indices refer to positions
/// in the training gram matrix.
struct SvmModel {
    std::vector<int> support;        // positions with alpha > 0
    std::vector<double> coef;        // alpha_i * y_i for each support vector
    double bias = 0.0;
    int iterations = 0;
    bool converged = true;

    /// Decision value for a point whose kernel row over the training set is
    /// given (indexed like the gram the model was trained on).
    double decision(std::span<const double> kernel_row) const;
};

/// SMO-style dual ascent with second-order working-set selection, tolerant of
/// indefinite gram matrices (curvature clamped from below). Labels are +/-1.
/// Throws SingleClassError when only one label value is present.
SvmModel svm_train(const Eigen::MatrixXd& gram, std::span<const int> labels, double C,
                   double kkt_tol = 1e-3, std::int64_t max_iter = 0 /* 0 = auto */);

/// One-vs-one multiclass wrapper over binary SVMs on a precomputed kernel.
class OvoSvm {
public:
    /// gram: train x train kernel; labels: arbitrary integer class labels.
    void train(const Eigen::MatrixXd& gram, std::span<const int> labels, double C);

    /// kernel_row: kernel values between one test point and every training
    /// point. Pairwise votes; ties go to the lowest class label.
    int predict(std::span<const double> kernel_row) const;

    const std::vector<int>& classes() const { return classes_; }

private:
    std::vector<int> classes_;                      // sorted distinct labels
    std::vector<std::pair<int, int>> pairs_;        // class index pairs (a < b)
    std::vector<SvmModel> models_;                  // one per pair
    std::vector<std::vector<int>> pair_members_;    // training positions per pair
};

}  // namespace lcsk
