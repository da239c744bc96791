#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "lcsk/representation.hpp"

namespace lcsk {

/// A coupling between two discrete measures and its transport cost.
struct TransportPlan {
    Eigen::MatrixXd coupling;       // n1 x n2, nonnegative
    double cost = 0.0;              // <coupling, D>
    bool converged = true;          // marginal violation <= tol on exit
    double marginal_violation = 0.0;  // L-inf of row/col sum errors
    int iterations = 0;
};

/// Pairwise LCS distances between the support points of two measures.
/// Throws EmptyMeasureError if either measure is empty.
Eigen::MatrixXd ground_distance_matrix(const PathMeasure& a, const PathMeasure& b);

/// Entropically regularized optimal transport via log-domain Sinkhorn
/// iterations on the kernel exp(-D/epsilon). Stops when the largest marginal
/// violation drops to tol or max_iter is exhausted; non-convergence is
/// reported through the returned plan, not an exception.
/// Throws BadMarginalsError if p or q is not a simplex vector.
TransportPlan sinkhorn(const Eigen::MatrixXd& D, const Eigen::VectorXd& p,
                       const Eigen::VectorXd& q, double epsilon, double tol = 1e-9,
                       int max_iter = 10000);

/// Exact solution of the transportation LP by the network simplex method.
/// Marginals of the result are satisfied to 1e-10.
/// Throws TooLargeError when n1*n2 exceeds size_cap, BadMarginalsError as above.
TransportPlan exact_emd(const Eigen::MatrixXd& D, const Eigen::VectorXd& p,
                        const Eigen::VectorXd& q, std::int64_t size_cap = 250000);

}  // namespace lcsk
