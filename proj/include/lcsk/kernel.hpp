#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcsk/representation.hpp"
#include "lcsk/transport.hpp"

namespace lcsk {

enum class Variant { blcs, flcs };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);  // throws ConfigError

/// Transport solver settings: exact network simplex when the ground matrix
/// has at most exact_cap entries, log-domain Sinkhorn beyond that.
struct OtSettings {
    double epsilon = 0.01;
    double tol = 1e-9;
    int max_iter = 10000;
    std::int64_t exact_cap = 10000;

    bool operator==(const OtSettings&) const = default;
};

struct KernelParams {
    Variant variant = Variant::blcs;
    FlcsParams flcs;      // used by the flcs variant only
    double lambda = 1.0;  // Laplacian kernel scale, > 0
    OtSettings ot;

    void validate() const;  // throws ConfigError
};

/// A transport solve that stopped short of its marginal tolerance.
struct PairWarning {
    int i = 0;
    int j = 0;
    double violation = 0.0;
};

/// Symmetric matrix of LCS graph distances over a dataset. graph_ids lists
/// the dataset indices behind each row; excluded lists graphs that produced
/// no representation (edgeless) and were left out.
struct DistanceMatrix {
    Eigen::MatrixXd values;
    std::vector<int> graph_ids;
    std::vector<int> excluded;
    std::vector<PairWarning> warnings;
    double seconds = 0.0;  // wall clock spent building
};

/// Symmetric matrix of kernel values plus the parameters that produced it.
struct GramMatrix {
    Eigen::MatrixXd values;
    KernelParams params;
    std::vector<int> graph_ids;
    std::vector<int> excluded;
    std::vector<PairWarning> warnings;
    double seconds = 0.0;
};

/// Wasserstein distance between two path measures over their LCS ground
/// distances, masses normalized to simplex vectors. In [0, 1].
/// Throws EmptyMeasureError. When the solver fell short of tolerance the
/// violation is reported through *violation (if non-null).
double graph_distance(const PathMeasure& a, const PathMeasure& b,
                      const OtSettings& ot, double* violation = nullptr);

/// exp(-lambda * graph_distance(a, b)), in (0, 1].
double kernel_value(const PathMeasure& a, const PathMeasure& b, const KernelParams& params);

/// Builds per-graph representations once (basic or fast per the variant) and
/// solves all n(n+1)/2 unordered transport problems. Deterministic for any
/// worker count. Diagonal distances are 0 by construction, never solved.
DistanceMatrix pairwise_graph_distances(const Dataset& dataset, const KernelParams& params,
                                        int workers = 1);

/// Elementwise exp(-lambda * d) over a distance matrix.
GramMatrix gram_from_distances(const DistanceMatrix& distances, const KernelParams& params);

GramMatrix gram_matrix(const Dataset& dataset, const KernelParams& params, int workers = 1);

/// Smallest eigenvalue of a symmetric matrix; diagnostic for kernel matrices
/// that are not guaranteed positive semidefinite. n <= 2000 only.
double min_eigenvalue(const Eigen::MatrixXd& m);

/// CSV with one "#"-prefixed JSON header line (params, dataset name, graph
/// count, excluded indices) followed by n rows of 17-significant-digit
/// decimal floats.
void write_gram_csv(const GramMatrix& gram, const std::string& dataset_name, std::ostream& out);
void write_distance_csv(const DistanceMatrix& distances, const KernelParams& params,
                        const std::string& dataset_name, std::ostream& out);

/// Reads a distance CSV back; returns nullopt unless the header matches the
/// given dataset/params (lambda excluded — distances do not depend on it).
std::optional<DistanceMatrix> read_distance_csv(std::istream& in, const std::string& dataset_name,
                                                int n_graphs, const KernelParams& params);

}  // namespace lcsk
