#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lcsk/graph.hpp"
#include "lcsk/path_sequence.hpp"

namespace lcsk {

/// A graph's discrete distribution in LCS metric space: support sequences
/// plus a parallel vector of positive integer masses.
struct PathMeasure {
    std::vector<PathSequence> sequences;
    std::vector<std::int64_t> masses;

    int size() const { return static_cast<int>(sequences.size()); }
    std::int64_t total_mass() const;
};

struct FlcsParams {
    double removing_ratio = 0.0;  // rho in [0, 1]
    double merging_radius = 0.0;  // s in [0, 1]

    void validate() const;  // throws ConfigError on out-of-range values
};

/// All serialized shortest paths deduplicated by exact equality, mass =
/// multiplicity, in first-occurrence order under the (i, j)-lexicographic
/// path enumeration. Throws EmptyRepresentationError for edgeless graphs.
PathMeasure build_basic(const Graph& graph);

/// Fast variant: sequences shorter than rho * L_max are dropped (L_max is the
/// maximum serialized sequence length), then the survivors are greedily
/// merged: a sequence within merging_radius of its nearest center joins it,
/// the center's representative becomes the longer of the two and its mass
/// grows; otherwise the sequence opens a new center. Stream order is the
/// deterministic path enumeration order.
PathMeasure build_fast(const Graph& graph, const FlcsParams& params);

/// Debug dump, one JSON object per line: {"seq": [...], "mass": n}.
void dump_jsonl(const PathMeasure& measure, std::ostream& out);

}  // namespace lcsk
