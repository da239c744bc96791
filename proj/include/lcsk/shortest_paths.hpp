#pragma once

#include <vector>

#include "lcsk/graph.hpp"

namespace lcsk {

/// A simple path given as its vertex indices, start to end.
struct VertexPath {
    std::vector<int> vertices;

    int edge_count() const { return static_cast<int>(vertices.size()) - 1; }

    bool operator==(const VertexPath&) const = default;
};

/// One shortest path for every ordered pair (i, j), i != j, with j reachable
/// from i, in (i, j)-lexicographic order. Unreachable pairs are omitted.
///
/// Geodesic ties are broken deterministically: walking back from the target,
/// each predecessor is the smallest-index neighbor one BFS level closer to
/// the source. Two runs on the same graph return identical output.
std::vector<VertexPath> all_pairs_shortest_paths(const Graph& graph);

/// BFS distances from one source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& graph, int source);

}  // namespace lcsk
