#pragma once

#include <string>
#include <vector>

#include "lcsk/errors.hpp"

namespace lcsk {

/// Undirected simple graph with positive integer labels on vertices and,
/// optionally, on edges. Immutable after construction by convention; the
/// pipeline never mutates a Graph once its dataset is loaded.
struct Graph {
    int id = 0;
    /// Sorted neighbor lists; adjacency[i] never contains i.
    std::vector<std::vector<int>> adjacency;
    /// One label per vertex, every label >= 1.
    std::vector<int> vertex_labels;
    /// Parallel to adjacency when edge labels are in use; entry 0 marks a
    /// missing label. Empty when the graph carries no edge labels.
    std::vector<std::vector<int>> edge_label_adj;

    int n_vertices() const { return static_cast<int>(vertex_labels.size()); }
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    bool has_edge_labels() const { return !edge_label_adj.empty(); }

    /// Label of edge {u, v}. Throws MissingEdgeLabelError if this graph has
    /// edge labels but {u, v} carries none, and Error if {u, v} is not an edge.
    int edge_label(int u, int v) const;

    /// Checks the structural invariants: symmetric adjacency, no self-loops,
    /// labels >= 1, edge labels (when present) complete. Throws Error.
    void validate() const;
};

struct Dataset {
    std::string name;
    std::vector<Graph> graphs;
    std::vector<int> class_labels;  // one per graph
    bool has_edge_labels = false;

    int size() const { return static_cast<int>(graphs.size()); }
};

/// Builds an undirected graph from an edge list; labels may be filled later.
/// Self-loops and duplicate edges are rejected here (callers dedup first).
Graph make_graph(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                 std::vector<int> vertex_labels, int id = 0);

}  // namespace lcsk
