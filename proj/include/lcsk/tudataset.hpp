#pragma once

#include <filesystem>
#include <string>

#include "lcsk/graph.hpp"

namespace lcsk {

/// Loads a dataset in the standard benchmark text format:
///   <name>_A.txt               lines "i, j", 1-based global vertex ids,
///                              one directed record per direction of each edge
///   <name>_graph_indicator.txt line k holds the 1-based graph id of vertex k
///   <name>_graph_labels.txt    one class label per graph
///   <name>_node_labels.txt     optional, one integer per vertex
///   <name>_edge_labels.txt     optional, one integer per line of _A.txt
///
/// Raw vertex and edge labels are shifted so the minimum of each label family
/// becomes 1. Self-loop records and duplicate edges are dropped silently.
/// When node labels are absent every vertex is labeled degree+1.
/// Continuous attribute files are ignored.
///
/// Throws MissingFileError, MalformedLineError, InconsistentEdgeLabelsError.
Dataset load_tudataset(const std::filesystem::path& directory, const std::string& name);

/// Returns a copy of the graph with vertex_labels[i] = degree(i) + 1.
Graph degree_labeling(Graph graph);

}  // namespace lcsk
