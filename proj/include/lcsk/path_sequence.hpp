#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lcsk/graph.hpp"
#include "lcsk/shortest_paths.hpp"

namespace lcsk {

/// A serialized shortest path: vertex labels interleaved with negated edge
/// labels when the graph is edge-labeled, plain vertex labels otherwise.
/// Entries are never zero.
struct PathSequence {
    std::vector<std::int32_t> labels;

    int size() const { return static_cast<int>(labels.size()); }
    bool empty() const { return labels.empty(); }

    bool operator==(const PathSequence&) const = default;
};

/// Serializes a vertex path against its graph's label maps. A graph with
/// edge labels yields (l(v1), -w(e12), l(v2), ..., l(vk)); one without yields
/// (l(v1), ..., l(vk)). Throws MissingEdgeLabelError when the graph claims
/// edge labels but an edge on the path has none.
PathSequence serialize_path(const Graph& graph, const VertexPath& path);

struct PathSequenceHash {
    std::size_t operator()(const PathSequence& s) const {
        // FNV-1a over the label words
        std::size_t h = 14695981039346656037ull;
        for (std::int32_t v : s.labels) {
            h ^= static_cast<std::uint32_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace lcsk
