#pragma once

#include "reconf/graph.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace reconf {

/// Rooted forest over vertex ids 0..n-1.
class RootedForest {
public:
    RootedForest() = default;
    /// Validates acyclicity; throws ValidationError otherwise.
    explicit RootedForest(std::vector<std::optional<VertexId>> parent);

    std::size_t size() const { return parent_.size(); }
    std::optional<VertexId> parent(VertexId v) const { return parent_.at(v); }
    const std::vector<std::optional<VertexId>>& parents() const { return parent_; }
    std::vector<VertexId> roots() const;
    std::vector<std::vector<VertexId>> children() const;

    /// Depth of v; roots have depth 1.
    std::size_t depth(VertexId v) const { return depth_.at(v); }
    /// Number of vertices on the longest root-to-leaf chain (0 when empty).
    std::size_t height() const;

    bool is_ancestor(VertexId ancestor, VertexId v) const;
    /// Ancestors of v from the root down to its parent.
    std::vector<VertexId> ancestors(VertexId v) const;

    friend bool operator==(const RootedForest& a, const RootedForest& b) { return a.parent_ == b.parent_; }

private:
    std::vector<std::optional<VertexId>> parent_;
    std::vector<std::size_t> depth_;
};

/// True iff every edge of g joins a vertex with one of its forest ancestors.
bool validate_forest_closure(const Graph& g, const RootedForest& f);

struct TreedepthResult {
    std::size_t treedepth = 0;
    RootedForest forest;
};

inline constexpr std::size_t default_treedepth_vertex_limit = 20;

/// Exact treedepth by memoised vertex-removal search.
/// Throws ResourceLimitError above `vertex_limit`, ValidationError on loops.
TreedepthResult exact_treedepth(const Graph& g, std::size_t vertex_limit = default_treedepth_vertex_limit);

} // namespace reconf
