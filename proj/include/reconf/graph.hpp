#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace reconf {

using VertexId = std::uint32_t;

namespace detail {

/// Vertex naming shared by Graph and Digraph. Vertices keep insertion order.
class VertexNames {
public:
    VertexId add(std::string name);
    std::size_t size() const { return names_.size(); }
    const std::string& name(VertexId v) const;
    std::optional<VertexId> find(std::string_view name) const;
    VertexId at(std::string_view name) const;
    const std::vector<std::string>& all() const { return names_; }

    friend bool operator==(const VertexNames& a, const VertexNames& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
};

} // namespace detail

/// Undirected graph; loops allowed, parallel edges are collapsed.
class Graph {
public:
    Graph() = default;
    explicit Graph(const std::vector<std::string>& names);

    VertexId add_vertex(std::string name);
    /// Returns false when the edge was already present.
    bool add_edge(VertexId u, VertexId v);

    std::size_t num_vertices() const { return names_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    bool has_edge(VertexId u, VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    bool has_loops() const;

    /// Edges as (u, v) with u <= v, sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    const std::string& name(VertexId v) const { return names_.name(v); }
    std::optional<VertexId> find(std::string_view name) const { return names_.find(name); }
    VertexId at(std::string_view name) const { return names_.at(name); }
    const std::vector<std::string>& names() const { return names_.all(); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.names_ == b.names_ && a.adj_ == b.adj_; }

private:
    detail::VertexNames names_;
    std::vector<std::vector<VertexId>> adj_;
    std::size_t num_edges_ = 0;
};

/// Directed graph; loops and antiparallel arcs allowed, duplicate arcs collapsed.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(const std::vector<std::string>& names);

    VertexId add_vertex(std::string name);
    bool add_arc(VertexId from, VertexId to);

    std::size_t num_vertices() const { return names_.size(); }
    std::size_t num_arcs() const { return num_arcs_; }
    bool has_arc(VertexId from, VertexId to) const;
    const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_.at(v); }
    const std::vector<VertexId>& in_neighbors(VertexId v) const { return in_.at(v); }
    bool has_loops() const;

    /// Arcs sorted by (from, to).
    std::vector<std::pair<VertexId, VertexId>> arcs() const;

    const std::string& name(VertexId v) const { return names_.name(v); }
    std::optional<VertexId> find(std::string_view name) const { return names_.find(name); }
    VertexId at(std::string_view name) const { return names_.at(name); }
    const std::vector<std::string>& names() const { return names_.all(); }

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.names_ == b.names_ && a.out_ == b.out_; }

private:
    detail::VertexNames names_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::size_t num_arcs_ = 0;
};

/// Each undirected edge becomes a pair of opposite arcs (a loop becomes one arc).
Digraph symmetric_digraph(const Graph& g);

/// Forgets arc directions.
Graph underlying_graph(const Digraph& d);

/// Induced subgraph on `keep` (ids in the result follow the order of `keep`).
Digraph induced_subdigraph(const Digraph& d, const std::vector<VertexId>& keep);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

bool is_forest(const Graph& g);

} // namespace reconf
