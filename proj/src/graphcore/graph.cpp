#include "reconf/graph.hpp"

#include "reconf/error.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace reconf {

namespace detail {

VertexId VertexNames::add(std::string name)
{
    if (name.empty() || std::any_of(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c) != 0; }))
        throw ValidationError("invalid vertex name '" + name + "'");
    if (index_.count(name))
        throw ValidationError("duplicate vertex '" + name + "'");
    auto id = static_cast<VertexId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    return id;
}

const std::string& VertexNames::name(VertexId v) const
{
    if (v >= names_.size())
        throw ValidationError("vertex id " + std::to_string(v) + " out of range");
    return names_[v];
}

std::optional<VertexId> VertexNames::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

VertexId VertexNames::at(std::string_view name) const
{
    if (auto v = find(name))
        return *v;
    throw ValidationError("unknown vertex '" + std::string(name) + "'");
}

} // namespace detail

namespace {

bool insert_sorted(std::vector<VertexId>& list, VertexId v)
{
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v)
        return false;
    list.insert(it, v);
    return true;
}

bool contains_sorted(const std::vector<VertexId>& list, VertexId v)
{
    return std::binary_search(list.begin(), list.end(), v);
}

} // namespace

Graph::Graph(const std::vector<std::string>& names)
{
    for (const auto& n : names)
        add_vertex(n);
}

VertexId Graph::add_vertex(std::string name)
{
    auto id = names_.add(std::move(name));
    adj_.emplace_back();
    return id;
}

bool Graph::add_edge(VertexId u, VertexId v)
{
    if (u >= num_vertices() || v >= num_vertices())
        throw ValidationError("edge references a missing vertex");
    if (!insert_sorted(adj_[u], v))
        return false;
    if (u != v)
        insert_sorted(adj_[v], u);
    ++num_edges_;
    return true;
}

bool Graph::has_edge(VertexId u, VertexId v) const
{
    return u < num_vertices() && contains_sorted(adj_[u], v);
}

bool Graph::has_loops() const
{
    for (VertexId v = 0; v < num_vertices(); ++v)
        if (has_edge(v, v))
            return true;
    return false;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(num_edges_);
    for (VertexId u = 0; u < num_vertices(); ++u)
        for (auto v : adj_[u])
            if (u <= v)
                out.emplace_back(u, v);
    return out;
}

Digraph::Digraph(const std::vector<std::string>& names)
{
    for (const auto& n : names)
        add_vertex(n);
}

VertexId Digraph::add_vertex(std::string name)
{
    auto id = names_.add(std::move(name));
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

bool Digraph::add_arc(VertexId from, VertexId to)
{
    if (from >= num_vertices() || to >= num_vertices())
        throw ValidationError("arc references a missing vertex");
    if (!insert_sorted(out_[from], to))
        return false;
    insert_sorted(in_[to], from);
    ++num_arcs_;
    return true;
}

bool Digraph::has_arc(VertexId from, VertexId to) const
{
    return from < num_vertices() && contains_sorted(out_[from], to);
}

bool Digraph::has_loops() const
{
    for (VertexId v = 0; v < num_vertices(); ++v)
        if (has_arc(v, v))
            return true;
    return false;
}

std::vector<std::pair<VertexId, VertexId>> Digraph::arcs() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(num_arcs_);
    for (VertexId u = 0; u < num_vertices(); ++u)
        for (auto v : out_[u])
            out.emplace_back(u, v);
    return out;
}

Digraph symmetric_digraph(const Graph& g)
{
    Digraph d(g.names());
    for (auto [u, v] : g.edges()) {
        d.add_arc(u, v);
        d.add_arc(v, u);
    }
    return d;
}

Graph underlying_graph(const Digraph& d)
{
    Graph g(d.names());
    for (auto [u, v] : d.arcs())
        g.add_edge(u, v);
    return g;
}

Digraph induced_subdigraph(const Digraph& d, const std::vector<VertexId>& keep)
{
    Digraph sub;
    std::vector<std::optional<VertexId>> local(d.num_vertices());
    for (auto v : keep) {
        if (local.at(v))
            throw ValidationError("duplicate vertex in induced subgraph selection");
        local[v] = sub.add_vertex(d.name(v));
    }
    for (auto u : keep)
        for (auto v : d.out_neighbors(u))
            if (local[v])
                sub.add_arc(*local[u], *local[v]);
    return sub;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g)
{
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(g.num_vertices(), false);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (seen[s])
            continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            comp.push_back(u);
            for (auto w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_forest(const Graph& g)
{
    if (g.has_loops())
        return false;
    return g.num_edges() + connected_components(g).size() == g.num_vertices();
}

} // namespace reconf
