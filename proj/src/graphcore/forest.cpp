#include "reconf/forest.hpp"

#include "reconf/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

namespace reconf {

RootedForest::RootedForest(std::vector<std::optional<VertexId>> parent)
    : parent_(std::move(parent)), depth_(parent_.size(), 0)
{
    const auto n = parent_.size();
    for (VertexId v = 0; v < n; ++v)
        if (parent_[v] && (*parent_[v] >= n || *parent_[v] == v))
            throw ValidationError("forest parent of vertex " + std::to_string(v) + " is invalid");
    for (VertexId s = 0; s < n; ++s) {
        if (depth_[s])
            continue;
        std::vector<VertexId> chain;
        VertexId v = s;
        while (true) {
            chain.push_back(v);
            if (chain.size() > n)
                throw ValidationError("forest parent map contains a cycle");
            if (!parent_[v] || depth_[*parent_[v]])
                break;
            v = *parent_[v];
        }
        std::size_t d = parent_[v] ? depth_[*parent_[v]] : 0;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            depth_[*it] = ++d;
    }
}

std::vector<VertexId> RootedForest::roots() const
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < parent_.size(); ++v)
        if (!parent_[v])
            out.push_back(v);
    return out;
}

std::vector<std::vector<VertexId>> RootedForest::children() const
{
    std::vector<std::vector<VertexId>> out(parent_.size());
    for (VertexId v = 0; v < parent_.size(); ++v)
        if (parent_[v])
            out[*parent_[v]].push_back(v);
    return out;
}

std::size_t RootedForest::height() const
{
    std::size_t h = 0;
    for (auto d : depth_)
        h = std::max(h, d);
    return h;
}

bool RootedForest::is_ancestor(VertexId ancestor, VertexId v) const
{
    auto p = parent_.at(v);
    while (p) {
        if (*p == ancestor)
            return true;
        p = parent_[*p];
    }
    return false;
}

std::vector<VertexId> RootedForest::ancestors(VertexId v) const
{
    std::vector<VertexId> out;
    auto p = parent_.at(v);
    while (p) {
        out.push_back(*p);
        p = parent_[*p];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

bool validate_forest_closure(const Graph& g, const RootedForest& f)
{
    if (f.size() < g.num_vertices())
        throw ValidationError("forest does not cover every vertex of the graph");
    for (auto [u, v] : g.edges()) {
        if (u == v)
            continue;
        if (!f.is_ancestor(u, v) && !f.is_ancestor(v, u))
            return false;
    }
    return true;
}

namespace {

class TreedepthSearch {
public:
    explicit TreedepthSearch(const Graph& g) : adj_(g.num_vertices(), 0)
    {
        for (auto [u, v] : g.edges()) {
            adj_[u] |= std::uint32_t{1} << v;
            adj_[v] |= std::uint32_t{1} << u;
        }
    }

    std::vector<std::uint32_t> components(std::uint32_t mask) const
    {
        std::vector<std::uint32_t> out;
        while (mask) {
            std::uint32_t comp = mask & (~mask + 1);
            std::uint32_t frontier = comp;
            while (frontier) {
                std::uint32_t next = 0;
                for (auto f = frontier; f; f &= f - 1)
                    next |= adj_[std::countr_zero(f)];
                next &= mask & ~comp;
                comp |= next;
                frontier = next;
            }
            out.push_back(comp);
            mask &= ~comp;
        }
        return out;
    }

    // Treedepth of a connected vertex set.
    std::size_t solve(std::uint32_t mask)
    {
        if (std::popcount(mask) == 1)
            return 1;
        if (auto it = memo_.find(mask); it != memo_.end())
            return it->second.first;
        // Ties go to the root leaving the smallest largest component.
        std::size_t best = std::numeric_limits<std::size_t>::max();
        int best_spread = std::numeric_limits<int>::max();
        VertexId best_root = 0;
        for (auto m = mask; m; m &= m - 1) {
            auto v = static_cast<VertexId>(std::countr_zero(m));
            std::size_t height = 0;
            int spread = 0;
            for (auto comp : components(mask & ~(std::uint32_t{1} << v))) {
                spread = std::max(spread, std::popcount(comp));
                height = std::max(height, solve(comp));
                if (height + 1 > best)
                    break;
            }
            if (height + 1 < best || (height + 1 == best && spread < best_spread)) {
                best = height + 1;
                best_spread = spread;
                best_root = v;
            }
        }
        memo_.emplace(mask, std::make_pair(best, best_root));
        return best;
    }

    void build(std::uint32_t mask, std::optional<VertexId> parent, std::vector<std::optional<VertexId>>& out)
    {
        for (auto comp : components(mask)) {
            solve(comp);
            VertexId root = std::popcount(comp) == 1 ? static_cast<VertexId>(std::countr_zero(comp))
                                                     : memo_.at(comp).second;
            out[root] = parent;
            build(comp & ~(std::uint32_t{1} << root), root, out);
        }
    }

private:
    std::vector<std::uint32_t> adj_;
    std::unordered_map<std::uint32_t, std::pair<std::size_t, VertexId>> memo_;
};

} // namespace

TreedepthResult exact_treedepth(const Graph& g, std::size_t vertex_limit)
{
    const auto n = g.num_vertices();
    if (n > vertex_limit || n > 31)
        throw ResourceLimitError("exact treedepth is capped at " + std::to_string(std::min<std::size_t>(vertex_limit, 31)) +
                                 " vertices, graph has " + std::to_string(n));
    if (g.has_loops())
        throw ValidationError("treedepth requires a loopless graph");
    TreedepthResult result;
    if (n == 0)
        return result;
    TreedepthSearch search(g);
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    for (auto comp : search.components(all))
        result.treedepth = std::max(result.treedepth, search.solve(comp));
    std::vector<std::optional<VertexId>> parent(n);
    search.build(all, std::nullopt, parent);
    result.forest = RootedForest(std::move(parent));
    return result;
}

} // namespace reconf
