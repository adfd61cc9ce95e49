#include "reconf/layout.hpp"

#include "reconf/error.hpp"

#include <algorithm>
#include <optional>

namespace reconf {

std::size_t BucketArrangement::max_bucket_size() const
{
    std::size_t best = 0;
    for (const auto& b : buckets)
        best = std::max(best, b.size());
    return best;
}

namespace {

std::vector<std::size_t> bucket_index(const Graph& g, const BucketArrangement& a)
{
    std::vector<std::optional<std::size_t>> index(g.num_vertices());
    for (std::size_t i = 0; i < a.buckets.size(); ++i)
        for (auto v : a.buckets[i]) {
            if (v >= g.num_vertices())
                throw ValidationError("bucket arrangement names a vertex outside the graph");
            if (index[v])
                throw ValidationError("vertex '" + g.name(v) + "' appears in more than one bucket");
            index[v] = i;
        }
    std::vector<std::size_t> out(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!index[v])
            throw ValidationError("vertex '" + g.name(v) + "' is missing from the bucket arrangement");
        out[v] = *index[v];
    }
    return out;
}

} // namespace

bool verify_bucket_arrangement(const Graph& g, const BucketArrangement& a)
{
    auto index = bucket_index(g, a);
    for (auto [u, v] : g.edges()) {
        auto lo = std::min(index[u], index[v]);
        auto hi = std::max(index[u], index[v]);
        if (hi - lo > 1)
            return false;
    }
    return true;
}

std::size_t bandwidth_of_layout(const Graph& g, const std::vector<std::size_t>& position)
{
    if (position.size() != g.num_vertices())
        throw ValidationError("layout must assign a position to every vertex");
    auto sorted = position;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("layout is not injective");
    std::size_t width = 0;
    for (auto [u, v] : g.edges()) {
        auto a = position[u], b = position[v];
        width = std::max(width, a > b ? a - b : b - a);
    }
    return width;
}

std::vector<std::size_t> bucket_layout(const Graph& g, const BucketArrangement& a)
{
    bucket_index(g, a);
    std::vector<std::size_t> position(g.num_vertices());
    std::size_t next = 1;
    for (const auto& bucket : a.buckets)
        for (auto v : bucket)
            position[v] = next++;
    return position;
}

} // namespace reconf
