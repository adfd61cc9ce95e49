#include "reconf/tree_recolor.hpp"

#include "reconf/adapters.hpp"
#include "reconf/error.hpp"

#include <algorithm>
#include <deque>

namespace reconf {

namespace {

struct Recolor {
    VertexId vertex;
    std::uint32_t from;
    std::uint32_t to;
};

void check_inputs(const Graph& t, VertexId root, const Configuration& alpha, const Configuration& beta,
                  const Graph& h)
{
    if (!is_forest(t))
        throw ValidationError("tree recoloring needs a forest");
    if (root >= t.num_vertices())
        throw ValidationError("root is not a vertex of the tree");
    const auto td = symmetric_digraph(t);
    const auto hd = symmetric_digraph(h);
    if (!is_h_coloring(td, hd, alpha))
        throw ValidationError("initial coloring is not an H-coloring");
    if (!is_h_coloring(td, hd, beta))
        throw ValidationError("target coloring is not an H-coloring");
}

/// Component roots: `root` for its component, else the smallest vertex.
std::vector<std::pair<VertexId, std::vector<VertexId>>> rooted_components(const Graph& t, VertexId root)
{
    std::vector<std::pair<VertexId, std::vector<VertexId>>> out;
    for (auto& comp : connected_components(t)) {
        VertexId r = std::binary_search(comp.begin(), comp.end(), root) ? root : comp.front();
        out.emplace_back(r, std::move(comp));
    }
    return out;
}

struct Levels {
    std::vector<std::vector<VertexId>> by_depth; // T_0, T_1, ...
    std::vector<std::optional<VertexId>> parent;
};

Levels bfs_levels(const Graph& t, VertexId r)
{
    Levels l;
    l.parent.assign(t.num_vertices(), std::nullopt);
    std::vector<bool> seen(t.num_vertices(), false);
    seen[r] = true;
    l.by_depth.push_back({r});
    while (true) {
        std::vector<VertexId> next;
        for (auto v : l.by_depth.back())
            for (auto w : t.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    l.parent[w] = v;
                    next.push_back(w);
                }
        if (next.empty())
            break;
        std::sort(next.begin(), next.end());
        l.by_depth.push_back(std::move(next));
    }
    return l;
}

/// Moves taking `c` to the two-color normal form of one component: levels
/// of the same parity share one color. Applies them to `c`.
std::vector<Recolor> normalize(const Levels& l, Configuration& c)
{
    std::vector<Recolor> moves;
    auto recolor = [&](VertexId v, std::uint32_t color) {
        if (c[v] != color) {
            moves.push_back({v, c[v], color});
            c[v] = color;
        }
    };
    const auto depth = l.by_depth.size();
    for (std::size_t level = depth; level-- > 2;)
        for (std::size_t j = level; j < depth; j += 2)
            for (auto v : l.by_depth[j])
                recolor(v, c[*l.parent[*l.parent[v]]]);
    if (depth >= 2) {
        // Make T_1 uniform; each T_1 subtree alternates between the root
        // color and the color of its top vertex.
        const auto target = c[l.by_depth[1].front()];
        for (std::size_t j = 1; j < depth; j += 2)
            for (auto v : l.by_depth[j])
                recolor(v, target);
    }
    return moves;
}

void apply_and_record(ReconfigurationSequence& seq, Configuration& current, VertexId v, std::uint32_t color)
{
    if (current[v] == color)
        return;
    current[v] = color;
    seq.steps.push_back(current);
}

} // namespace

std::optional<std::vector<VertexId>> shortest_even_walk(const Graph& h, VertexId a, VertexId b)
{
    if (a >= h.num_vertices() || b >= h.num_vertices())
        throw ValidationError("walk endpoints must be vertices of H");
    // States (vertex, parity of the walk length so far).
    const auto n = h.num_vertices();
    std::vector<std::optional<std::size_t>> prev(2 * n);
    std::vector<bool> seen(2 * n, false);
    std::deque<std::size_t> queue{2 * a};
    seen[2 * a] = true;
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        if (s == 2 * b) {
            std::vector<VertexId> walk;
            for (std::optional<std::size_t> x = s; x; x = prev[*x])
                walk.push_back(static_cast<VertexId>(*x / 2));
            std::reverse(walk.begin(), walk.end());
            return walk;
        }
        for (auto w : h.neighbors(static_cast<VertexId>(s / 2))) {
            auto next = 2 * w + (1 - s % 2);
            if (!seen[next]) {
                seen[next] = true;
                prev[next] = s;
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

bool even_walk_exists(const Graph& h, VertexId a, VertexId b)
{
    if (a >= h.num_vertices() || b >= h.num_vertices())
        throw ValidationError("walk endpoints must be vertices of H");
    if (a == b)
        return true;
    // Two-color the component of a; any loop or odd cycle makes it non-bipartite.
    std::vector<int> side(h.num_vertices(), -1);
    std::deque<VertexId> queue{a};
    side[a] = 0;
    bool bipartite = true;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : h.neighbors(v)) {
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                queue.push_back(w);
            } else if (side[w] == side[v]) {
                bipartite = false;
            }
        }
    }
    if (side[b] < 0)
        return false;
    return !bipartite || side[a] == side[b];
}

bool tree_reach(const Graph& t, VertexId root, const Configuration& alpha, const Configuration& beta, const Graph& h)
{
    check_inputs(t, root, alpha, beta, h);
    for (const auto& [r, comp] : rooted_components(t, root))
        if (comp.size() >= 2 && !even_walk_exists(h, alpha[r], beta[r]))
            return false;
    return true;
}

std::optional<ReconfigurationSequence> tree_reconfigure_sequence(const Graph& t, VertexId root,
                                                                 const Configuration& alpha,
                                                                 const Configuration& beta, const Graph& h)
{
    if (!tree_reach(t, root, alpha, beta, h))
        return std::nullopt;
    ReconfigurationSequence seq;
    seq.steps.push_back(alpha);
    Configuration current = alpha;
    for (const auto& [r, comp] : rooted_components(t, root)) {
        if (comp.size() == 1) {
            apply_and_record(seq, current, r, beta[r]);
            continue;
        }
        const auto levels = bfs_levels(t, r);
        Configuration scratch = current;
        for (const auto& m : normalize(levels, scratch))
            apply_and_record(seq, current, m.vertex, m.to);
        Configuration beta_norm = beta;
        const auto back_moves = normalize(levels, beta_norm);

        std::vector<VertexId> even, odd;
        for (std::size_t j = 0; j < levels.by_depth.size(); ++j)
            for (auto v : levels.by_depth[j])
                (j % 2 == 0 ? even : odd).push_back(v);
        auto walk = *shortest_even_walk(h, current[r], beta_norm[r]);
        for (std::size_t k = 1; k < walk.size(); ++k)
            for (auto v : (k % 2 == 1 ? odd : even))
                apply_and_record(seq, current, v, walk[k]);
        for (auto v : odd)
            apply_and_record(seq, current, v, beta_norm[v]);

        for (auto it = back_moves.rbegin(); it != back_moves.rend(); ++it)
            apply_and_record(seq, current, it->vertex, it->from);
    }
    return seq;
}

} // namespace reconf
