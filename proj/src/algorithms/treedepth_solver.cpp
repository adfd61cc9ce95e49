#include "reconf/treedepth_solver.hpp"

#include "reconf/adapters.hpp"
#include "reconf/error.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace reconf {

namespace {

/// Interned subtree code: (label, arcs to each ancestor from the root down,
/// sorted distinct child codes).
using CodeKey = std::tuple<std::uint32_t, std::vector<std::uint8_t>, std::vector<std::size_t>>;

} // namespace

CoreWitness treedepth_core(const Digraph& g, const std::vector<std::uint32_t>& labels, const RootedForest& forest)
{
    const auto n = g.num_vertices();
    if (labels.size() != n || forest.size() != n)
        throw ValidationError("labels and forest must cover every vertex");
    if (g.has_loops())
        throw ValidationError("treedepth solver needs a loopless digraph");
    if (!validate_forest_closure(underlying_graph(g), forest))
        throw ValidationError("graph is not contained in the closure of the forest");

    const auto children = forest.children();
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v)
        order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return forest.depth(a) > forest.depth(b); });

    std::map<CodeKey, std::size_t> interned;
    std::vector<std::size_t> code(n);
    for (auto v : order) {
        std::vector<std::uint8_t> pattern;
        for (auto a : forest.ancestors(v))
            pattern.push_back(static_cast<std::uint8_t>((g.has_arc(v, a) ? 1 : 0) | (g.has_arc(a, v) ? 2 : 0)));
        std::vector<std::size_t> child_codes;
        for (auto c : children[v])
            child_codes.push_back(code[c]);
        std::sort(child_codes.begin(), child_codes.end());
        child_codes.erase(std::unique(child_codes.begin(), child_codes.end()), child_codes.end());
        auto key = CodeKey{labels[v], std::move(pattern), std::move(child_codes)};
        code[v] = interned.emplace(std::move(key), interned.size()).first->second;
    }

    // Keep the first root, and the first child of each kept vertex, per code.
    std::vector<bool> kept(n, false);
    std::vector<std::optional<VertexId>> mu(n);
    std::map<std::size_t, VertexId> kept_root;
    for (auto r : forest.roots()) {
        auto [it, fresh] = kept_root.emplace(code[r], r);
        kept[r] = fresh;
        mu[r] = it->second;
    }
    // Parents are processed before children.
    std::vector<VertexId> top_down(order.rbegin(), order.rend());
    for (auto v : top_down) {
        std::map<std::size_t, VertexId> kept_child;
        if (kept[v])
            for (auto c : children[v])
                if (kept_child.emplace(code[c], c).second)
                    kept[c] = true;
    }
    for (auto v : top_down) {
        if (!forest.parent(v))
            continue;
        if (kept[v]) {
            mu[v] = v;
            continue;
        }
        const auto image_parent = *mu[*forest.parent(v)];
        for (auto c : children[image_parent])
            if (kept[c] && code[c] == code[v]) {
                mu[v] = c;
                break;
            }
        if (!mu[v])
            throw std::logic_error("subtree code has no kept representative");
    }

    CoreWitness w;
    for (VertexId v = 0; v < n; ++v) {
        if (kept[v])
            w.core_vertices.push_back(v);
        w.mu.push_back(*mu[v]);
    }
    return w;
}

bool verify_core(const Digraph& g, const std::vector<std::uint32_t>& labels, const CoreWitness& w)
{
    const auto n = g.num_vertices();
    if (w.mu.size() != n || labels.size() != n)
        return false;
    if (!std::is_sorted(w.core_vertices.begin(), w.core_vertices.end()) ||
        std::adjacent_find(w.core_vertices.begin(), w.core_vertices.end()) != w.core_vertices.end())
        return false;
    for (VertexId v = 0; v < n; ++v) {
        const auto m = w.mu[v];
        if (m >= n || !std::binary_search(w.core_vertices.begin(), w.core_vertices.end(), m))
            return false;
        if (labels[m] != labels[v])
            return false;
    }
    for (auto [u, v] : g.arcs())
        if (!g.has_arc(w.mu[u], w.mu[v]))
            return false;
    return true;
}

TreedepthReachResult treedepth_reach(const Digraph& g, const RootedForest& forest, const Configuration& alpha,
                                     const Configuration& beta, const Digraph& h, const SearchLimits& limits)
{
    if (g.has_loops())
        throw ValidationError("treedepth solver needs a loopless digraph");
    if (!is_h_coloring(g, h, alpha))
        throw ValidationError("initial coloring is not an H-coloring");
    if (!is_h_coloring(g, h, beta))
        throw ValidationError("target coloring is not an H-coloring");
    const auto n = g.num_vertices();
    std::vector<std::uint32_t> labels(n);
    for (VertexId v = 0; v < n; ++v)
        labels[v] = static_cast<std::uint32_t>(alpha[v] * h.num_vertices() + beta[v]);

    TreedepthReachResult result;
    result.core = treedepth_core(g, labels, forest);
    const auto& a = result.core.core_vertices;
    Configuration alpha_a, beta_a;
    for (auto v : a) {
        alpha_a.push_back(alpha[v]);
        beta_a.push_back(beta[v]);
    }
    auto search = bfs_reach(h_coloring_space(induced_subdigraph(g, a), h, alpha_a, beta_a), limits);
    result.stats = search.stats;
    result.reachable = search.reachable();
    if (!result.reachable)
        return result;

    // Lift: a core move at a[i] recolors its whole preimage, one vertex at a time.
    std::vector<std::vector<VertexId>> preimage(a.size());
    for (VertexId v = 0; v < n; ++v)
        preimage[static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), result.core.mu[v]) - a.begin())]
            .push_back(v);
    ReconfigurationSequence lifted;
    lifted.steps.push_back(alpha);
    Configuration current = alpha;
    const auto& steps = search.sequence->steps;
    for (std::size_t k = 0; k + 1 < steps.size(); ++k)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (steps[k][i] != steps[k + 1][i])
                for (auto v : preimage[i]) {
                    current[v] = steps[k + 1][i];
                    lifted.steps.push_back(current);
                }
    result.sequence = std::move(lifted);
    result.stats.moves = result.sequence->moves();
    return result;
}

} // namespace reconf
