#include "reconf/reductions.hpp"

#include "reconf/adapters.hpp"
#include "reconf/error.hpp"
#include "reconf/hword.hpp"

#include <algorithm>

namespace reconf {

namespace {

void check_endpoints(const Digraph& h, const Word& s, const Word& t)
{
    if (s.empty())
        throw DomainError("words must be nonempty");
    if (s.size() != t.size())
        throw ValidationError("words must have equal length");
    if (!is_h_word(s, h) || !is_h_word(t, h))
        throw ValidationError("both words must be H-words");
}

} // namespace

// Shortest paths ------------------------------------------------------------

ShortestPathInstance to_shortest_path(const Digraph& h, const Word& s, const Word& t)
{
    check_endpoints(h, s, t);
    ShortestPathInstance inst;
    const auto n = s.size();
    const auto k = h.num_vertices();
    inst.length = n;
    inst.num_symbols = k;
    auto& g = inst.graph;
    inst.source = g.add_vertex("v0");
    inst.layers.buckets.push_back({inst.source});
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<VertexId> layer;
        for (VertexId a = 0; a < k; ++a)
            layer.push_back(g.add_vertex("v" + std::to_string(i) + "^" + h.name(a)));
        inst.layers.buckets.push_back(std::move(layer));
    }
    inst.sink = g.add_vertex("v" + std::to_string(n + 1));
    inst.layers.buckets.push_back({inst.sink});
    auto v = [&](std::size_t i, VertexId a) { return static_cast<VertexId>(1 + (i - 1) * k + a); };
    for (VertexId a = 0; a < k; ++a) {
        g.add_edge(inst.source, v(1, a));
        g.add_edge(v(n, a), inst.sink);
    }
    for (std::size_t i = 1; i < n; ++i)
        for (auto [a, b] : h.arcs())
            g.add_edge(v(i, a), v(i + 1, b));
    inst.path_a = word_to_path(s, inst);
    inst.path_b = word_to_path(t, inst);
    return inst;
}

Configuration word_to_path(const Word& w, const ShortestPathInstance& inst)
{
    if (w.size() != inst.length)
        throw ValidationError("word length does not match the instance");
    Configuration p{inst.source};
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].id >= inst.num_symbols)
            throw ValidationError("symbol outside H");
        p.push_back(static_cast<std::uint32_t>(1 + i * inst.num_symbols + w[i].id));
    }
    p.push_back(inst.sink);
    for (std::size_t i = 1; i + 2 < p.size(); ++i)
        if (!inst.graph.has_edge(p[i], p[i + 1]))
            throw ValidationError("word is not a walk of H");
    return p;
}

Word path_to_word(const Configuration& p, const ShortestPathInstance& inst)
{
    if (p.size() != inst.length + 2 || p.front() != inst.source || p.back() != inst.sink)
        throw DecodeError("not a source-sink path with one vertex per layer");
    Word w;
    for (std::size_t i = 1; i <= inst.length; ++i) {
        const auto lo = 1 + (i - 1) * inst.num_symbols;
        if (p[i] < lo || p[i] >= lo + inst.num_symbols)
            throw DecodeError("path vertex " + std::to_string(i) + " is outside layer " + std::to_string(i));
        w.push_back(Symbol{static_cast<std::uint32_t>(p[i] - lo)});
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!inst.graph.has_edge(p[i], p[i + 1]))
            throw DecodeError("consecutive path vertices are not adjacent");
    return w;
}

ConfigurationSpace instance_space(const ShortestPathInstance& inst)
{
    return shortest_path_space(inst.graph, inst.source, inst.sink, inst.path_a, inst.path_b);
}

// Maximum independent sets --------------------------------------------------

MaxISInstance to_mis(const Digraph& h, const Word& s, const Word& t)
{
    check_endpoints(h, s, t);
    MaxISInstance inst;
    const auto n = s.size();
    const auto k = h.num_vertices();
    inst.length = n;
    inst.num_symbols = k;
    auto& g = inst.graph;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<VertexId> clique;
        for (VertexId a = 0; a < k; ++a)
            clique.push_back(g.add_vertex("v" + std::to_string(i) + "^" + h.name(a)));
        for (std::size_t x = 0; x < clique.size(); ++x)
            for (std::size_t y = x + 1; y < clique.size(); ++y)
                g.add_edge(clique[x], clique[y]);
        inst.cliques.buckets.push_back(std::move(clique));
    }
    auto v = [&](std::size_t i, VertexId a) { return static_cast<VertexId>((i - 1) * k + a); };
    for (std::size_t i = 1; i < n; ++i)
        for (VertexId a = 0; a < k; ++a)
            for (VertexId b = 0; b < k; ++b)
                if (!h.has_arc(a, b))
                    g.add_edge(v(i, a), v(i + 1, b));
    inst.set_a = word_to_is(s, inst);
    inst.set_b = word_to_is(t, inst);
    return inst;
}

Configuration word_to_is(const Word& w, const MaxISInstance& inst)
{
    if (w.size() != inst.length)
        throw ValidationError("word length does not match the instance");
    Configuration set;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].id >= inst.num_symbols)
            throw ValidationError("symbol outside H");
        set.push_back(static_cast<std::uint32_t>(i * inst.num_symbols + w[i].id));
    }
    for (std::size_t i = 0; i + 1 < set.size(); ++i)
        if (inst.graph.has_edge(set[i], set[i + 1]))
            throw ValidationError("word is not a walk of H");
    return set;
}

Word is_to_word(const Configuration& set, const MaxISInstance& inst)
{
    if (set.size() != inst.length)
        throw DecodeError("independent set must have one vertex per clique");
    Word w;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] < i * inst.num_symbols || set[i] >= (i + 1) * inst.num_symbols)
            throw DecodeError("independent set must have one vertex per clique, in clique order");
        w.push_back(Symbol{static_cast<std::uint32_t>(set[i] - i * inst.num_symbols)});
    }
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (inst.graph.has_edge(set[i], set[j]))
                throw DecodeError("vertex set is not independent");
    return w;
}

ConfigurationSpace instance_space(const MaxISInstance& inst)
{
    return max_is_space(inst.graph, inst.length, inst.set_a, inst.set_b);
}

// List coloring on a chain of onions ----------------------------------------

VertexId ListColoringInstance::hub(std::size_t i) const
{
    return static_cast<VertexId>(i - 1);
}

VertexId ListColoringInstance::onion(std::size_t i, std::size_t j) const
{
    return static_cast<VertexId>(length + (i - 1) * forbidden.size() + (j - 1));
}

ListColoringInstance to_list_coloring(const Digraph& h, const Word& s, const Word& t)
{
    check_endpoints(h, s, t);
    ListColoringInstance inst;
    const auto n = s.size();
    const auto k = static_cast<std::uint32_t>(h.num_vertices());
    inst.length = n;
    inst.num_symbols = k;
    inst.num_colors = 2 * k;
    for (VertexId a = 0; a < k; ++a)
        inst.color_names.push_back(h.name(a));
    for (VertexId a = 0; a < k; ++a)
        inst.color_names.push_back(h.name(a) + "'");
    // Forbidden pairs in lexicographic order give the onion indices.
    for (VertexId a = 0; a < k; ++a)
        for (VertexId b = 0; b < k; ++b)
            if (!h.has_arc(a, b))
                inst.forbidden.emplace_back(a, b);
    const auto width = inst.forbidden.size();

    auto& g = inst.graph;
    std::vector<std::uint32_t> plain(k), primed(k);
    for (std::uint32_t a = 0; a < k; ++a) {
        plain[a] = a;
        primed[a] = k + a;
    }
    for (std::size_t i = 1; i <= n; ++i) {
        g.add_vertex("u" + std::to_string(i));
        inst.lists.push_back(i % 2 == 0 ? plain : primed);
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j <= width; ++j) {
            auto v = g.add_vertex("v" + std::to_string(i) + "^" + std::to_string(j));
            g.add_edge(inst.hub(i), v);
            g.add_edge(v, inst.hub(i + 1));
            auto [a, b] = inst.forbidden[j - 1];
            std::vector<std::uint32_t> list = i % 2 == 0 ? std::vector<std::uint32_t>{a, k + b}
                                                         : std::vector<std::uint32_t>{k + a, b};
            std::sort(list.begin(), list.end());
            inst.lists.push_back(std::move(list));
        }
    for (std::size_t i = 1; i <= n; ++i) {
        inst.arrangement.buckets.push_back({inst.hub(i)});
        if (i < n && width > 0) {
            std::vector<VertexId> onions;
            for (std::size_t j = 1; j <= width; ++j)
                onions.push_back(inst.onion(i, j));
            inst.arrangement.buckets.push_back(std::move(onions));
        }
    }
    inst.coloring_a = extend_word_to_list_coloring(s, inst);
    inst.coloring_b = extend_word_to_list_coloring(t, inst);
    return inst;
}

namespace {

std::uint32_t hub_color(const ListColoringInstance& inst, std::size_t i, Symbol a)
{
    return i % 2 == 0 ? a.id : static_cast<std::uint32_t>(inst.num_symbols) + a.id;
}

/// First list color of onion v_i^j avoiding both hub colors.
std::optional<std::uint32_t> canonical_onion_color(const ListColoringInstance& inst, const Configuration& c,
                                                   std::size_t i, std::size_t j)
{
    for (auto color : inst.lists[inst.onion(i, j)])
        if (color != c[inst.hub(i)] && color != c[inst.hub(i + 1)])
            return color;
    return std::nullopt;
}

} // namespace

Configuration extend_word_to_list_coloring(const Word& w, const ListColoringInstance& inst)
{
    if (w.size() != inst.length)
        throw ValidationError("word length does not match the instance");
    for (auto a : w)
        if (a.id >= inst.num_symbols)
            throw ValidationError("symbol outside H");
    Configuration c(inst.graph.num_vertices(), 0);
    for (std::size_t i = 1; i <= inst.length; ++i)
        c[inst.hub(i)] = hub_color(inst, i, w[i - 1]);
    for (std::size_t i = 1; i < inst.length; ++i)
        for (std::size_t j = 1; j <= inst.forbidden.size(); ++j) {
            auto color = canonical_onion_color(inst, c, i, j);
            if (!color)
                throw ValidationError("word is not an H-word: forbidden pair at positions " + std::to_string(i) +
                                      "," + std::to_string(i + 1));
            c[inst.onion(i, j)] = *color;
        }
    return c;
}

Word list_coloring_to_word(const Configuration& c, const ListColoringInstance& inst)
{
    if (c.size() != inst.graph.num_vertices())
        throw DecodeError("coloring has the wrong number of vertices");
    for (VertexId v = 0; v < c.size(); ++v)
        if (!std::binary_search(inst.lists[v].begin(), inst.lists[v].end(), c[v]))
            throw DecodeError("vertex " + inst.graph.name(v) + " has a color outside its list");
    for (auto [u, v] : inst.graph.edges())
        if (c[u] == c[v])
            throw DecodeError("coloring is not proper");
    Word w;
    for (std::size_t i = 1; i <= inst.length; ++i)
        w.push_back(Symbol{static_cast<std::uint32_t>(c[inst.hub(i)] % inst.num_symbols)});
    return w;
}

ConfigurationSpace instance_space(const ListColoringInstance& inst)
{
    return list_coloring_space(inst.graph, inst.num_colors, inst.lists, inst.coloring_a, inst.coloring_b);
}

std::vector<Configuration> lift_word_sequence(const std::vector<Word>& words, const ListColoringInstance& inst)
{
    if (words.empty())
        throw ValidationError("empty word sequence");
    std::vector<Configuration> out{extend_word_to_list_coloring(words.front(), inst)};
    auto push_if_changed = [&](const Configuration& c) {
        if (c != out.back())
            out.push_back(c);
    };
    for (std::size_t k = 0; k + 1 < words.size(); ++k) {
        const auto& from = words[k];
        const auto& to = words[k + 1];
        if (from.size() != to.size())
            throw ValidationError("words of the sequence must have equal length");
        std::size_t changed = from.size();
        for (std::size_t p = 0; p < from.size(); ++p)
            if (from[p] != to[p]) {
                if (changed != from.size())
                    throw ValidationError("consecutive words differ in more than one symbol");
                changed = p;
            }
        if (changed == from.size())
            continue;
        extend_word_to_list_coloring(to, inst); // rejects non-H-words
        const std::size_t i = changed + 1;
        const auto new_color = hub_color(inst, i, to[changed]);
        std::vector<std::pair<std::size_t, std::size_t>> adjacent; // onions (i', j) touching u_i
        for (std::size_t j = 1; j <= inst.forbidden.size(); ++j) {
            if (i > 1)
                adjacent.emplace_back(i - 1, j);
            if (i < inst.length)
                adjacent.emplace_back(i, j);
        }
        auto c = out.back();
        for (auto [oi, j] : adjacent) {
            const auto v = inst.onion(oi, j);
            if (c[v] != new_color)
                continue;
            const auto other = oi == i ? inst.hub(oi + 1) : inst.hub(oi);
            bool moved = false;
            for (auto color : inst.lists[v])
                if (color != new_color && color != c[other]) {
                    c[v] = color;
                    moved = true;
                    break;
                }
            if (!moved)
                throw ValidationError("onion vertex " + inst.graph.name(v) + " cannot make room");
            push_if_changed(c);
        }
        c[inst.hub(i)] = new_color;
        push_if_changed(c);
        for (auto [oi, j] : adjacent) {
            c[inst.onion(oi, j)] = *canonical_onion_color(inst, c, oi, j);
            push_if_changed(c);
        }
    }
    return out;
}

// Plain k-coloring via clique gadgets ---------------------------------------

KColoringInstance list_to_plain(const Graph& g, std::uint32_t k, const std::vector<std::vector<std::uint32_t>>& lists,
                                const Configuration& alpha, const Configuration& beta)
{
    if (lists.size() != g.num_vertices())
        throw ValidationError("expected one list per vertex");
    KColoringInstance inst;
    inst.k = k;
    inst.original_vertices = g.num_vertices();
    inst.graph = g;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<VertexId> clique;
        for (std::uint32_t c = 0; c < k; ++c)
            clique.push_back(inst.graph.add_vertex(g.name(v) + "/c" + std::to_string(c)));
        for (std::size_t x = 0; x < clique.size(); ++x)
            for (std::size_t y = x + 1; y < clique.size(); ++y)
                inst.graph.add_edge(clique[x], clique[y]);
        for (std::uint32_t c = 0; c < k; ++c)
            if (std::find(lists[v].begin(), lists[v].end(), c) == lists[v].end())
                inst.graph.add_edge(v, clique[c]);
    }
    inst.coloring_a = extend_list_coloring(alpha, inst);
    inst.coloring_b = extend_list_coloring(beta, inst);
    return inst;
}

KColoringInstance list_to_plain(const ListColoringInstance& inst)
{
    return list_to_plain(inst.graph, inst.num_colors, inst.lists, inst.coloring_a, inst.coloring_b);
}

Configuration extend_list_coloring(const Configuration& c, const KColoringInstance& inst)
{
    if (c.size() != inst.original_vertices)
        throw ValidationError("coloring has the wrong number of vertices");
    Configuration out = c;
    for (std::size_t v = 0; v < inst.original_vertices; ++v)
        for (std::uint32_t color = 0; color < inst.k; ++color)
            out.push_back(color);
    return out;
}

Configuration restrict_coloring(const Configuration& c, const KColoringInstance& inst)
{
    if (c.size() != inst.graph.num_vertices())
        throw DecodeError("coloring has the wrong number of vertices");
    return Configuration(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(inst.original_vertices));
}

ConfigurationSpace instance_space(const KColoringInstance& inst)
{
    return k_coloring_space(inst.graph, inst.k, inst.coloring_a, inst.coloring_b);
}

} // namespace reconf
