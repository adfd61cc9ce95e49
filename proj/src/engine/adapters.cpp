#include "reconf/adapters.hpp"

#include "reconf/error.hpp"

#include <algorithm>
#include <deque>
#include <memory>

namespace reconf {

namespace {

void check_seeds(const ConfigurationSpace& space, const char* what)
{
    if (!space.is_valid(space.initial))
        throw ValidationError(std::string("initial configuration is not a valid ") + what);
    if (!space.is_valid(space.target))
        throw ValidationError(std::string("target configuration is not a valid ") + what);
}

/// Exactly one coordinate differs.
bool differs_in_one(const Configuration& a, const Configuration& b)
{
    if (a.size() != b.size())
        return false;
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        diff += a[i] != b[i];
    return diff == 1;
}

template <class Names>
std::string render_names(const Names& names, const Configuration& c)
{
    std::string out;
    for (auto v : c) {
        if (!out.empty())
            out += ' ';
        out += v < names.size() ? names[v] : "?" + std::to_string(v);
    }
    return out;
}

std::string render_numbers(const Configuration& c)
{
    std::string out;
    for (auto v : c) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(v);
    }
    return out;
}

bool color_fits(const Digraph& g, const Digraph& h, const Configuration& c, VertexId v, std::uint32_t color)
{
    for (auto w : g.out_neighbors(v))
        if (!h.has_arc(color, w == v ? color : c[w]))
            return false;
    for (auto u : g.in_neighbors(v))
        if (u != v && !h.has_arc(c[u], color))
            return false;
    return true;
}

bool list_color_fits(const Graph& g, const Configuration& c, VertexId v, std::uint32_t color)
{
    for (auto w : g.neighbors(v))
        if (w == v || c[w] == color)
            return false;
    return true;
}

} // namespace

bool is_h_coloring(const Digraph& g, const Digraph& h, const Configuration& c)
{
    if (c.size() != g.num_vertices())
        return false;
    for (auto x : c)
        if (x >= h.num_vertices())
            return false;
    for (auto [u, v] : g.arcs())
        if (!h.has_arc(c[u], c[v]))
            return false;
    return true;
}

ConfigurationSpace h_coloring_space(const Digraph& g, const Digraph& h, Configuration alpha, Configuration beta)
{
    auto gp = std::make_shared<const Digraph>(g);
    auto hp = std::make_shared<const Digraph>(h);
    ConfigurationSpace s;
    s.move_name = "recolor";
    s.initial = std::move(alpha);
    s.target = std::move(beta);
    s.is_valid = [gp, hp](const Configuration& c) { return is_h_coloring(*gp, *hp, c); };
    s.neighbors = [gp, hp](const Configuration& c) {
        std::vector<Configuration> out;
        for (VertexId v = 0; v < gp->num_vertices(); ++v)
            for (std::uint32_t color = 0; color < hp->num_vertices(); ++color)
                if (color != c[v] && color_fits(*gp, *hp, c, v, color)) {
                    auto next = c;
                    next[v] = color;
                    out.push_back(std::move(next));
                }
        return out;
    };
    s.is_move = [valid = s.is_valid](const Configuration& a, const Configuration& b) {
        return differs_in_one(a, b) && valid(a) && valid(b);
    };
    s.render = [hp](const Configuration& c) { return render_names(hp->names(), c); };
    check_seeds(s, "H-coloring");
    return s;
}

ConfigurationSpace list_coloring_space(const Graph& g, std::uint32_t num_colors,
                                       std::vector<std::vector<std::uint32_t>> lists, Configuration alpha,
                                       Configuration beta)
{
    if (lists.size() != g.num_vertices())
        throw ValidationError("expected one color list per vertex");
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (!l.empty() && l.back() >= num_colors)
            throw ValidationError("list color out of range");
    }
    auto gp = std::make_shared<const Graph>(g);
    auto lp = std::make_shared<const std::vector<std::vector<std::uint32_t>>>(std::move(lists));
    ConfigurationSpace s;
    s.move_name = "recolor";
    s.initial = std::move(alpha);
    s.target = std::move(beta);
    s.is_valid = [gp, lp](const Configuration& c) {
        if (c.size() != gp->num_vertices())
            return false;
        for (VertexId v = 0; v < c.size(); ++v) {
            const auto& l = (*lp)[v];
            if (!std::binary_search(l.begin(), l.end(), c[v]))
                return false;
        }
        for (auto [u, v] : gp->edges())
            if (u == v || c[u] == c[v])
                return false;
        return true;
    };
    s.neighbors = [gp, lp](const Configuration& c) {
        std::vector<Configuration> out;
        for (VertexId v = 0; v < gp->num_vertices(); ++v)
            for (auto color : (*lp)[v])
                if (color != c[v] && list_color_fits(*gp, c, v, color)) {
                    auto next = c;
                    next[v] = color;
                    out.push_back(std::move(next));
                }
        return out;
    };
    s.is_move = [valid = s.is_valid](const Configuration& a, const Configuration& b) {
        return differs_in_one(a, b) && valid(a) && valid(b);
    };
    s.render = render_numbers;
    check_seeds(s, "list coloring");
    return s;
}

ConfigurationSpace k_coloring_space(const Graph& g, std::uint32_t k, Configuration alpha, Configuration beta)
{
    std::vector<std::uint32_t> all(k);
    for (std::uint32_t i = 0; i < k; ++i)
        all[i] = i;
    return list_coloring_space(g, k, std::vector<std::vector<std::uint32_t>>(g.num_vertices(), all),
                               std::move(alpha), std::move(beta));
}

ConfigurationSpace max_is_space(const Graph& g, std::size_t size, Configuration set_a, Configuration set_b)
{
    auto gp = std::make_shared<const Graph>(g);
    ConfigurationSpace s;
    s.move_name = "token-jump";
    s.initial = std::move(set_a);
    s.target = std::move(set_b);
    s.is_valid = [gp, size](const Configuration& c) {
        if (c.size() != size)
            return false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= gp->num_vertices() || (i > 0 && c[i - 1] >= c[i]))
                return false;
            for (std::size_t j = 0; j <= i; ++j)
                if (gp->has_edge(c[i], c[j]))
                    return false;
        }
        return true;
    };
    s.neighbors = [gp](const Configuration& c) {
        std::vector<Configuration> out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (VertexId y = 0; y < gp->num_vertices(); ++y) {
                if (std::binary_search(c.begin(), c.end(), y) || gp->has_edge(y, y))
                    continue;
                bool ok = true;
                for (std::size_t j = 0; j < c.size() && ok; ++j)
                    ok = j == i || !gp->has_edge(y, c[j]);
                if (!ok)
                    continue;
                auto next = c;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
                next.insert(std::lower_bound(next.begin(), next.end(), y), y);
                out.push_back(std::move(next));
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    s.is_move = [valid = s.is_valid](const Configuration& a, const Configuration& b) {
        if (!valid(a) || !valid(b) || a.empty())
            return false;
        Configuration common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        return common.size() + 1 == a.size();
    };
    s.render = [gp](const Configuration& c) { return render_names(gp->names(), c); };
    check_seeds(s, "independent set");
    return s;
}

ConfigurationSpace shortest_path_space(const Graph& g, VertexId source, VertexId sink, Configuration path_a,
                                       Configuration path_b)
{
    if (source >= g.num_vertices() || sink >= g.num_vertices())
        throw ValidationError("source or sink is not a vertex");
    std::vector<std::size_t> dist(g.num_vertices(), SIZE_MAX);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v))
            if (dist[w] == SIZE_MAX) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    if (dist[sink] == SIZE_MAX)
        throw ValidationError("sink is not reachable from source");
    const std::size_t length = dist[sink];
    auto gp = std::make_shared<const Graph>(g);
    ConfigurationSpace s;
    s.move_name = "replace-vertex";
    s.initial = std::move(path_a);
    s.target = std::move(path_b);
    s.is_valid = [gp, source, sink, length](const Configuration& p) {
        if (p.size() != length + 1 || p.front() != source || p.back() != sink)
            return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i + 1] >= gp->num_vertices() || !gp->has_edge(p[i], p[i + 1]))
                return false;
        return true;
    };
    s.neighbors = [gp](const Configuration& p) {
        std::vector<Configuration> out;
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            for (auto w : gp->neighbors(p[i - 1]))
                if (w != p[i] && gp->has_edge(w, p[i + 1])) {
                    auto next = p;
                    next[i] = w;
                    out.push_back(std::move(next));
                }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    s.is_move = [valid = s.is_valid](const Configuration& a, const Configuration& b) {
        return differs_in_one(a, b) && valid(a) && valid(b);
    };
    s.render = [gp](const Configuration& c) { return render_names(gp->names(), c); };
    check_seeds(s, "shortest path");
    return s;
}

ConfigurationSpace hword_space(const Digraph& h, const Word& s_word, const Word& t_word)
{
    if (s_word.size() != t_word.size())
        throw ValidationError("walks must have equal length");
    auto hp = std::make_shared<const Digraph>(h);
    const std::size_t n = s_word.size();
    ConfigurationSpace s;
    s.move_name = "change-symbol";
    s.initial = to_configuration(s_word);
    s.target = to_configuration(t_word);
    s.is_valid = [hp, n](const Configuration& w) {
        if (w.size() != n)
            return false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] >= hp->num_vertices())
                return false;
            if (i > 0 && !hp->has_arc(w[i - 1], w[i]))
                return false;
        }
        return true;
    };
    s.neighbors = [hp](const Configuration& w) {
        std::vector<Configuration> out;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::uint32_t c = 0; c < hp->num_vertices(); ++c) {
                if (c == w[i] || (i > 0 && !hp->has_arc(w[i - 1], c)) ||
                    (i + 1 < w.size() && !hp->has_arc(c, w[i + 1])))
                    continue;
                auto next = w;
                next[i] = c;
                out.push_back(std::move(next));
            }
        std::sort(out.begin(), out.end());
        return out;
    };
    s.is_move = [valid = s.is_valid](const Configuration& a, const Configuration& b) {
        return differs_in_one(a, b) && valid(a) && valid(b);
    };
    s.render = [hp](const Configuration& c) { return render_names(hp->names(), c); };
    check_seeds(s, "walk of H");
    return s;
}

ConfigurationSpace srs_word_space(const StringRewritingSystem& sys, const Word& s_word, const Word& t_word)
{
    auto sp = std::make_shared<const StringRewritingSystem>(sys);
    const std::size_t n = s_word.size();
    ConfigurationSpace s;
    s.move_name = "rewrite";
    s.initial = to_configuration(s_word);
    s.target = to_configuration(t_word);
    const bool fixed_length = sys.is_balanced();
    s.is_valid = [sp, n, fixed_length](const Configuration& w) {
        if (fixed_length && w.size() != n)
            return false;
        for (auto x : w)
            if (x >= sp->alphabet().size())
                return false;
        return true;
    };
    s.neighbors = [sp](const Configuration& w) {
        std::vector<Configuration> out;
        for (const auto& next : rewrite_neighbors(to_word(w), *sp))
            out.push_back(to_configuration(next));
        return out;
    };
    s.is_move = [sp, valid = s.is_valid](const Configuration& a, const Configuration& b) {
        return valid(a) && valid(b) && is_rewrite_step(to_word(a), to_word(b), *sp);
    };
    s.render = [sp](const Configuration& c) { return sp->alphabet().render(to_word(c)); };
    if (!s.is_valid(s.initial))
        throw ValidationError("initial word uses symbols outside the alphabet");
    if (!s.is_valid(s.target))
        throw ValidationError("target word uses symbols outside the alphabet or has a different length");
    return s;
}

} // namespace reconf
