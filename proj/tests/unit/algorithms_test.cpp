#include "doctest.h"
#include "oracle.hpp"

#include "reconf/adapters.hpp"
#include "reconf/engine.hpp"
#include "reconf/error.hpp"
#include "reconf/forest.hpp"
#include "reconf/tree_recolor.hpp"
#include "reconf/treedepth_solver.hpp"

#include <algorithm>

using namespace reconf;

namespace {

Graph complete(std::size_t n)
{
    Graph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex("c" + std::to_string(i));
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    return g;
}

Graph edge_graph()
{
    Graph g({"u", "v"});
    g.add_edge(0, 1);
    return g;
}

oracle::Matrix matrix_of(const Graph& h)
{
    oracle::Matrix m(h.num_vertices());
    for (auto [a, b] : h.edges()) {
        m.set(a, b);
        m.set(b, a);
    }
    return m;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs_of(const Digraph& g)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (auto [a, b] : g.arcs())
        out.emplace_back(a, b);
    return out;
}

/// Smallest |A| such that g maps onto g[A] preserving labels, by enumeration.
std::size_t brute_force_core_size(const Digraph& g, const std::vector<std::uint32_t>& labels)
{
    const std::size_t n = g.num_vertices();
    for (std::size_t size = 1; size <= n; ++size)
        for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
            if (static_cast<std::size_t>(__builtin_popcount(subset)) != size)
                continue;
            std::vector<std::uint32_t> members;
            for (std::uint32_t v = 0; v < n; ++v)
                if (subset >> v & 1u)
                    members.push_back(v);
            for (auto& choice : oracle::all_tuples(size, n)) {
                bool ok = true;
                for (std::uint32_t v = 0; v < n && ok; ++v)
                    ok = labels[members[choice[v]]] == labels[v];
                for (auto [a, b] : g.arcs())
                    ok = ok && g.has_arc(members[choice[a]], members[choice[b]]);
                if (ok)
                    return size;
            }
        }
    return n;
}

Digraph random_loopless(oracle::Rng& rng, std::size_t n)
{
    Digraph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex("g" + std::to_string(i));
    const std::size_t density = 1 + rng.below(4);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
            if (a != b && rng.below(6) < density)
                g.add_arc(a, b);
    return g;
}

} // namespace

TEST_SUITE("algorithms")
{
    TEST_CASE("even walk examples")
    {
        const auto e = edge_graph();
        CHECK_FALSE(even_walk_exists(e, 0, 1));
        CHECK(even_walk_exists(e, 0, 0));
        CHECK(even_walk_exists(complete(3), 0, 1));
        CHECK(shortest_even_walk(complete(3), 0, 1)->size() == 3);
        CHECK(shortest_even_walk(e, 1, 1)->size() == 1);
        CHECK_FALSE(shortest_even_walk(e, 0, 1));
        Graph looped({"a", "b"});
        looped.add_edge(0, 1);
        looped.add_edge(1, 1);
        CHECK(even_walk_exists(looped, 0, 1));
        CHECK(*shortest_even_walk(looped, 0, 1) == std::vector<VertexId>{0, 1, 1});
        Graph apart({"a", "b"});
        CHECK_FALSE(even_walk_exists(apart, 0, 1));
    }

    TEST_CASE("even walks agree with parity search")
    {
        oracle::Rng rng(51);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t k = 1 + rng.below(5);
            Graph h;
            for (std::size_t i = 0; i < k; ++i)
                h.add_vertex("h" + std::to_string(i));
            for (VertexId a = 0; a < k; ++a)
                for (VertexId b = a; b < k; ++b)
                    if (rng.below(3) == 0)
                        h.add_edge(a, b);
            const auto m = matrix_of(h);
            for (VertexId a = 0; a < k; ++a) {
                // States (vertex, parity) reachable from (a, even).
                const auto reach = oracle::component({a, 0}, [&](const oracle::Conf& c) {
                    std::vector<oracle::Conf> out;
                    for (std::uint32_t v = 0; v < k; ++v)
                        if (m(c[0], v))
                            out.push_back({v, 1 - c[1]});
                    return out;
                });
                for (VertexId b = 0; b < k; ++b) {
                    const bool expected = reach.count({b, 0}) > 0;
                    CHECK(even_walk_exists(h, a, b) == expected);
                    const auto walk = shortest_even_walk(h, a, b);
                    REQUIRE(walk.has_value() == expected);
                    if (walk) {
                        CHECK(walk->size() % 2 == 1);
                        CHECK(walk->front() == a);
                        CHECK(walk->back() == b);
                        CHECK(oracle::is_walk(oracle::Conf(walk->begin(), walk->end()), m));
                    }
                }
            }
        }
    }

    TEST_CASE("tree_reach examples")
    {
        const auto p2 = edge_graph();
        const auto k3 = complete(3);
        CHECK(tree_reach(p2, 0, {0, 1}, {1, 2}, k3));
        const auto seq = tree_reconfigure_sequence(p2, 0, {0, 1}, {1, 2}, k3);
        REQUIRE(seq);
        const auto space = h_coloring_space(symmetric_digraph(p2), symmetric_digraph(k3), {0, 1}, {1, 2});
        CHECK(verify_sequence(space, *seq));
        CHECK(seq->steps.front() == Configuration{0, 1});
        CHECK(seq->steps.back() == Configuration{1, 2});

        const auto k2 = complete(2);
        CHECK_FALSE(tree_reach(p2, 0, {0, 1}, {1, 0}, k2));
        CHECK_FALSE(tree_reconfigure_sequence(p2, 0, {0, 1}, {1, 0}, k2));
        CHECK(tree_reach(p2, 1, {0, 1}, {0, 1}, k2));
        const auto same = tree_reconfigure_sequence(p2, 0, {0, 1}, {0, 1}, k2);
        REQUIRE(same);
        CHECK(same->moves() == 0);
    }

    TEST_CASE("single vertices and forests")
    {
        Graph lone({"x"});
        CHECK(tree_reach(lone, 0, {0}, {1}, complete(2)));
        const auto one = tree_reconfigure_sequence(lone, 0, {0}, {1}, complete(2));
        REQUIRE(one);
        CHECK(one->moves() == 1);

        Graph two({"a", "b", "c", "d"});
        two.add_edge(0, 1);
        two.add_edge(2, 3);
        CHECK_FALSE(tree_reach(two, 0, {0, 1, 0, 1}, {0, 1, 1, 0}, complete(2)));
        CHECK(tree_reach(two, 0, {0, 1, 0, 1}, {0, 1, 1, 0}, complete(3)));
        const auto seq = tree_reconfigure_sequence(two, 2, {0, 1, 0, 1}, {2, 0, 1, 0}, complete(3));
        REQUIRE(seq);
        const auto space =
            h_coloring_space(symmetric_digraph(two), symmetric_digraph(complete(3)), {0, 1, 0, 1}, {2, 0, 1, 0});
        CHECK(verify_sequence(space, *seq));
    }

    TEST_CASE("tree_reach errors")
    {
        const auto k3 = complete(3);
        CHECK_THROWS_AS(tree_reach(k3, 0, {0, 1, 2}, {0, 1, 2}, k3), ValidationError);
        CHECK_THROWS_AS(tree_reach(edge_graph(), 0, {0, 0}, {0, 1}, k3), ValidationError);
        CHECK_THROWS_AS(tree_reach(edge_graph(), 0, {0, 1}, {0}, k3), ValidationError);
        CHECK_THROWS_AS(tree_reach(edge_graph(), 5, {0, 1}, {0, 1}, k3), ValidationError);
    }

    TEST_CASE("tree criterion agrees with direct search")
    {
        oracle::Rng rng(52);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 2 + rng.below(4);
            Graph t;
            for (std::size_t i = 0; i < n; ++i)
                t.add_vertex("t" + std::to_string(i));
            for (VertexId v = 1; v < n; ++v)
                t.add_edge(static_cast<VertexId>(rng.below(v)), v);
            const std::size_t k = 1 + rng.below(3);
            Graph h;
            for (std::size_t i = 0; i < k; ++i)
                h.add_vertex("h" + std::to_string(i));
            for (VertexId a = 0; a < k; ++a)
                for (VertexId b = a; b < k; ++b)
                    if (rng.below(2))
                        h.add_edge(a, b);
            const auto homs = oracle::all_homs(n, arcs_of(symmetric_digraph(t)), matrix_of(h));
            if (homs.empty())
                continue;
            const auto alpha = homs[rng.below(homs.size())];
            const auto root = static_cast<VertexId>(rng.below(n));
            const auto comp = oracle::component(alpha, oracle::single_change(k, [&](const oracle::Conf& c) {
                return oracle::is_hom(c, arcs_of(symmetric_digraph(t)), matrix_of(h));
            }));
            for (auto& beta : homs) {
                const bool expected = comp.count(beta) > 0;
                CHECK(tree_reach(t, root, alpha, beta, h) == expected);
                const auto seq = tree_reconfigure_sequence(t, root, alpha, beta, h);
                REQUIRE(seq.has_value() == expected);
                if (seq) {
                    const auto space = h_coloring_space(symmetric_digraph(t), symmetric_digraph(h), alpha, beta);
                    CHECK(verify_sequence(space, *seq));
                }
            }
        }
    }

    TEST_CASE("core of a uniformly labelled star")
    {
        for (std::size_t leaves = 1; leaves <= 4; ++leaves) {
            Digraph star;
            star.add_vertex("c");
            std::vector<std::optional<VertexId>> parent{std::nullopt};
            for (std::size_t i = 0; i < leaves; ++i) {
                const auto v = star.add_vertex("l" + std::to_string(i));
                star.add_arc(0, v);
                parent.push_back(VertexId{0});
            }
            std::vector<std::uint32_t> labels(leaves + 1, 1);
            labels[0] = 0;
            const auto core = treedepth_core(star, labels, RootedForest(parent));
            CHECK(core.core_vertices.size() == 2);
            CHECK(brute_force_core_size(star, labels) == 2);
            CHECK(verify_core(star, labels, core));
        }
    }

    TEST_CASE("cores that cannot shrink")
    {
        Digraph g({"a", "b", "c"});
        g.add_arc(0, 1);
        g.add_arc(0, 2);
        const RootedForest f({std::nullopt, 0, 0});
        const auto distinct = treedepth_core(g, {0, 1, 2}, f);
        CHECK(distinct.core_vertices == std::vector<VertexId>{0, 1, 2});
        CHECK(distinct.mu == std::vector<VertexId>{0, 1, 2});

        Digraph p2({"u", "v"});
        p2.add_arc(0, 1);
        const auto core = treedepth_core(p2, {0, 0}, RootedForest({std::nullopt, 0}));
        CHECK(core.core_vertices == std::vector<VertexId>{0, 1});

        CHECK_THROWS_AS(treedepth_core(g, {0, 1, 2}, RootedForest({std::nullopt, 0, 1, 1})), ValidationError);
        CHECK_THROWS_AS(treedepth_core(g, {0, 1, 2}, RootedForest({std::nullopt, std::nullopt, 0})), ValidationError);
        CHECK_THROWS_AS(treedepth_core(g, {0, 1}, f), ValidationError);
    }

    TEST_CASE("verify_core rejects bad witnesses")
    {
        Digraph g({"a", "b", "c"});
        g.add_arc(0, 1);
        const std::vector<std::uint32_t> labels{0, 1, 1};
        CHECK(verify_core(g, labels, {{0, 1}, {0, 1, 1}}));
        CHECK_FALSE(verify_core(g, labels, {{0, 2}, {0, 2, 2}}));
        CHECK_FALSE(verify_core(g, labels, {{0, 1}, {0, 0, 1}}));
        CHECK_FALSE(verify_core(g, labels, {{0}, {0, 1, 1}}));
        CHECK_FALSE(verify_core(g, labels, {{0, 1}, {0, 1}}));
    }

    TEST_CASE("cores of random inputs verify")
    {
        oracle::Rng rng(53);
        for (int trial = 0; trial < 10000; ++trial) {
            const std::size_t n = 1 + rng.below(7);
            const auto g = random_loopless(rng, n);
            std::vector<std::uint32_t> labels(n);
            const std::size_t distinct = 1 + rng.below(3);
            for (auto& l : labels)
                l = static_cast<std::uint32_t>(rng.below(distinct));
            const auto forest = exact_treedepth(underlying_graph(g)).forest;
            const auto core = treedepth_core(g, labels, forest);
            REQUIRE(verify_core(g, labels, core));
            CHECK(std::is_sorted(core.core_vertices.begin(), core.core_vertices.end()));
            CHECK(core.core_vertices.size() <= n);
            if (n <= 5 && trial % 10 == 0)
                CHECK(core.core_vertices.size() >= brute_force_core_size(g, labels));
        }
    }

    TEST_CASE("treedepth_reach examples and errors")
    {
        Digraph g({"u", "v", "w"});
        g.add_arc(0, 1);
        g.add_arc(1, 2);
        Digraph h({"a", "b", "c"});
        h.add_arc(0, 1);
        h.add_arc(1, 2);
        h.add_arc(0, 2);
        h.add_arc(2, 2);
        const RootedForest f({1, std::nullopt, 1});
        const auto same = treedepth_reach(g, f, {0, 1, 2}, {0, 1, 2}, h);
        CHECK(same.reachable);
        REQUIRE(same.sequence);
        CHECK(same.sequence->steps == std::vector<Configuration>{{0, 1, 2}});

        const auto r = treedepth_reach(g, f, {0, 2, 2}, {1, 2, 2}, h);
        CHECK(r.reachable == bfs_reach(h_coloring_space(g, h, {0, 2, 2}, {1, 2, 2})).reachable());
        if (r.sequence)
            CHECK(verify_sequence(h_coloring_space(g, h, {0, 2, 2}, {1, 2, 2}), *r.sequence));
        CHECK(r.core.mu.size() == 3);
        CHECK_FALSE(r.core.core_vertices.empty());

        Digraph looped({"u"});
        looped.add_arc(0, 0);
        CHECK_THROWS_AS(treedepth_reach(looped, RootedForest({std::nullopt}), {2}, {2}, h), ValidationError);
        CHECK_THROWS_AS(treedepth_reach(g, f, {0, 0, 0}, {0, 1, 2}, h), ValidationError);
    }

    TEST_CASE("treedepth_reach agrees with direct search")
    {
        oracle::Rng rng(54);
        for (int trial = 0; trial < 300; ++trial) {
            const auto g = random_loopless(rng, 1 + rng.below(6));
            const std::size_t k = 1 + rng.below(3);
            Digraph h;
            for (std::size_t i = 0; i < k; ++i)
                h.add_vertex("h" + std::to_string(i));
            for (VertexId a = 0; a < k; ++a)
                for (VertexId b = 0; b < k; ++b)
                    if (rng.below(2))
                        h.add_arc(a, b);
            oracle::Matrix m(k);
            for (auto [a, b] : h.arcs())
                m.set(a, b);
            const auto homs = oracle::all_homs(g.num_vertices(), arcs_of(g), m);
            if (homs.empty())
                continue;
            const auto alpha = homs[rng.below(homs.size())];
            const auto beta = homs[rng.below(homs.size())];
            const auto forest = exact_treedepth(underlying_graph(g)).forest;
            const auto r = treedepth_reach(g, forest, alpha, beta, h);
            const auto space = h_coloring_space(g, h, alpha, beta);
            CHECK(r.reachable == bfs_reach(space).reachable());
            CHECK(r.sequence.has_value() == r.reachable);
            if (r.sequence)
                CHECK(verify_sequence(space, *r.sequence));
        }
    }
}
