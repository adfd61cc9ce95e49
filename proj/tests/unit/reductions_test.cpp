#include "doctest.h"
#include "oracle.hpp"

#include "reconf/adapters.hpp"
#include "reconf/engine.hpp"
#include "reconf/error.hpp"
#include "reconf/layout.hpp"
#include "reconf/reductions.hpp"
#include "reconf/srs.hpp"

#include <bit>
#include <set>

using namespace reconf;

namespace {

/// Σ = {a, b, c} with every arc except (a, c), (c, a) and (b, b).
Digraph sample_h()
{
    Digraph h({"a", "b", "c"});
    for (VertexId u = 0; u < 3; ++u)
        for (VertexId v = 0; v < 3; ++v)
            if (!((u == 0 && v == 2) || (u == 2 && v == 0) || (u == 1 && v == 1)))
                h.add_arc(u, v);
    return h;
}

oracle::Matrix matrix_of(const Digraph& h)
{
    oracle::Matrix m(h.num_vertices());
    for (auto [a, b] : h.arcs())
        m.set(a, b);
    return m;
}

std::vector<Word> walks(const Digraph& h, std::size_t n)
{
    const auto m = matrix_of(h);
    std::vector<Word> out;
    for (auto& w : oracle::all_tuples(h.num_vertices(), n))
        if (oracle::is_walk(w, m))
            out.push_back(to_word(w));
    return out;
}

Word w(std::initializer_list<std::uint32_t> ids)
{
    Word out;
    for (auto id : ids)
        out.push_back(Symbol{id});
    return out;
}

std::size_t max_independent_set(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (auto [a, b] : g.edges())
            ok &= !((mask >> a & 1u) && (mask >> b & 1u));
        if (ok)
            best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
    return best;
}

} // namespace

TEST_SUITE("reductions")
{
    TEST_CASE("layered shortest-path instance")
    {
        const auto h = sample_h();
        const auto s = w({0, 1}), t = w({2, 1});
        const auto inst = to_shortest_path(h, s, t);
        CHECK(inst.graph.num_vertices() == 8);
        CHECK(inst.path_a == word_to_path(s, inst));
        CHECK(inst.path_a.size() == 4);
        CHECK(inst.path_a.front() == inst.source);
        CHECK(inst.path_a.back() == inst.sink);
        CHECK(inst.layers.buckets.size() == 4);
        CHECK(verify_bucket_arrangement(inst.graph, inst.layers));
        CHECK(bandwidth_of_layout(inst.graph, bucket_layout(inst.graph, inst.layers)) <= 2 * 3);
        CHECK(path_to_word(inst.path_b, inst) == t);
    }

    TEST_CASE("path decoding is a bijection on walks")
    {
        const auto h = sample_h();
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto all = walks(h, n);
            const auto inst = to_shortest_path(h, all.front(), all.back());
            std::set<Configuration> images;
            for (auto& word : all) {
                const auto p = word_to_path(word, inst);
                CHECK(path_to_word(p, inst) == word);
                images.insert(p);
            }
            CHECK(images.size() == all.size());
        }
    }

    TEST_CASE("path decoding rejects non-shortest paths")
    {
        const auto h = sample_h();
        const auto inst = to_shortest_path(h, w({0, 1}), w({0, 1}));
        auto skip = inst.path_a;
        skip.erase(skip.begin() + 2);
        CHECK_THROWS_AS(path_to_word(skip, inst), DecodeError);
        auto broken = inst.path_a;
        broken[2] = word_to_path(w({0, 0}), inst)[2];
        broken[1] = word_to_path(w({2, 2}), inst)[1];
        CHECK_THROWS_AS(path_to_word(broken, inst), DecodeError);
        CHECK_THROWS_AS(word_to_path(w({0, 2}), inst), ValidationError);
    }

    TEST_CASE("independent set instance")
    {
        const auto h = sample_h();
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto all = walks(h, n);
            const auto inst = to_mis(h, all.front(), all.back());
            CHECK(max_independent_set(inst.graph) == n);
            CHECK(is_to_word(inst.set_a, inst) == all.front());
            CHECK(verify_bucket_arrangement(inst.graph, inst.cliques));
            for (auto& word : all)
                CHECK(is_to_word(word_to_is(word, inst), inst) == word);
        }
        const auto inst = to_mis(h, w({0, 1}), w({2, 1}));
        CHECK_THROWS_AS(is_to_word({0}, inst), DecodeError);
        CHECK_THROWS_AS(word_to_is(w({2, 0}), inst), ValidationError);
        const auto space = instance_space(inst);
        for (auto& c : reachable_set(space))
            for (auto& next : space.neighbors(c)) {
                const auto a = to_configuration(is_to_word(c, inst));
                const auto b = to_configuration(is_to_word(next, inst));
                CHECK(oracle::hamming(a, b) == 1);
            }
    }

    TEST_CASE("list coloring instance shape")
    {
        const auto h = sample_h();
        const auto inst = to_list_coloring(h, w({0, 1, 0}), w({2, 1, 2}));
        CHECK(inst.num_colors == 6);
        CHECK(inst.forbidden.size() == 3);
        CHECK(inst.forbidden[0] == std::pair<VertexId, VertexId>{0, 2});
        CHECK(inst.lists[inst.hub(1)] == std::vector<std::uint32_t>{3, 4, 5});
        CHECK(inst.lists[inst.hub(2)] == std::vector<std::uint32_t>{0, 1, 2});
        CHECK(inst.color_names[3] == "a'");
        CHECK(list_coloring_to_word(inst.coloring_a, inst) == w({0, 1, 0}));
        CHECK(extend_word_to_list_coloring(w({0, 1, 0}), inst) == inst.coloring_a);
        CHECK(verify_bucket_arrangement(inst.graph, inst.arrangement));
        CHECK_THROWS_AS(extend_word_to_list_coloring(w({0, 2, 0}), inst), ValidationError);
    }

    TEST_CASE("forbidden pairs admit no proper coloring")
    {
        const auto h = sample_h();
        const auto inst = to_list_coloring(h, w({0, 1}), w({0, 1}));
        const auto space = instance_space(inst);
        // u_1 colored a' and u_2 colored c, with (a, c) forbidden.
        auto c = inst.coloring_a;
        c[inst.hub(1)] = 3 + 0;
        c[inst.hub(2)] = 2;
        std::vector<VertexId> onions;
        for (std::size_t j = 1; j <= inst.forbidden.size(); ++j)
            onions.push_back(inst.onion(1, j));
        bool any = false;
        for (std::uint32_t mask = 0; mask < (1u << onions.size()); ++mask) {
            for (std::size_t i = 0; i < onions.size(); ++i)
                c[onions[i]] = inst.lists[onions[i]][mask >> i & 1u];
            any |= space.is_valid(c);
        }
        CHECK_FALSE(any);
        CHECK_THROWS_AS(list_coloring_to_word(c, inst), DecodeError);
    }

    TEST_CASE("lifted word sequences validate")
    {
        const auto h = sample_h();
        const auto inst = to_list_coloring(h, w({0, 1, 0}), w({2, 1, 2}));
        const std::vector<Word> words{w({0, 1, 0}), w({2, 1, 0}), w({2, 1, 2})};
        const auto seq = lift_word_sequence(words, inst);
        const auto space = instance_space(inst);
        CHECK(verify_sequence(space, {seq}));
        CHECK(seq.front() == inst.coloring_a);
        CHECK(seq.back() == inst.coloring_b);
        CHECK(seq.size() - 1 <= 2 * (1 + 2 * inst.forbidden.size()));
        CHECK_THROWS_AS(lift_word_sequence({w({0, 1, 0}), w({2, 1, 2})}, inst), ValidationError);
    }

    TEST_CASE("clique gadgets")
    {
        Graph one({"v"});
        const auto full = list_to_plain(one, 4, {{0, 1, 2, 3}}, {0}, {0});
        CHECK(full.graph.neighbors(0).empty());
        CHECK(full.graph.num_vertices() == 5);
        const auto pair = list_to_plain(one, 4, {{0, 2}}, {0}, {2});
        CHECK(pair.graph.neighbors(0).size() == 2);
        CHECK(pair.original_vertices == 1);
        const auto ext = extend_list_coloring({2}, pair);
        CHECK(ext.size() == 5);
        for (std::uint32_t c = 0; c < 4; ++c)
            CHECK(ext[pair.graph.at("v/c" + std::to_string(c))] == c);
        CHECK(restrict_coloring(ext, pair) == Configuration{2});
        const auto space = instance_space(pair);
        CHECK(bfs_reach(space).reachable());
        CHECK(reachable_set(space).size() == 2);
    }

    TEST_CASE("plain coloring preserves list reachability")
    {
        const auto h = sample_h();
        const auto inst = to_list_coloring(h, w({0, 1}), w({2, 1}));
        const auto plain = list_to_plain(inst);
        CHECK(plain.k == inst.num_colors);
        CHECK(restrict_coloring(plain.coloring_a, plain) == inst.coloring_a);
        CHECK(bfs_reach(instance_space(plain)).reachable() == bfs_reach(instance_space(inst)).reachable());
        const auto blocked = to_list_coloring(h, w({1, 0}), w({1, 2}));
        CHECK(bfs_reach(instance_space(list_to_plain(blocked))).reachable() ==
              bfs_reach(instance_space(blocked)).reachable());
    }

    TEST_CASE("cycle lift")
    {
        Digraph h({"a", "b"});
        h.add_arc(0, 0);
        h.add_arc(0, 1);
        h.add_arc(1, 0);
        CHECK(lift_cycle_coloring({0, 0, 0}) == Configuration{0, 1, 2});
        CHECK(lift_cycle_coloring({1, 0, 1, 0, 0, 0}) == Configuration{3, 1, 5, 0, 1, 2});
        CHECK(unlift_cycle_coloring({3, 1, 5}) == Configuration{1, 0, 1});
        const auto inst = lift_cycle(h, 3, {0, 0, 0}, {0, 0, 1});
        CHECK(inst.lifted.num_vertices() == 6);
        CHECK(inst.cycle.num_vertices() == 3);
        CHECK(inst.coloring_a == Configuration{0, 1, 2});
        CHECK(directed_cycle(3).num_arcs() == 3);
        CHECK(undirected_cycle(6).num_edges() == 6);
        CHECK_THROWS_AS(lift_cycle(h, 4, {0, 0, 0, 0}, {0, 0, 0, 0}), DomainError);
        CHECK_THROWS_AS(lift_cycle(h, 3, {1, 1, 1}, {0, 0, 0}), ValidationError);
        const bool lifted = bfs_reach(instance_space(inst)).reachable();
        const bool direct = bfs_reach(h_coloring_space(directed_cycle(3), h, {0, 0, 0}, {0, 0, 1})).reachable();
        CHECK(lifted == direct);
    }
}
