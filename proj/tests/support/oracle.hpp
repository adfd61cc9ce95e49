#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls the library's search engine or adapters.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Conf = std::vector<std::uint32_t>;
using Successors = std::function<std::vector<Conf>(const Conf&)>;

/// Every configuration reachable from `start`.
std::set<Conf> component(const Conf& start, const Successors& succ);

/// Same label iff mutually reachable.
std::vector<std::size_t> labels(const std::vector<Conf>& seeds, const Successors& succ);

/// Labels over an explicit universe where `move` is a symmetric relation.
std::vector<std::size_t> labels_by_moves(const std::vector<Conf>& universe,
                                         const std::function<bool(const Conf&, const Conf&)>& move);

bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

/// All tuples over {0..values-1} of the given length, in lexicographic order.
std::vector<Conf> all_tuples(std::size_t values, std::size_t length);

/// Change one coordinate to any other value, keeping configurations accepted by `valid`.
Successors single_change(std::size_t values, std::function<bool(const Conf&)> valid);

/// One application of a directed rule lhs -> rhs (both of length 2).
Successors rewrite(std::vector<std::pair<Conf, Conf>> directed_rules);

/// Number of coordinates where a and b differ (a.size() == b.size()).
std::size_t hamming(const Conf& a, const Conf& b);

/// Boolean adjacency matrix helper.
struct Matrix {
    std::size_t n = 0;
    std::vector<char> bits;

    explicit Matrix(std::size_t size = 0) : n(size), bits(size * size, 0) {}
    bool operator()(std::size_t a, std::size_t b) const { return bits[a * n + b] != 0; }
    void set(std::size_t a, std::size_t b) { bits[a * n + b] = 1; }
};

/// Walk test: every consecutive pair is an arc.
bool is_walk(const Conf& w, const Matrix& arcs);

/// Vertex map of a graph given as an arc list into `arcs` preserving arcs.
bool is_hom(const Conf& c, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& g_arcs, const Matrix& arcs);

/// All homomorphisms of the arc list g (n vertices) into `arcs`, by backtracking.
std::vector<Conf> all_homs(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& g_arcs,
                           const Matrix& arcs);

/// Deterministic small PRNG (splitmix64) so oracles never share the library's RNG usage.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
};

} // namespace oracle
