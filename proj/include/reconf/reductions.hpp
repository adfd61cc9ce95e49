#pragma once

#include "reconf/engine.hpp"
#include "reconf/graph.hpp"
#include "reconf/layout.hpp"
#include "reconf/symbol.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace reconf {

// Reductions from H-word reachability over a digraph H = (Σ, R). Symbols of
// a word are vertex ids of H; all words must be walks of H of equal length
// n >= 1.

/// Layered graph: v0, v_i^a (i = 1..n, a ∈ Σ), v_{n+1}; edges v0 v_1^a,
/// v_n^a v_{n+1} and v_i^a v_{i+1}^b for (a,b) ∈ R.
struct ShortestPathInstance {
    Graph graph;
    VertexId source = 0;
    VertexId sink = 0;
    Configuration path_a;
    Configuration path_b;
    BucketArrangement layers; // V_0 .. V_{n+1}
    std::size_t length = 0;   // n
    std::size_t num_symbols = 0;
};

ShortestPathInstance to_shortest_path(const Digraph& h, const Word& s, const Word& t);
Configuration word_to_path(const Word& w, const ShortestPathInstance& inst);
/// Throws DecodeError unless p is a shortest source-sink path.
Word path_to_word(const Configuration& p, const ShortestPathInstance& inst);
ConfigurationSpace instance_space(const ShortestPathInstance& inst);

/// Cliques V_i = {v_i^a} plus edges v_i^a v_{i+1}^b for (a,b) ∉ R.
struct MaxISInstance {
    Graph graph;
    Configuration set_a;
    Configuration set_b;
    BucketArrangement cliques; // V_1 .. V_n
    std::size_t length = 0;
    std::size_t num_symbols = 0;
};

MaxISInstance to_mis(const Digraph& h, const Word& s, const Word& t);
Configuration word_to_is(const Word& w, const MaxISInstance& inst);
/// Throws DecodeError unless `set` is an independent set with one vertex per clique.
Word is_to_word(const Configuration& set, const MaxISInstance& inst);
ConfigurationSpace instance_space(const MaxISInstance& inst);

/// Chain of onions u_1..u_n with onion vertices v_i^j between u_i and
/// u_{i+1}, one per forbidden pair. Colors are a (id a) and a' (id |Σ|+a).
struct ListColoringInstance {
    Graph graph;
    std::uint32_t num_colors = 0;
    std::vector<std::string> color_names;
    std::vector<std::vector<std::uint32_t>> lists;
    Configuration coloring_a;
    Configuration coloring_b;
    std::vector<std::pair<VertexId, VertexId>> forbidden; // onion index j-1 -> (a,b) ∉ R
    BucketArrangement arrangement;                         // {u_1}, {v_1^*}, {u_2}, ...
    std::size_t length = 0;
    std::size_t num_symbols = 0;

    VertexId hub(std::size_t i) const; // u_i, 1-based
    VertexId onion(std::size_t i, std::size_t j) const; // v_i^j, 1-based
};

ListColoringInstance to_list_coloring(const Digraph& h, const Word& s, const Word& t);
/// Hub colors from w, each onion vertex takes its first list color not used
/// by a neighbour. Throws ValidationError when w is not an H-word.
Configuration extend_word_to_list_coloring(const Word& w, const ListColoringInstance& inst);
/// Throws DecodeError unless c is a proper list coloring.
Word list_coloring_to_word(const Configuration& c, const ListColoringInstance& inst);
ConfigurationSpace instance_space(const ListColoringInstance& inst);
/// Recoloring sequence from the extension of words.front() to the extension
/// of words.back(); consecutive words must differ in one symbol.
std::vector<Configuration> lift_word_sequence(const std::vector<Word>& words, const ListColoringInstance& inst);

struct KColoringInstance {
    Graph graph;
    std::uint32_t k = 0;
    Configuration coloring_a;
    Configuration coloring_b;
    std::size_t original_vertices = 0; // vertices 0..original_vertices-1 come from the list instance
};

/// One k-clique per vertex (member c precolored c) joined to the vertex at
/// the colors outside its list.
KColoringInstance list_to_plain(const Graph& g, std::uint32_t k, const std::vector<std::vector<std::uint32_t>>& lists,
                                const Configuration& alpha, const Configuration& beta);
KColoringInstance list_to_plain(const ListColoringInstance& inst);
Configuration extend_list_coloring(const Configuration& c, const KColoringInstance& inst);
Configuration restrict_coloring(const Configuration& c, const KColoringInstance& inst);
ConfigurationSpace instance_space(const KColoringInstance& inst);

/// Directed cycle c0 -> c1 -> ... -> c_{len-1} -> c0.
Digraph directed_cycle(std::size_t len);
Graph undirected_cycle(std::size_t len);

/// Undirected H' on Σ × {0,1,2} with edges {(a,i),(b,i+1 mod 3)} for (a,b) ∈ R;
/// (a,i) has id 3a+i. Colorings lift by v_i -> (α(v_i), i mod 3).
struct CycleLiftInstance {
    Digraph base;
    Graph lifted;
    Graph cycle;
    Configuration coloring_a;
    Configuration coloring_b;
};

CycleLiftInstance lift_cycle(const Digraph& h, std::size_t cycle_len, const Configuration& alpha,
                             const Configuration& beta);
Configuration lift_cycle_coloring(const Configuration& alpha);
Configuration unlift_cycle_coloring(const Configuration& lifted);
ConfigurationSpace instance_space(const CycleLiftInstance& inst);

} // namespace reconf
