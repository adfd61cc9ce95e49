#pragma once

#include "reconf/engine.hpp"
#include "reconf/graph.hpp"
#include "reconf/srs.hpp"

#include <cstdint>
#include <vector>

namespace reconf {

// One ConfigurationSpace constructor per reconfiguration problem. Each one
// validates its two seed configurations and throws ValidationError when
// either is not a valid configuration of the space.

/// Arc-preserving maps V(g) -> V(h); a move recolors one vertex.
ConfigurationSpace h_coloring_space(const Digraph& g, const Digraph& h, Configuration alpha, Configuration beta);

/// Proper colorings obeying per-vertex lists (colors 0..num_colors-1, each
/// list sorted); a move recolors one vertex.
ConfigurationSpace list_coloring_space(const Graph& g, std::uint32_t num_colors,
                                       std::vector<std::vector<std::uint32_t>> lists, Configuration alpha,
                                       Configuration beta);

/// Proper colorings with colors 0..k-1.
ConfigurationSpace k_coloring_space(const Graph& g, std::uint32_t k, Configuration alpha, Configuration beta);

/// Independent sets of size `size` stored as sorted vertex ids; a move is a
/// token jump (remove one vertex, add another).
ConfigurationSpace max_is_space(const Graph& g, std::size_t size, Configuration set_a, Configuration set_b);

/// Shortest source-sink paths stored as vertex sequences; a move replaces
/// one vertex.
ConfigurationSpace shortest_path_space(const Graph& g, VertexId source, VertexId sink, Configuration path_a,
                                       Configuration path_b);

/// Walks of h of fixed length; a move changes one symbol.
ConfigurationSpace hword_space(const Digraph& h, const Word& s, const Word& t);

/// Words of fixed length under a rewriting system; a move is one rule application.
ConfigurationSpace srs_word_space(const StringRewritingSystem& sys, const Word& s, const Word& t);

/// True iff `c` is an arc-preserving map of g into h.
bool is_h_coloring(const Digraph& g, const Digraph& h, const Configuration& c);

} // namespace reconf
