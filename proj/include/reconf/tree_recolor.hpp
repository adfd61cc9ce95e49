#pragma once

#include "reconf/engine.hpp"
#include "reconf/graph.hpp"

#include <optional>
#include <vector>

namespace reconf {

/// True iff h has a walk of even length from a to b (loops count as odd cycles).
bool even_walk_exists(const Graph& h, VertexId a, VertexId b);

/// Shortest even-length walk a = w_0, ..., w_{2l} = b, or nullopt.
std::optional<std::vector<VertexId>> shortest_even_walk(const Graph& h, VertexId a, VertexId b);

/// Reachability of H-colorings of a forest t. The component containing
/// `root` is rooted there, every other component at its smallest vertex;
/// each component with at least two vertices needs an even walk between the
/// two root colors, single vertices are always recolorable.
/// Throws ValidationError when t is not a forest or a coloring is invalid.
bool tree_reach(const Graph& t, VertexId root, const Configuration& alpha, const Configuration& beta, const Graph& h);

/// Explicit recoloring sequence (normalize, walk, reverse-normalize) when
/// tree_reach holds, nullopt otherwise.
std::optional<ReconfigurationSequence> tree_reconfigure_sequence(const Graph& t, VertexId root,
                                                                 const Configuration& alpha,
                                                                 const Configuration& beta, const Graph& h);

} // namespace reconf
