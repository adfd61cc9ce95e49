#pragma once

#include "reconf/engine.hpp"
#include "reconf/forest.hpp"
#include "reconf/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace reconf {

/// Vertex subset A with a map mu : V(G) -> A.
struct CoreWitness {
    std::vector<VertexId> core_vertices; // sorted
    std::vector<VertexId> mu;
};

/// Label-preserving homomorphism of g onto an induced subdigraph, obtained by
/// merging subtrees of `forest` with equal codes (label, arcs to ancestors,
/// set of child codes). Requires g loopless and forest closure to contain g.
CoreWitness treedepth_core(const Digraph& g, const std::vector<std::uint32_t>& labels, const RootedForest& forest);

/// True iff mu maps into A, preserves labels and maps arcs to arcs.
bool verify_core(const Digraph& g, const std::vector<std::uint32_t>& labels, const CoreWitness& w);

struct TreedepthReachResult {
    bool reachable = false;
    std::optional<ReconfigurationSequence> sequence; // lifted to g
    CoreWitness core;
    SearchStats stats; // of the search on the core
};

/// H-coloring reachability on g via the core for labels (alpha(v), beta(v)).
TreedepthReachResult treedepth_reach(const Digraph& g, const RootedForest& forest, const Configuration& alpha,
                                     const Configuration& beta, const Digraph& h, const SearchLimits& limits = {});

} // namespace reconf
