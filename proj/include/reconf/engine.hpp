#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace reconf {

/// Every configuration is a canonical vector of ids (word symbols, vertex
/// colors, sorted vertex sets, path vertices). Structural equality is the
/// canonical key.
using Configuration = std::vector<std::uint32_t>;

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept;
};

/// Abstract reconfiguration space with an undirected single-move relation.
struct ConfigurationSpace {
    std::string move_name;
    Configuration initial;
    Configuration target;
    /// Deterministically ordered, duplicate-free single-move neighbors.
    std::function<std::vector<Configuration>(const Configuration&)> neighbors;
    std::function<bool(const Configuration&)> is_valid;
    /// Single-move test, computed without going through `neighbors`.
    std::function<bool(const Configuration&, const Configuration&)> is_move;
    std::function<std::string(const Configuration&)> render;
};

struct ReconfigurationSequence {
    std::vector<Configuration> steps;

    std::size_t moves() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct SearchLimits {
    std::size_t max_states = 1'000'000;
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
};

struct SearchStats {
    std::size_t states_explored = 0;
    std::size_t frontier_peak = 0;
    std::size_t moves = 0;
};

struct SearchResult {
    std::optional<ReconfigurationSequence> sequence;
    SearchStats stats;

    bool reachable() const { return sequence.has_value(); }
};

/// Shortest reconfiguration sequence by breadth-first search.
/// An empty result means the reachable set was exhausted without meeting the
/// target; hitting a limit throws ResourceLimitError instead.
SearchResult bfs_reach(const ConfigurationSpace& space, const SearchLimits& limits = {});

/// Every configuration reachable from `space.initial`, in BFS order.
std::vector<Configuration> reachable_set(const ConfigurationSpace& space, const SearchLimits& limits = {});

/// True iff every step is valid and each consecutive pair is a single move.
bool verify_sequence(const ConfigurationSpace& space, const ReconfigurationSequence& seq);

/// Index of the first offending step (0 for an invalid first configuration,
/// i for a bad move into step i), or nullopt when the sequence is valid.
std::optional<std::size_t> first_violation(const ConfigurationSpace& space, const ReconfigurationSequence& seq);

std::string format_stats(const SearchStats& stats);

} // namespace reconf
