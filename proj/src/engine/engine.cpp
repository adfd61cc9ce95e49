#include "reconf/engine.hpp"

#include "reconf/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace reconf {

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ull ^ c.size();
    for (auto x : c) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
}

namespace {

struct Explored {
    std::vector<Configuration> states;
    std::vector<std::size_t> parent;
    std::optional<std::size_t> hit;
    SearchStats stats;
};

Explored explore(const ConfigurationSpace& space, const SearchLimits& limits, const Configuration* goal)
{
    if (!space.is_valid(space.initial))
        throw ValidationError("initial configuration is not valid in the " + space.move_name + " space");
    if (goal && !space.is_valid(*goal))
        throw ValidationError("target configuration is not valid in the " + space.move_name + " space");

    Explored e;
    std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;
    std::vector<std::size_t> depth;
    e.states.push_back(space.initial);
    e.parent.push_back(0);
    depth.push_back(0);
    index.emplace(space.initial, 0);
    if (goal && *goal == space.initial) {
        e.hit = 0;
        e.stats.states_explored = 1;
        e.stats.frontier_peak = 1;
        return e;
    }

    std::size_t head = 0;
    while (head < e.states.size()) {
        e.stats.frontier_peak = std::max(e.stats.frontier_peak, e.states.size() - head);
        const std::size_t cur = head++;
        for (auto& next : space.neighbors(e.states[cur])) {
            if (index.count(next))
                continue;
            if (depth[cur] >= limits.max_depth) {
                e.stats.states_explored = e.states.size();
                throw ResourceLimitError("search depth limit of " + std::to_string(limits.max_depth) + " moves reached");
            }
            if (e.states.size() >= limits.max_states) {
                e.stats.states_explored = e.states.size();
                throw ResourceLimitError("search state limit of " + std::to_string(limits.max_states) + " reached");
            }
            const bool is_goal = goal && next == *goal;
            index.emplace(next, e.states.size());
            e.states.push_back(std::move(next));
            e.parent.push_back(cur);
            depth.push_back(depth[cur] + 1);
            if (is_goal) {
                e.hit = e.states.size() - 1;
                e.stats.states_explored = e.states.size();
                return e;
            }
        }
    }
    e.stats.states_explored = e.states.size();
    return e;
}

} // namespace

SearchResult bfs_reach(const ConfigurationSpace& space, const SearchLimits& limits)
{
    auto e = explore(space, limits, &space.target);
    SearchResult result;
    result.stats = e.stats;
    if (e.hit) {
        ReconfigurationSequence seq;
        for (std::size_t i = *e.hit;; i = e.parent[i]) {
            seq.steps.push_back(e.states[i]);
            if (i == 0)
                break;
        }
        std::reverse(seq.steps.begin(), seq.steps.end());
        result.stats.moves = seq.moves();
        result.sequence = std::move(seq);
    }
    return result;
}

std::vector<Configuration> reachable_set(const ConfigurationSpace& space, const SearchLimits& limits)
{
    return explore(space, limits, nullptr).states;
}

std::optional<std::size_t> first_violation(const ConfigurationSpace& space, const ReconfigurationSequence& seq)
{
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        if (!space.is_valid(seq.steps[i]))
            return i;
        if (i > 0 && !space.is_move(seq.steps[i - 1], seq.steps[i]))
            return i;
    }
    return std::nullopt;
}

bool verify_sequence(const ConfigurationSpace& space, const ReconfigurationSequence& seq)
{
    return !first_violation(space, seq).has_value();
}

std::string format_stats(const SearchStats& stats)
{
    return "states_explored=" + std::to_string(stats.states_explored) + "\n" +
           "frontier_peak=" + std::to_string(stats.frontier_peak) + "\n" +
           "moves=" + std::to_string(stats.moves) + "\n";
}

} // namespace reconf
