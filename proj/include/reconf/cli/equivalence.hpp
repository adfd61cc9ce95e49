#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace reconf::cli {

struct EquivalenceOptions {
    std::size_t max_symbols = 2;  // alphabet / |V(H)| bound
    std::size_t max_length = 3;   // word length, tree size or graph size bound
    std::size_t samples = 200;    // cases kept when a family is larger than this
    std::uint64_t seed = 1;
};

struct EquivalenceReport {
    std::string pair;
    std::string mode; // exhaustive | sampled
    std::size_t cases = 0;
    std::size_t agreements = 0;
    std::vector<std::string> counterexamples;

    std::size_t disagreements() const { return cases - agreements; }
    std::string render() const;
};

/// Names accepted by check_equivalence.
const std::vector<std::string>& equivalence_pairs();

/// Runs both sides of one reduction on a family of small instances.
/// Throws ValidationError for unknown pairs.
EquivalenceReport check_equivalence(const std::string& pair, const EquivalenceOptions& options);

} // namespace reconf::cli
