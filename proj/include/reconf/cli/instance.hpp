#pragma once

#include "reconf/engine.hpp"
#include "reconf/forest.hpp"
#include "reconf/graph.hpp"
#include "reconf/hword.hpp"
#include "reconf/layout.hpp"
#include "reconf/srs.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reconf::cli {

enum class ProblemKind { ShortestPath, MaxIS, ListColoring, KColoring, HColoring, HWord, SrsWord };

std::string problem_name(ProblemKind kind);
ProblemKind parse_problem_name(const std::string& name);

/// A reconfiguration instance as stored in instance files. Which optional
/// parts are present depends on `kind`.
struct Instance {
    ProblemKind kind = ProblemKind::HWord;
    std::optional<Graph> graph;      // G for path / IS / coloring / undirected H-coloring
    std::optional<Digraph> digraph;  // G for directed H-coloring
    std::optional<Graph> h_graph;    // undirected H
    std::optional<Digraph> h_digraph; // directed H
    std::optional<HStructure> h_structure;
    std::optional<StringRewritingSystem> srs;
    std::optional<RootedForest> forest;
    std::vector<std::string> color_names;          // list / k coloring
    std::vector<std::vector<std::uint32_t>> lists; // list coloring
    std::optional<BucketArrangement> layers;
    std::optional<VertexId> source;
    std::optional<VertexId> sink;
    Configuration config_a;
    Configuration config_b;

    friend bool operator==(const Instance& a, const Instance& b);
};

/// Parses the line-oriented instance format (see README). Throws ParseError.
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

/// Configuration tokens (vertex names, color names or symbols) for `inst`.
Configuration parse_configuration(const Instance& inst, const std::vector<std::string>& tokens);
std::string render_configuration(const Instance& inst, const Configuration& c);

/// One configuration per non-blank line.
ReconfigurationSequence parse_sequence(const Instance& inst, std::string_view text);
std::string write_sequence(const Instance& inst, const ReconfigurationSequence& seq);

/// Configuration space of the instance with both seeds validated.
ConfigurationSpace make_space(const Instance& inst);

/// Digraph H of an H-coloring instance (an undirected H becomes symmetric).
Digraph target_digraph(const Instance& inst);
/// Digraph G of an H-coloring instance (an undirected G becomes symmetric).
Digraph source_digraph(const Instance& inst);

} // namespace reconf::cli
