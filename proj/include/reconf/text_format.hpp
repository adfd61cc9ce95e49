#pragma once

#include "reconf/forest.hpp"
#include "reconf/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace reconf {

/// A non-blank, non-comment input line split into tokens.
struct TextLine {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

/// Splits text into lines, strips `#` comments and drops blank lines.
std::vector<TextLine> tokenize_lines(std::string_view text, std::size_t first_line = 1);

// Graph text format: `v <name>` and `e <u> <v>` lines; digraphs use `a <u> <v>`.
Graph parse_graph(const std::vector<TextLine>& lines);
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

Digraph parse_digraph(const std::vector<TextLine>& lines);
Digraph parse_digraph(std::string_view text);
std::string write_digraph(const Digraph& d);

// Forest text format: `root <v>` and `child <v> <parent>`, names from `names_of`.
RootedForest parse_forest(const std::vector<TextLine>& lines, const std::vector<std::string>& names_of);
std::string write_forest(const RootedForest& f, const std::vector<std::string>& names_of);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace reconf
