#include "reconf/cli/instance.hpp"

#include "reconf/adapters.hpp"
#include "reconf/error.hpp"
#include "reconf/text_format.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace reconf::cli {

namespace {

const std::vector<std::pair<ProblemKind, std::string>>& problem_names()
{
    static const std::vector<std::pair<ProblemKind, std::string>> names{
        {ProblemKind::ShortestPath, "shortest-path"}, {ProblemKind::MaxIS, "max-is"},
        {ProblemKind::ListColoring, "list-coloring"}, {ProblemKind::KColoring, "k-coloring"},
        {ProblemKind::HColoring, "h-coloring"},       {ProblemKind::HWord, "h-word"},
        {ProblemKind::SrsWord, "srs-word"},
    };
    return names;
}

const std::vector<std::string>& vertex_names(const Instance& inst)
{
    if (inst.graph)
        return inst.graph->names();
    if (inst.digraph)
        return inst.digraph->names();
    throw ValidationError("instance has no graph");
}

std::optional<std::size_t> find_index(const std::vector<std::string>& names, const std::string& name)
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

std::uint32_t lookup(const std::vector<std::string>& names, const std::string& name, const char* what)
{
    auto i = find_index(names, name);
    if (!i)
        throw ValidationError(std::string("unknown ") + what + " '" + name + "'");
    return static_cast<std::uint32_t>(*i);
}

const std::vector<std::string>& symbol_names(const Instance& inst)
{
    switch (inst.kind) {
    case ProblemKind::ShortestPath:
    case ProblemKind::MaxIS:
        return vertex_names(inst);
    case ProblemKind::ListColoring:
    case ProblemKind::KColoring:
        return inst.color_names;
    case ProblemKind::HColoring:
        if (inst.h_graph)
            return inst.h_graph->names();
        if (inst.h_digraph)
            return inst.h_digraph->names();
        throw ValidationError("h-coloring instance needs an h-graph: or h-digraph: block");
    case ProblemKind::HWord:
        if (!inst.h_structure)
            throw ValidationError("h-word instance needs an h-structure: or h-digraph: block");
        return inst.h_structure->alphabet.names();
    case ProblemKind::SrsWord:
        if (!inst.srs)
            throw ValidationError("srs-word instance needs an srs: block");
        return inst.srs->alphabet().names();
    }
    throw ValidationError("unknown problem kind");
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += ' ';
        out += p;
    }
    return out;
}

bool same_layers(const std::optional<BucketArrangement>& a, const std::optional<BucketArrangement>& b)
{
    if (a.has_value() != b.has_value())
        return false;
    return !a || a->buckets == b->buckets;
}

} // namespace

std::string problem_name(ProblemKind kind)
{
    for (const auto& [k, name] : problem_names())
        if (k == kind)
            return name;
    return "unknown";
}

ProblemKind parse_problem_name(const std::string& name)
{
    for (const auto& [k, n] : problem_names())
        if (n == name)
            return k;
    throw ValidationError("unknown problem '" + name + "'");
}

bool operator==(const Instance& a, const Instance& b)
{
    return a.kind == b.kind && a.graph == b.graph && a.digraph == b.digraph && a.h_graph == b.h_graph &&
           a.h_digraph == b.h_digraph && a.h_structure == b.h_structure && a.srs == b.srs && a.forest == b.forest &&
           a.color_names == b.color_names && a.lists == b.lists && same_layers(a.layers, b.layers) &&
           a.source == b.source && a.sink == b.sink && a.config_a == b.config_a && a.config_b == b.config_b;
}

Configuration parse_configuration(const Instance& inst, const std::vector<std::string>& tokens)
{
    const auto& names = symbol_names(inst);
    Configuration c;
    for (const auto& t : tokens)
        c.push_back(lookup(names, t, inst.kind == ProblemKind::ShortestPath || inst.kind == ProblemKind::MaxIS
                                         ? "vertex"
                                         : "symbol"));
    if (inst.kind == ProblemKind::MaxIS) {
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw ValidationError("independent set lists a vertex twice");
    }
    return c;
}

std::string render_configuration(const Instance& inst, const Configuration& c)
{
    const auto& names = symbol_names(inst);
    std::vector<std::string> parts;
    for (auto x : c)
        parts.push_back(x < names.size() ? names[x] : "?");
    return join(parts);
}

Instance parse_instance(std::string_view text)
{
    Instance inst;
    const auto lines = tokenize_lines(text);
    std::map<std::string, std::vector<TextLine>> blocks;
    std::map<std::string, TextLine> singles;
    std::optional<TextLine> config_a_line, config_b_line;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& t = lines[i].tokens;
        static const std::vector<std::string> block_keys{"graph:",  "digraph:", "h-graph:", "h-digraph:", "h-structure:",
                                                         "srs:",    "forest:",  "lists:",   "layers:"};
        if (t.size() == 1 && std::find(block_keys.begin(), block_keys.end(), t[0]) != block_keys.end()) {
            if (blocks.count(t[0]))
                throw ParseError(lines[i].number, "block '" + t[0] + "' given twice");
            auto& body = blocks[t[0]];
            std::size_t j = i + 1;
            for (; j < lines.size() && !(lines[j].tokens.size() == 1 && lines[j].tokens[0] == "end"); ++j)
                body.push_back(lines[j]);
            if (j == lines.size())
                throw ParseError(lines[i].number, "block '" + t[0] + "' is missing its 'end' line");
            i = j;
        } else if (t[0] == "config" && t.size() >= 2 && (t[1] == "a:" || t[1] == "b:")) {
            (t[1] == "a:" ? config_a_line : config_b_line) = lines[i];
        } else if (t[0] == "problem:" || t[0] == "colors:" || t[0] == "k:" || t[0] == "source:" || t[0] == "sink:") {
            if (!singles.emplace(t[0], lines[i]).second)
                throw ParseError(lines[i].number, "'" + t[0] + "' given twice");
        } else {
            throw ParseError(lines[i].number, "unexpected keyword '" + t[0] + "'");
        }
    }
    const std::size_t last = lines.empty() ? 1 : lines.back().number;
    auto single_value = [&](const std::string& key) -> std::optional<std::pair<std::size_t, std::string>> {
        auto it = singles.find(key);
        if (it == singles.end())
            return std::nullopt;
        if (it->second.tokens.size() != 2)
            throw ParseError(it->second.number, "expected '" + key + " <value>'");
        return std::make_pair(it->second.number, it->second.tokens[1]);
    };

    auto problem = single_value("problem:");
    if (!problem)
        throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'problem:' line");
    try {
        inst.kind = parse_problem_name(problem->second);
    } catch (const ValidationError& e) {
        throw ParseError(problem->first, e.what());
    }

    if (blocks.count("graph:"))
        inst.graph = parse_graph(blocks["graph:"]);
    if (blocks.count("digraph:"))
        inst.digraph = parse_digraph(blocks["digraph:"]);
    if (blocks.count("h-graph:"))
        inst.h_graph = parse_graph(blocks["h-graph:"]);
    if (blocks.count("h-digraph:"))
        inst.h_digraph = parse_digraph(blocks["h-digraph:"]);
    if (blocks.count("h-structure:"))
        inst.h_structure = parse_h_structure(blocks["h-structure:"]);
    else if (inst.kind == ProblemKind::HWord && inst.h_digraph)
        inst.h_structure = h_structure_from_digraph(*inst.h_digraph);
    if (blocks.count("srs:"))
        inst.srs = parse_srs(blocks["srs:"]);
    if (inst.graph && inst.digraph)
        throw ParseError(last, "give either graph: or digraph:, not both");
    if (inst.h_graph && inst.h_digraph)
        throw ParseError(last, "give either h-graph: or h-digraph:, not both");

    if (auto it = singles.find("colors:"); it != singles.end())
        inst.color_names.assign(it->second.tokens.begin() + 1, it->second.tokens.end());
    if (auto k = single_value("k:")) {
        if (!inst.color_names.empty())
            throw ParseError(k->first, "give either colors: or k:, not both");
        std::size_t count = 0;
        try {
            count = std::stoul(k->second);
        } catch (const std::exception&) {
            throw ParseError(k->first, "k must be a number");
        }
        for (std::size_t c = 0; c < count; ++c)
            inst.color_names.push_back(std::to_string(c));
    }

    auto vertex_of = [&](const TextLine& line, const std::string& name) -> VertexId {
        try {
            return lookup(vertex_names(inst), name, "vertex");
        } catch (const ValidationError& e) {
            throw ParseError(line.number, e.what());
        }
    };
    if (blocks.count("forest:")) {
        try {
            inst.forest = parse_forest(blocks["forest:"], vertex_names(inst));
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError& e) {
            throw ParseError(last, e.what());
        }
    }
    if (blocks.count("lists:")) {
        const auto n = vertex_names(inst).size();
        inst.lists.assign(n, {});
        std::vector<bool> seen(n, false);
        for (const auto& line : blocks["lists:"]) {
            auto v = vertex_of(line, line.tokens[0]);
            if (seen[v])
                throw ParseError(line.number, "list of '" + line.tokens[0] + "' given twice");
            seen[v] = true;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                auto c = find_index(inst.color_names, line.tokens[i]);
                if (!c)
                    throw ParseError(line.number, "unknown color '" + line.tokens[i] + "'");
                inst.lists[v].push_back(static_cast<std::uint32_t>(*c));
            }
            std::sort(inst.lists[v].begin(), inst.lists[v].end());
            inst.lists[v].erase(std::unique(inst.lists[v].begin(), inst.lists[v].end()), inst.lists[v].end());
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw ParseError(last, "every vertex needs a list");
    }
    if (blocks.count("layers:")) {
        BucketArrangement layers;
        for (const auto& line : blocks["layers:"]) {
            std::vector<VertexId> bucket;
            for (const auto& name : line.tokens)
                bucket.push_back(vertex_of(line, name));
            layers.buckets.push_back(std::move(bucket));
        }
        inst.layers = std::move(layers);
    }
    for (const char* key : {"source:", "sink:"})
        if (auto v = single_value(key)) {
            TextLine line{v->first, {}};
            (std::string(key) == "source:" ? inst.source : inst.sink) = vertex_of(line, v->second);
        }

    if (!config_a_line || !config_b_line)
        throw ParseError(last, "instance needs 'config a:' and 'config b:' lines");
    for (auto* line : {&*config_a_line, &*config_b_line}) {
        try {
            auto c = parse_configuration(inst, std::vector<std::string>(line->tokens.begin() + 2, line->tokens.end()));
            (line == &*config_a_line ? inst.config_a : inst.config_b) = std::move(c);
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError& e) {
            throw ParseError(line->number, e.what());
        }
    }
    return inst;
}

namespace {

void write_block(std::ostringstream& out, const char* key, const std::string& body)
{
    out << key << '\n' << body << "end\n";
}

} // namespace

std::string write_instance(const Instance& inst)
{
    std::ostringstream out;
    out << "problem: " << problem_name(inst.kind) << '\n';
    if (inst.graph)
        write_block(out, "graph:", write_graph(*inst.graph));
    if (inst.digraph)
        write_block(out, "digraph:", write_digraph(*inst.digraph));
    if (inst.h_graph)
        write_block(out, "h-graph:", write_graph(*inst.h_graph));
    if (inst.h_digraph)
        write_block(out, "h-digraph:", write_digraph(*inst.h_digraph));
    if (inst.h_structure && !(inst.kind == ProblemKind::HWord && inst.h_digraph))
        write_block(out, "h-structure:", write_h_structure(*inst.h_structure));
    if (inst.srs)
        write_block(out, "srs:", write_srs(*inst.srs));
    if (inst.forest)
        write_block(out, "forest:", write_forest(*inst.forest, vertex_names(inst)));
    if (!inst.color_names.empty())
        out << "colors: " << join(inst.color_names) << '\n';
    if (!inst.lists.empty()) {
        std::ostringstream body;
        const auto& names = vertex_names(inst);
        for (std::size_t v = 0; v < inst.lists.size(); ++v) {
            body << names[v];
            for (auto c : inst.lists[v])
                body << ' ' << inst.color_names.at(c);
            body << '\n';
        }
        write_block(out, "lists:", body.str());
    }
    if (inst.layers) {
        std::ostringstream body;
        const auto& names = vertex_names(inst);
        for (const auto& bucket : inst.layers->buckets) {
            std::vector<std::string> parts;
            for (auto v : bucket)
                parts.push_back(names[v]);
            body << join(parts) << '\n';
        }
        write_block(out, "layers:", body.str());
    }
    if (inst.source)
        out << "source: " << vertex_names(inst)[*inst.source] << '\n';
    if (inst.sink)
        out << "sink: " << vertex_names(inst)[*inst.sink] << '\n';
    out << "config a: " << render_configuration(inst, inst.config_a) << '\n';
    out << "config b: " << render_configuration(inst, inst.config_b) << '\n';
    return out.str();
}

ReconfigurationSequence parse_sequence(const Instance& inst, std::string_view text)
{
    ReconfigurationSequence seq;
    for (const auto& line : tokenize_lines(text)) {
        try {
            seq.steps.push_back(parse_configuration(inst, line.tokens));
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError& e) {
            throw ParseError(line.number, e.what());
        }
    }
    return seq;
}

std::string write_sequence(const Instance& inst, const ReconfigurationSequence& seq)
{
    std::string out;
    for (const auto& c : seq.steps)
        out += render_configuration(inst, c) + '\n';
    return out;
}

Digraph target_digraph(const Instance& inst)
{
    if (inst.h_digraph)
        return *inst.h_digraph;
    if (inst.h_graph)
        return symmetric_digraph(*inst.h_graph);
    throw ValidationError("instance needs an h-graph: or h-digraph: block");
}

Digraph source_digraph(const Instance& inst)
{
    if (inst.digraph)
        return *inst.digraph;
    if (inst.graph)
        return symmetric_digraph(*inst.graph);
    throw ValidationError("instance needs a graph: or digraph: block");
}

ConfigurationSpace make_space(const Instance& inst)
{
    switch (inst.kind) {
    case ProblemKind::ShortestPath:
        if (!inst.graph || !inst.source || !inst.sink)
            throw ValidationError("shortest-path instance needs graph:, source: and sink:");
        return shortest_path_space(*inst.graph, *inst.source, *inst.sink, inst.config_a, inst.config_b);
    case ProblemKind::MaxIS:
        if (!inst.graph)
            throw ValidationError("max-is instance needs a graph: block");
        if (inst.config_a.size() != inst.config_b.size())
            throw ValidationError("independent sets must have equal size");
        return max_is_space(*inst.graph, inst.config_a.size(), inst.config_a, inst.config_b);
    case ProblemKind::ListColoring:
        if (!inst.graph || inst.lists.empty())
            throw ValidationError("list-coloring instance needs graph: and lists: blocks");
        return list_coloring_space(*inst.graph, static_cast<std::uint32_t>(inst.color_names.size()), inst.lists,
                                   inst.config_a, inst.config_b);
    case ProblemKind::KColoring:
        if (!inst.graph)
            throw ValidationError("k-coloring instance needs a graph: block");
        return k_coloring_space(*inst.graph, static_cast<std::uint32_t>(inst.color_names.size()), inst.config_a,
                                inst.config_b);
    case ProblemKind::HColoring:
        return h_coloring_space(source_digraph(inst), target_digraph(inst), inst.config_a, inst.config_b);
    case ProblemKind::HWord:
        if (!inst.h_structure)
            throw ValidationError("h-word instance needs an h-structure: or h-digraph: block");
        return hword_space(inst.h_structure->digraph, to_word(inst.config_a), to_word(inst.config_b));
    case ProblemKind::SrsWord:
        if (!inst.srs)
            throw ValidationError("srs-word instance needs an srs: block");
        return srs_word_space(*inst.srs, to_word(inst.config_a), to_word(inst.config_b));
    }
    throw ValidationError("unknown problem kind");
}

} // namespace reconf::cli
