#include "reconf/text_format.hpp"

#include "reconf/error.hpp"
#include "reconf/symbol.hpp"

#include <fstream>
#include <sstream>

namespace reconf {

std::vector<TextLine> tokenize_lines(std::string_view text, std::size_t first_line)
{
    std::vector<TextLine> out;
    std::size_t number = first_line;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = split_tokens(line);
        if (!tokens.empty())
            out.push_back(TextLine{number, std::move(tokens)});
        ++number;
        pos = end + 1;
    }
    return out;
}

namespace {

template <typename G, typename AddLink>
G parse_links(const std::vector<TextLine>& lines, const char* link_keyword, AddLink add_link)
{
    G g;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        try {
            if (t[0] == "v") {
                if (t.size() != 2)
                    throw ParseError(line.number, "expected 'v <name>'");
                g.add_vertex(t[1]);
            } else if (t[0] == link_keyword) {
                if (t.size() != 3)
                    throw ParseError(line.number, std::string("expected '") + link_keyword + " <u> <v>'");
                add_link(g, g.at(t[1]), g.at(t[2]));
            } else {
                throw ParseError(line.number, "unexpected keyword '" + t[0] + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError& e) {
            throw ParseError(line.number, e.what());
        }
    }
    return g;
}

} // namespace

Graph parse_graph(const std::vector<TextLine>& lines)
{
    return parse_links<Graph>(lines, "e", [](Graph& g, VertexId u, VertexId v) { g.add_edge(u, v); });
}

Graph parse_graph(std::string_view text)
{
    return parse_graph(tokenize_lines(text));
}

std::string write_graph(const Graph& g)
{
    std::ostringstream out;
    for (const auto& n : g.names())
        out << "v " << n << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << g.name(u) << ' ' << g.name(v) << '\n';
    return out.str();
}

Digraph parse_digraph(const std::vector<TextLine>& lines)
{
    return parse_links<Digraph>(lines, "a", [](Digraph& g, VertexId u, VertexId v) { g.add_arc(u, v); });
}

Digraph parse_digraph(std::string_view text)
{
    return parse_digraph(tokenize_lines(text));
}

std::string write_digraph(const Digraph& d)
{
    std::ostringstream out;
    for (const auto& n : d.names())
        out << "v " << n << '\n';
    for (auto [u, v] : d.arcs())
        out << "a " << d.name(u) << ' ' << d.name(v) << '\n';
    return out.str();
}

RootedForest parse_forest(const std::vector<TextLine>& lines, const std::vector<std::string>& names_of)
{
    std::unordered_map<std::string, VertexId> index;
    for (VertexId v = 0; v < names_of.size(); ++v)
        index.emplace(names_of[v], v);
    auto lookup = [&](const TextLine& line, const std::string& name) {
        auto it = index.find(name);
        if (it == index.end())
            throw ParseError(line.number, "unknown vertex '" + name + "'");
        return it->second;
    };
    std::vector<std::optional<VertexId>> parent(names_of.size());
    std::vector<bool> seen(names_of.size(), false);
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        VertexId v = 0;
        if (t[0] == "root" && t.size() == 2) {
            v = lookup(line, t[1]);
        } else if (t[0] == "child" && t.size() == 3) {
            v = lookup(line, t[1]);
            parent[v] = lookup(line, t[2]);
        } else {
            throw ParseError(line.number, "expected 'root <v>' or 'child <v> <parent>'");
        }
        if (seen[v])
            throw ParseError(line.number, "vertex '" + t[1] + "' placed twice in the forest");
        seen[v] = true;
    }
    for (VertexId v = 0; v < seen.size(); ++v)
        if (!seen[v])
            throw ValidationError("forest does not place vertex '" + names_of[v] + "'");
    return RootedForest(std::move(parent));
}

std::string write_forest(const RootedForest& f, const std::vector<std::string>& names_of)
{
    std::ostringstream out;
    for (VertexId v = 0; v < f.size(); ++v) {
        if (auto p = f.parent(v))
            out << "child " << names_of.at(v) << ' ' << names_of.at(*p) << '\n';
        else
            out << "root " << names_of.at(v) << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ValidationError("cannot write '" + path + "'");
    out << contents;
}

} // namespace reconf
