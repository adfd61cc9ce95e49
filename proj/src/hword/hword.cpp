#include "reconf/hword.hpp"

#include "reconf/adapters.hpp"
#include "reconf/error.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reconf {

namespace {

/// Rebuilds d with vertices in sorted name order so vertex ids match the
/// ids of the Alphabet over the same names.
Digraph sorted_digraph(const Digraph& d, const Alphabet& names)
{
    Digraph out(names.names());
    for (auto [u, v] : d.arcs())
        out.add_arc(names.at(d.name(u)).id, names.at(d.name(v)).id);
    return out;
}

std::string component_name(const Alphabet& gamma, std::optional<Symbol> s)
{
    return s ? gamma.name(*s) : std::string(pair_padding);
}

} // namespace

std::optional<Symbol> HStructure::pair_symbol(std::optional<Symbol> left, std::optional<Symbol> right) const
{
    if (auto s = alphabet.find(pair_name(gamma, PairParts{left, right})); s && is_pair(*s))
        return s;
    return std::nullopt;
}

std::string pair_name(const Alphabet& gamma, const PairParts& parts)
{
    return "[" + component_name(gamma, parts.left) + "," + component_name(gamma, parts.right) + "]";
}

bool is_h_word(const Word& w, const Digraph& h)
{
    for (auto s : w)
        if (s.id >= h.num_vertices())
            throw ValidationError("symbol outside the alphabet of H");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!h.has_arc(w[i].id, w[i + 1].id))
            return false;
    return true;
}

bool is_h_word(const Word& w, const HStructure& h)
{
    return is_h_word(w, h.digraph);
}

std::vector<Word> hword_neighbors(const Word& w, const Digraph& h)
{
    if (!is_h_word(w, h))
        throw ValidationError("word is not an H-word");
    auto space = hword_space(h, w, w);
    std::vector<Word> out;
    for (const auto& c : space.neighbors(space.initial))
        out.push_back(to_word(c));
    return out;
}

HStructure build_h_from_srs(const StringRewritingSystem& sys)
{
    if (!sys.symmetric() || !sys.is_two_balanced())
        throw ConstructionError("H construction needs a symmetric 2-balanced rewriting system");
    if (!sys.is_one_side_fixed())
        throw ConstructionError("H construction needs every rule to keep its first or second symbol; "
                                "apply split_rules first");
    const auto& gamma = sys.alphabet();
    if (gamma.find(pair_padding))
        throw ConstructionError(std::string("alphabet symbol '") + pair_padding + "' is reserved for padding");

    std::vector<std::optional<Symbol>> components{std::nullopt};
    for (auto a : gamma.symbols())
        components.emplace_back(a);

    const auto m = sys.rules().size();
    std::vector<std::string> names{"$", "¢"};
    for (std::size_t i = 1; i <= m; ++i)
        names.push_back("x" + std::to_string(i));
    std::map<std::string, PairParts> pair_of;
    for (auto l : components)
        for (auto r : components) {
            PairParts p{l, r};
            auto name = pair_name(gamma, p);
            if (!pair_of.emplace(name, p).second)
                throw ConstructionError("pair symbol name '" + name + "' is ambiguous");
            names.push_back(name);
        }
    {
        std::set<std::string> unique(names.begin(), names.end());
        if (unique.size() != names.size())
            throw ConstructionError("symbol names of H collide");
    }

    HStructure h;
    h.gamma = gamma;
    h.alphabet = Alphabet(names);
    h.digraph = Digraph(h.alphabet.names());
    h.classes.assign(h.alphabet.size(), SymbolClass::Special);
    h.pairs.assign(h.alphabet.size(), std::nullopt);
    h.rule_of.assign(h.alphabet.size(), std::nullopt);
    for (const auto& [name, parts] : pair_of) {
        auto s = h.alphabet.at(name);
        h.classes[s.id] = SymbolClass::Pair;
        h.pairs[s.id] = parts;
    }
    h.dollar = h.alphabet.at("$");
    h.cent = h.alphabet.at("¢");
    for (std::size_t i = 0; i < m; ++i)
        h.rule_of[h.alphabet.at("x" + std::to_string(i + 1)).id] = sys.rules()[i];

    auto pair = [&](std::optional<Symbol> l, std::optional<Symbol> r) { return h.pair_symbol(l, r)->id; };
    auto arc = [&](std::uint32_t u, std::uint32_t v) { h.digraph.add_arc(u, v); };

    // Overlapping pairs (a,b)(b,c); b is a real symbol, a and c may be padding.
    for (auto a : components)
        for (auto b : gamma.symbols())
            for (auto c : components)
                arc(pair(a, b), pair(b, c));
    for (auto a : gamma.symbols()) {
        arc(h.dollar->id, pair(std::nullopt, a));
        arc(pair(a, std::nullopt), h.cent->id);
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto x = h.alphabet.at("x" + std::to_string(i + 1)).id;
        const auto& r = sys.rules()[i];
        for (auto dot : components) {
            arc(pair(dot, r.lhs[0]), x);
            arc(pair(dot, r.rhs[0]), x);
            arc(x, pair(r.lhs[1], dot));
            arc(x, pair(r.rhs[1], dot));
        }
    }
    return h;
}

Word psi(const Word& s, const HStructure& h)
{
    if (s.empty())
        throw DomainError("psi needs a nonempty word");
    if (!h.dollar || !h.cent)
        throw DomainError("H structure has no $ and ¢ symbols");
    for (auto a : s)
        if (!h.gamma.contains(a))
            throw DomainError("symbol outside the rewriting alphabet");
    Word w{*h.dollar};
    std::optional<Symbol> prev;
    for (auto a : s) {
        auto p = h.pair_symbol(prev, a);
        if (!p)
            throw DomainError("H structure lacks pair symbol " + pair_name(h.gamma, {prev, a}));
        w.push_back(*p);
        prev = a;
    }
    auto last = h.pair_symbol(prev, std::nullopt);
    if (!last)
        throw DomainError("H structure lacks pair symbol " + pair_name(h.gamma, {prev, std::nullopt}));
    w.push_back(*last);
    w.push_back(*h.cent);
    return w;
}

bool has_boundary_pattern(const Word& w, const HStructure& h)
{
    if (w.size() < 4 || !h.dollar || !h.cent)
        return false;
    for (auto s : w)
        if (!h.alphabet.contains(s))
            return false;
    const auto n = w.size();
    if (w[0] != *h.dollar || w[n - 1] != *h.cent || !h.is_pair(w[1]) || !h.is_pair(w[n - 2]))
        return false;
    const auto& first = *h.pairs[w[1].id];
    const auto& last = *h.pairs[w[n - 2].id];
    return !first.left && first.right && last.left && !last.right;
}

Word phi(const Word& w, const HStructure& h)
{
    if (!has_boundary_pattern(w, h))
        throw DecodeError("word does not start with $ [␣,·] and end with [·,␣] ¢");
    const auto n = w.size() - 3;
    Word out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        std::optional<Symbol> from_left, from_right;
        bool left_pair = h.is_pair(w[i]);
        bool right_pair = h.is_pair(w[i + 1]);
        if (left_pair)
            from_left = h.pairs[w[i].id]->right;
        if (right_pair)
            from_right = h.pairs[w[i + 1].id]->left;
        if (!left_pair && !right_pair)
            throw DecodeError("two consecutive special symbols at positions " + std::to_string(i) + " and " +
                              std::to_string(i + 1));
        if (left_pair && right_pair && from_left != from_right)
            throw DecodeError("overlapping pair symbols disagree at position " + std::to_string(i));
        auto value = left_pair ? from_left : from_right;
        if (!value)
            throw DecodeError("padding inside the decoded word at position " + std::to_string(i));
        out.push_back(*value);
    }
    return out;
}

std::vector<Word> lift_srs_sequence(const WordSequence& seq, const StringRewritingSystem& sys, const HStructure& h)
{
    if (seq.empty())
        throw ValidationError("empty rewriting sequence");
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (!is_rewrite_step(seq[k], seq[k + 1], sys))
            throw ValidationError("step " + std::to_string(k + 1) + " of the rewriting sequence is not a rule application");

    std::vector<Word> out{psi(seq.front(), h)};
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        const auto& from = seq[k];
        const auto& to = seq[k + 1];
        // Locate a window and a rule realising the step.
        std::optional<std::size_t> pos;
        std::optional<std::size_t> rule_index;
        for (std::size_t p = 0; p + 1 < from.size() && !pos; ++p) {
            bool outside_equal = true;
            for (std::size_t q = 0; q < from.size() && outside_equal; ++q)
                outside_equal = q == p || q == p + 1 || from[q] == to[q];
            if (!outside_equal)
                continue;
            const Word before{from[p], from[p + 1]};
            const Word after{to[p], to[p + 1]};
            for (std::size_t i = 0; i < sys.rules().size(); ++i) {
                const auto& r = sys.rules()[i];
                if ((r.lhs == before && r.rhs == after) || (r.rhs == before && r.lhs == after)) {
                    pos = p;
                    rule_index = i;
                    break;
                }
            }
        }
        if (!pos)
            throw ValidationError("rewriting step " + std::to_string(k + 1) + " matches no rule of H");
        const auto x = h.alphabet.find("x" + std::to_string(*rule_index + 1));
        if (!x || h.rule_of[x->id] != sys.rules()[*rule_index])
            throw ValidationError("H structure does not match the rewriting system");

        // psi positions p+1, p+2, p+3 hold (., a1) (a1, a2) (a2, .).
        const auto p = *pos;
        const auto a1 = from[p], b1 = to[p], b2 = to[p + 1];
        Word w = out.back();
        w[p + 2] = *x;
        out.push_back(w);
        if (a1 != b1) {
            const auto& parts = *h.pairs[w[p + 1].id];
            w[p + 1] = *h.pair_symbol(parts.left, b1);
        } else {
            const auto& parts = *h.pairs[w[p + 3].id];
            w[p + 3] = *h.pair_symbol(b2, parts.right);
        }
        out.push_back(w);
        w[p + 2] = *h.pair_symbol(b1, b2);
        out.push_back(w);
    }
    return out;
}

SearchResult hword_reachability(const Word& s, const Word& t, const HStructure& h, const SearchLimits& limits)
{
    auto space = hword_space(h.digraph, s, t);
    if (has_boundary_pattern(s, h) && has_boundary_pattern(t, h)) {
        auto hp = std::make_shared<const HStructure>(h);
        space.neighbors = [hp, inner = space.neighbors](const Configuration& c) {
            auto out = inner(c);
            for (const auto& next : out)
                if (!has_boundary_pattern(to_word(next), *hp))
                    throw std::logic_error("H-word search left the $ [␣,·] ... [·,␣] ¢ boundary pattern");
            return out;
        };
    }
    return bfs_reach(space, limits);
}

HStructure h_structure_from_digraph(const Digraph& d)
{
    HStructure h;
    h.alphabet = Alphabet(d.names());
    h.digraph = sorted_digraph(d, h.alphabet);
    h.classes.assign(h.alphabet.size(), SymbolClass::Special);
    h.pairs.assign(h.alphabet.size(), std::nullopt);
    h.rule_of.assign(h.alphabet.size(), std::nullopt);
    return h;
}

HStructure parse_h_structure(const std::vector<TextLine>& lines)
{
    std::vector<TextLine> graph_lines;
    std::vector<TextLine> extra;
    for (const auto& line : lines)
        (line.tokens[0] == "v" || line.tokens[0] == "a" ? graph_lines : extra).push_back(line);
    auto h = h_structure_from_digraph(parse_digraph(graph_lines));

    auto symbol = [&](const TextLine& line, const std::string& name) {
        auto s = h.alphabet.find(name);
        if (!s)
            throw ParseError(line.number, "unknown symbol '" + name + "'");
        return *s;
    };
    std::set<std::string> component_names;
    for (const auto& line : extra) {
        const auto& t = line.tokens;
        if (t[0] == "pair" && t.size() == 4) {
            for (std::size_t i = 2; i <= 3; ++i)
                if (t[i] != pair_padding)
                    component_names.insert(t[i]);
        }
    }
    h.gamma = Alphabet(std::vector<std::string>(component_names.begin(), component_names.end()));
    auto component = [&](const std::string& name) -> std::optional<Symbol> {
        if (name == pair_padding)
            return std::nullopt;
        return h.gamma.at(name);
    };

    for (const auto& line : extra) {
        const auto& t = line.tokens;
        if (t[0] == "class") {
            if (t.size() != 3 || (t[2] != "special" && t[2] != "pair"))
                throw ParseError(line.number, "expected 'class <sym> special|pair'");
            h.classes[symbol(line, t[1]).id] = t[2] == "pair" ? SymbolClass::Pair : SymbolClass::Special;
        } else if (t[0] == "pair") {
            if (t.size() != 4)
                throw ParseError(line.number, "expected 'pair <sym> <left> <right>'");
            h.pairs[symbol(line, t[1]).id] = PairParts{component(t[2]), component(t[3])};
        } else if (t[0] == "rulesym") {
            if (t.size() != 7 || t[4] != "<->")
                throw ParseError(line.number, "expected 'rulesym <sym> l1 l2 <-> r1 r2'");
            try {
                h.rule_of[symbol(line, t[1]).id] =
                    Rule{{h.gamma.at(t[2]), h.gamma.at(t[3])}, {h.gamma.at(t[5]), h.gamma.at(t[6])}};
            } catch (const ParseError&) {
                throw;
            } catch (const ValidationError& e) {
                throw ParseError(line.number, e.what());
            }
        } else {
            throw ParseError(line.number, "unexpected keyword '" + t[0] + "'");
        }
    }
    for (auto s : h.alphabet.symbols()) {
        if (h.is_pair(s) != h.pairs[s.id].has_value())
            throw ValidationError("symbol '" + h.alphabet.name(s) + "' needs both 'class pair' and 'pair' lines");
        if (h.is_pair(s) && h.alphabet.name(s) != pair_name(h.gamma, *h.pairs[s.id]))
            throw ValidationError("pair symbol '" + h.alphabet.name(s) + "' must be named " +
                                  pair_name(h.gamma, *h.pairs[s.id]));
    }
    for (const char* marker : {"$", "¢"})
        if (auto s = h.alphabet.find(marker); s && !h.is_pair(*s))
            (std::string(marker) == "$" ? h.dollar : h.cent) = s;
    return h;
}

HStructure parse_h_structure(std::string_view text)
{
    return parse_h_structure(tokenize_lines(text));
}

std::string write_h_structure(const HStructure& h)
{
    std::ostringstream out;
    out << write_digraph(h.digraph);
    for (auto s : h.alphabet.symbols())
        if (h.is_pair(s))
            out << "class " << h.alphabet.name(s) << " pair\n";
    for (auto s : h.alphabet.symbols())
        if (const auto& p = h.pairs[s.id])
            out << "pair " << h.alphabet.name(s) << ' ' << component_name(h.gamma, p->left) << ' '
                << component_name(h.gamma, p->right) << '\n';
    for (auto s : h.alphabet.symbols())
        if (const auto& r = h.rule_of[s.id])
            out << "rulesym " << h.alphabet.name(s) << ' ' << h.gamma.name(r->lhs[0]) << ' ' << h.gamma.name(r->lhs[1])
                << " <-> " << h.gamma.name(r->rhs[0]) << ' ' << h.gamma.name(r->rhs[1]) << '\n';
    return out.str();
}

} // namespace reconf
