#include "reconf/srs.hpp"

#include "reconf/adapters.hpp"
#include "reconf/error.hpp"

#include <algorithm>
#include <sstream>

namespace reconf {

StringRewritingSystem::StringRewritingSystem(Alphabet alphabet, std::vector<Rule> rules, bool symmetric)
    : alphabet_(std::move(alphabet)), symmetric_(symmetric)
{
    for (auto& r : rules) {
        if (r.lhs.empty() || r.rhs.empty())
            throw ValidationError("rewriting rules must have non-empty sides");
        for (const auto* side : {&r.lhs, &r.rhs})
            for (auto s : *side)
                if (!alphabet_.contains(s))
                    throw ValidationError("rule uses a symbol outside the alphabet");
        if (r.lhs == r.rhs)
            continue;
        if (symmetric_ && r.rhs < r.lhs)
            std::swap(r.lhs, r.rhs);
        two_balanced_ = two_balanced_ && r.lhs.size() == 2 && r.rhs.size() == 2;
        rules_.push_back(std::move(r));
    }
    std::sort(rules_.begin(), rules_.end());
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());

    if (two_balanced_) {
        const auto k = alphabet_.size();
        window_index_.assign(k * k, {});
        for (const auto& r : directed_rules())
            window_index_[r.lhs[0].id * k + r.lhs[1].id].emplace_back(r.rhs[0], r.rhs[1]);
        for (auto& list : window_index_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }
}

bool StringRewritingSystem::is_balanced() const
{
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.lhs.size() == r.rhs.size(); });
}

bool StringRewritingSystem::is_two_balanced() const
{
    return two_balanced_;
}

bool StringRewritingSystem::is_one_side_fixed() const
{
    return two_balanced_ && std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) {
               return r.lhs[0] == r.rhs[0] || r.lhs[1] == r.rhs[1];
           });
}

std::vector<Rule> StringRewritingSystem::directed_rules() const
{
    std::vector<Rule> out;
    for (const auto& r : rules_) {
        out.push_back(r);
        if (symmetric_)
            out.push_back(Rule{r.rhs, r.lhs});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const std::vector<std::pair<Symbol, Symbol>>& StringRewritingSystem::window_successors(Symbol x, Symbol y) const
{
    static const std::vector<std::pair<Symbol, Symbol>> none;
    if (!two_balanced_ || !alphabet_.contains(x) || !alphabet_.contains(y))
        return none;
    return window_index_[x.id * alphabet_.size() + y.id];
}

Word apply_rule_at(const Word& w, const Rule& r, std::size_t pos)
{
    if (pos + r.lhs.size() > w.size() || !std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + pos))
        throw RuleApplicationError("rule left-hand side does not occur at position " + std::to_string(pos));
    Word out(w.begin(), w.begin() + pos);
    out.insert(out.end(), r.rhs.begin(), r.rhs.end());
    out.insert(out.end(), w.begin() + pos + r.lhs.size(), w.end());
    return out;
}

std::vector<Word> rewrite_neighbors(const Word& w, const StringRewritingSystem& sys)
{
    std::vector<Word> out;
    if (sys.is_two_balanced()) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            for (auto [x, y] : sys.window_successors(w[i], w[i + 1])) {
                Word next = w;
                next[i] = x;
                next[i + 1] = y;
                out.push_back(std::move(next));
            }
    } else {
        for (const auto& r : sys.directed_rules())
            for (std::size_t i = 0; i + r.lhs.size() <= w.size(); ++i)
                if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + i))
                    out.push_back(apply_rule_at(w, r, i));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_rewrite_step(const Word& from, const Word& to, const StringRewritingSystem& sys)
{
    if (sys.is_two_balanced()) {
        if (from.size() != to.size())
            return false;
        std::size_t first = from.size(), last = 0;
        for (std::size_t i = 0; i < from.size(); ++i)
            if (from[i] != to[i]) {
                first = std::min(first, i);
                last = i;
            }
        if (first == from.size() || last - first > 1)
            return false;
        auto window_ok = [&](std::size_t i) {
            if (i + 1 >= from.size())
                return false;
            const auto& succ = sys.window_successors(from[i], from[i + 1]);
            return std::binary_search(succ.begin(), succ.end(), std::make_pair(to[i], to[i + 1]));
        };
        if (last > first)
            return window_ok(first);
        return (first > 0 && window_ok(first - 1)) || window_ok(first);
    }
    for (const auto& r : sys.directed_rules())
        for (std::size_t i = 0; i + r.lhs.size() <= from.size(); ++i)
            if (std::equal(r.lhs.begin(), r.lhs.end(), from.begin() + i) && apply_rule_at(from, r, i) == to)
                return true;
    return false;
}

std::optional<WordSequence> srs_reachability(const Word& s, const Word& t, const StringRewritingSystem& sys,
                                             const SearchLimits& limits)
{
    if (sys.is_balanced() && s.size() != t.size())
        return std::nullopt;
    auto result = bfs_reach(srs_word_space(sys, s, t), limits);
    if (!result.sequence)
        return std::nullopt;
    WordSequence out;
    for (const auto& c : result.sequence->steps)
        out.push_back(to_word(c));
    return out;
}

StringRewritingSystem parse_srs(std::string_view text)
{
    return parse_srs(tokenize_lines(text));
}

StringRewritingSystem parse_srs(const std::vector<TextLine>& lines)
{
    std::optional<Alphabet> alphabet;
    struct PendingRule {
        std::size_t line;
        std::vector<std::string> lhs, rhs;
        bool two_way;
    };
    std::vector<PendingRule> pending;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "alphabet:") {
            if (alphabet)
                throw ParseError(line.number, "alphabet declared twice");
            try {
                alphabet = Alphabet(std::vector<std::string>(t.begin() + 1, t.end()));
            } catch (const ValidationError& e) {
                throw ParseError(line.number, e.what());
            }
        } else if (t[0] == "rule:") {
            auto arrow = std::find_if(t.begin(), t.end(), [](const std::string& s) { return s == "<->" || s == "->"; });
            if (arrow == t.end())
                throw ParseError(line.number, "rule needs '<->' or '->'");
            pending.push_back({line.number, {t.begin() + 1, arrow}, {arrow + 1, t.end()}, *arrow == "<->"});
        } else {
            throw ParseError(line.number, "unexpected keyword '" + t[0] + "'");
        }
    }
    if (!alphabet)
        throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'alphabet:' line");
    const bool symmetric = std::all_of(pending.begin(), pending.end(), [](const PendingRule& p) { return p.two_way; });
    std::vector<Rule> rules;
    for (const auto& p : pending) {
        Rule r;
        try {
            for (const auto& s : p.lhs)
                r.lhs.push_back(alphabet->at(s));
            for (const auto& s : p.rhs)
                r.rhs.push_back(alphabet->at(s));
        } catch (const ValidationError& e) {
            throw ParseError(p.line, e.what());
        }
        if (r.lhs.empty() || r.rhs.empty())
            throw ParseError(p.line, "rule sides must be non-empty");
        if (!symmetric && p.two_way)
            rules.push_back(Rule{r.rhs, r.lhs});
        rules.push_back(std::move(r));
    }
    return StringRewritingSystem(std::move(*alphabet), std::move(rules), symmetric);
}

std::string write_srs(const StringRewritingSystem& sys)
{
    std::ostringstream out;
    out << "alphabet:";
    for (const auto& n : sys.alphabet().names())
        out << ' ' << n;
    out << '\n';
    const char* arrow = sys.symmetric() ? " <-> " : " -> ";
    for (const auto& r : sys.rules())
        out << "rule: " << sys.alphabet().render(r.lhs) << arrow << sys.alphabet().render(r.rhs) << '\n';
    return out.str();
}

Configuration to_configuration(const Word& w)
{
    Configuration c;
    c.reserve(w.size());
    for (auto s : w)
        c.push_back(s.id);
    return c;
}

Word to_word(const Configuration& c)
{
    Word w;
    w.reserve(c.size());
    for (auto x : c)
        w.push_back(Symbol{x});
    return w;
}

} // namespace reconf
