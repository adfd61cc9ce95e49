#include "reconf/split.hpp"

#include "reconf/error.hpp"

#include <set>

namespace reconf {

SplitResult split_rules(const StringRewritingSystem& sys)
{
    if (!sys.symmetric())
        throw ValidationError("rule splitting needs a symmetric system");
    if (!sys.is_two_balanced())
        throw ValidationError("rule splitting needs a 2-balanced system");
    const auto& orig = sys.alphabet();
    std::set<std::string> taken(orig.names().begin(), orig.names().end());
    auto fresh = [&](std::string name) {
        while (taken.count(name))
            name += '\'';
        taken.insert(name);
        return name;
    };

    std::vector<Rule> violating;
    for (const auto& r : sys.rules())
        if (r.lhs[0] != r.rhs[0] && r.lhs[1] != r.rhs[1])
            violating.push_back(r);

    std::vector<std::string> names = orig.names();
    std::vector<std::pair<std::string, std::string>> fresh_names;
    for (std::size_t j = 1; j <= violating.size(); ++j) {
        auto x = fresh("X" + std::to_string(j));
        auto y = fresh("Y" + std::to_string(j));
        names.push_back(x);
        names.push_back(y);
        fresh_names.emplace_back(x, y);
    }
    Alphabet gamma(names);
    auto lift = [&](Symbol s) { return gamma.at(orig.name(s)); };

    SplitResult result;
    result.original_alphabet = orig;
    std::vector<Rule> rules;
    for (const auto& r : sys.rules())
        if (r.lhs[0] == r.rhs[0] || r.lhs[1] == r.rhs[1])
            rules.push_back({{lift(r.lhs[0]), lift(r.lhs[1])}, {lift(r.rhs[0]), lift(r.rhs[1])}});
    for (std::size_t j = 0; j < violating.size(); ++j) {
        const auto& r = violating[j];
        SplitRule sr{r,
                     gamma.at(fresh_names[j].first),
                     gamma.at(fresh_names[j].second),
                     lift(r.lhs[0]),
                     lift(r.lhs[1]),
                     lift(r.rhs[0]),
                     lift(r.rhs[1])};
        rules.push_back({{sr.a1, sr.a2}, {sr.x, sr.a2}});
        rules.push_back({{sr.x, sr.a2}, {sr.x, sr.y}});
        rules.push_back({{sr.x, sr.y}, {sr.b1, sr.y}});
        rules.push_back({{sr.b1, sr.y}, {sr.b1, sr.b2}});
        result.split_rules.push_back(sr);
    }
    result.system = StringRewritingSystem(gamma, std::move(rules), true);
    return result;
}

Word retract(const SplitResult& split, const Word& w)
{
    const auto& gamma = split.system.alphabet();
    const auto& orig = split.original_alphabet;
    std::vector<const SplitRule*> by_symbol(gamma.size(), nullptr);
    for (const auto& sr : split.split_rules)
        by_symbol[sr.x.id] = by_symbol[sr.y.id] = &sr;
    auto down = [&](Symbol s) { return orig.at(gamma.name(s)); };

    Word out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!gamma.contains(w[i]))
            throw DecodeError("symbol outside the split alphabet");
        const auto* sr = by_symbol[w[i].id];
        if (!sr) {
            out.push_back(down(w[i]));
        } else if (w[i] == sr->x && i + 1 < w.size() && w[i + 1] == sr->y) {
            out.push_back(down(sr->a1));
            out.push_back(down(sr->a2));
            ++i;
        } else if (w[i] == sr->x) {
            out.push_back(down(sr->a1));
        } else {
            out.push_back(down(sr->b2));
        }
    }
    return out;
}

Word embed(const SplitResult& split, const Word& w)
{
    return translate_word(w, split.original_alphabet, split.system.alphabet());
}

} // namespace reconf
