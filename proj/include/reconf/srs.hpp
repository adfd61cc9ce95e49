#pragma once

#include "reconf/engine.hpp"
#include "reconf/symbol.hpp"
#include "reconf/text_format.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reconf {

struct Rule {
    Word lhs;
    Word rhs;

    friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// A string rewriting system. Symmetric systems store each rule once as an
/// unordered pair (lhs < rhs) and apply it in both directions.
class StringRewritingSystem {
public:
    StringRewritingSystem() = default;
    /// Rules are normalised: empty sides rejected, identity rules dropped,
    /// symmetric pairs oriented, sorted and deduplicated.
    StringRewritingSystem(Alphabet alphabet, std::vector<Rule> rules, bool symmetric);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Rule>& rules() const { return rules_; }
    bool symmetric() const { return symmetric_; }

    bool is_balanced() const;
    bool is_two_balanced() const;
    /// Every rule {a1 a2, b1 b2} has a1 == b1 or a2 == b2.
    bool is_one_side_fixed() const;

    /// All rules as ordered pairs (both orientations for symmetric systems).
    std::vector<Rule> directed_rules() const;

    /// Right-hand sides reachable in one step from the length-2 window (x, y).
    const std::vector<std::pair<Symbol, Symbol>>& window_successors(Symbol x, Symbol y) const;

    friend bool operator==(const StringRewritingSystem& a, const StringRewritingSystem& b)
    {
        return a.alphabet_ == b.alphabet_ && a.rules_ == b.rules_ && a.symmetric_ == b.symmetric_;
    }

private:
    Alphabet alphabet_;
    std::vector<Rule> rules_;
    bool symmetric_ = true;
    bool two_balanced_ = true;
    std::vector<std::vector<std::pair<Symbol, Symbol>>> window_index_;
};

/// Replaces the occurrence of r.lhs at `pos`. Throws RuleApplicationError
/// when there is no match.
Word apply_rule_at(const Word& w, const Rule& r, std::size_t pos);

/// Words obtainable by exactly one rule application, sorted and deduplicated.
std::vector<Word> rewrite_neighbors(const Word& w, const StringRewritingSystem& sys);

/// True iff `to` is obtained from `from` by exactly one rule application.
bool is_rewrite_step(const Word& from, const Word& to, const StringRewritingSystem& sys);

using WordSequence = std::vector<Word>;

/// Shortest rewriting sequence from s to t (first element s, last t).
/// Balanced systems answer immediately for different lengths.
std::optional<WordSequence> srs_reachability(const Word& s, const Word& t, const StringRewritingSystem& sys,
                                             const SearchLimits& limits = {});

// Text format: `alphabet: s1 s2 ...` then `rule: l1 l2 <-> r1 r2` lines
// (`->` for a one-way rule).
StringRewritingSystem parse_srs(std::string_view text);
StringRewritingSystem parse_srs(const std::vector<TextLine>& lines);
std::string write_srs(const StringRewritingSystem& sys);

Configuration to_configuration(const Word& w);
Word to_word(const Configuration& c);

} // namespace reconf
