#pragma once

#include "reconf/engine.hpp"
#include "reconf/graph.hpp"
#include "reconf/srs.hpp"
#include "reconf/symbol.hpp"
#include "reconf/text_format.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reconf {

/// Display name of the padding component of pair symbols.
inline constexpr const char* pair_padding = "␣";

enum class SymbolClass { Special, Pair };

/// Components of a pair symbol over the rewriting alphabet; nullopt is padding.
struct PairParts {
    std::optional<Symbol> left;
    std::optional<Symbol> right;

    friend bool operator==(const PairParts&, const PairParts&) = default;
};

/// Digraph H whose vertices are the symbols of Δ, together with the
/// special/pair classification used to decode H-words. Vertex ids of
/// `digraph` coincide with symbol ids of `alphabet`.
struct HStructure {
    Digraph digraph;
    Alphabet alphabet;                           // Δ
    Alphabet gamma;                              // components of pair symbols
    std::vector<SymbolClass> classes;            // per Δ symbol
    std::vector<std::optional<PairParts>> pairs; // per Δ symbol
    std::vector<std::optional<Rule>> rule_of;    // rule symbol x_i -> its rule over gamma
    std::optional<Symbol> dollar;
    std::optional<Symbol> cent;

    bool is_pair(Symbol s) const { return classes.at(s.id) == SymbolClass::Pair; }
    std::optional<Symbol> pair_symbol(std::optional<Symbol> left, std::optional<Symbol> right) const;

    friend bool operator==(const HStructure& a, const HStructure& b)
    {
        return a.digraph == b.digraph && a.gamma == b.gamma && a.classes == b.classes && a.pairs == b.pairs &&
               a.rule_of == b.rule_of;
    }
};

/// Rendering of a pair symbol, e.g. `[␣,a]`.
std::string pair_name(const Alphabet& gamma, const PairParts& parts);

/// True iff every two consecutive symbols form an arc. Throws
/// ValidationError for symbols outside H.
bool is_h_word(const Word& w, const Digraph& h);
bool is_h_word(const Word& w, const HStructure& h);

/// All H-words differing from w in exactly one position, sorted.
std::vector<Word> hword_neighbors(const Word& w, const Digraph& h);

/// Builds H from a 2-balanced symmetric one-side-fixed system. Throws
/// ConstructionError otherwise (split_rules produces such a system).
HStructure build_h_from_srs(const StringRewritingSystem& sys);

/// $ [␣,a1] [a1,a2] ... [an,␣] ¢ for a nonempty word over gamma.
Word psi(const Word& s, const HStructure& h);

/// Inverse of psi on H-words of length n+3 that start with $ [␣,·] and end
/// with [·,␣] ¢. Throws DecodeError otherwise.
Word phi(const Word& w, const HStructure& h);

/// True iff w has length >= 4, starts with $ [␣,·] and ends with [·,␣] ¢.
bool has_boundary_pattern(const Word& w, const HStructure& h);

/// Maps a rewriting sequence to an H-word sequence between the psi images,
/// three single-symbol changes per rule application.
std::vector<Word> lift_srs_sequence(const WordSequence& seq, const StringRewritingSystem& sys, const HStructure& h);

/// Single-symbol-change search over H-words. When both ends carry the
/// boundary pattern every visited word is checked to keep it.
SearchResult hword_reachability(const Word& s, const Word& t, const HStructure& h, const SearchLimits& limits = {});

/// Digraph format plus `class <sym> special|pair`, `pair <sym> <left> <right>`
/// and `rulesym <sym> l1 l2 <-> r1 r2` lines.
HStructure parse_h_structure(std::string_view text);
HStructure parse_h_structure(const std::vector<TextLine>& lines);
std::string write_h_structure(const HStructure& h);

/// Wraps a plain digraph (every vertex classified as special).
HStructure h_structure_from_digraph(const Digraph& d);

} // namespace reconf
