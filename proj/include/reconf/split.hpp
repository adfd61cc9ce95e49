#pragma once

#include "reconf/srs.hpp"

#include <optional>
#include <vector>

namespace reconf {

/// Fresh symbols introduced for one rule {a1 a2, b1 b2} with a1 != b1 and
/// a2 != b2, as ids of the split alphabet.
struct SplitRule {
    Rule original;        // over the original alphabet, lhs < rhs
    Symbol x, y;          // fresh symbols X_j, Y_j
    Symbol a1, a2, b1, b2; // the rule's symbols in the split alphabet
};

/// A one-side-fixed system equivalent to the input plus the data needed to
/// map its words back.
struct SplitResult {
    StringRewritingSystem system;
    Alphabet original_alphabet;
    std::vector<SplitRule> split_rules;
};

/// Replaces each rule changing both symbols by four one-side-fixed rules
/// through fresh symbols X_j, Y_j. Requires a symmetric 2-balanced system.
SplitResult split_rules(const StringRewritingSystem& sys);

/// Maps a word of the split system to the original alphabet: every X_j Y_j
/// becomes a1 a2, then each remaining X_j becomes a1 and Y_j becomes b2.
Word retract(const SplitResult& split, const Word& w);

/// Re-interns an original-alphabet word into the split alphabet.
Word embed(const SplitResult& split, const Word& w);

} // namespace reconf
