#pragma once

#include "reconf/srs.hpp"
#include "reconf/symbol.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reconf {

enum class Move { Stay, Left, Right };

inline constexpr const char* left_marker = "$";
inline constexpr const char* right_marker = "¢";
/// Padding symbol of configuration encodings.
inline constexpr const char* tape_blank = "_";

struct TransitionSpec {
    std::string state;
    std::string read;
    std::string next_state;
    std::string write;
    Move move = Move::Stay;
};

struct Transition {
    Symbol next_state;
    Symbol write;
    Move move;
    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic machine on a tape delimited by `$` and `¢`.
/// A missing transition halts the machine without accepting.
class TuringMachine {
public:
    TuringMachine(std::vector<std::string> tape_alphabet, std::vector<std::string> states, const std::string& initial,
                  const std::string& accepting, const std::string& rejecting, const std::vector<TransitionSpec>& delta);

    const Alphabet& tape_alphabet() const { return tape_; }
    const Alphabet& states() const { return states_; }
    Symbol initial() const { return initial_; }
    Symbol accepting() const { return accepting_; }
    Symbol rejecting() const { return rejecting_; }
    Symbol left_end() const { return left_; }
    Symbol right_end() const { return right_; }

    std::optional<Transition> transition(Symbol state, Symbol read) const;
    /// (state, read) -> transition, ordered by ids.
    const std::map<std::pair<Symbol, Symbol>, Transition>& delta() const { return delta_; }

    bool is_halting(Symbol state) const { return state == accepting_ || state == rejecting_; }
    bool is_marker(Symbol s) const { return s == left_ || s == right_; }

    /// Throws MachineError when some transition overwrites or writes an end
    /// marker or moves off the tape through one.
    void validate_discipline() const;

    friend bool operator==(const TuringMachine&, const TuringMachine&) = default;

private:
    Alphabet tape_;
    Alphabet states_;
    Symbol initial_, accepting_, rejecting_, left_, right_;
    std::map<std::pair<Symbol, Symbol>, Transition> delta_;
};

struct TMConfiguration {
    Word tape; // $ a1 ... an ¢ over the tape alphabet
    std::size_t head = 0;
    Symbol state;

    friend auto operator<=>(const TMConfiguration&, const TMConfiguration&) = default;
};

/// ($ x ¢, head on $, initial state). x must avoid the end markers.
TMConfiguration initial_configuration(const TuringMachine& m, const Word& x);
/// The cleared accepting configuration ($ ¢, head on $, accepting state).
TMConfiguration accepting_configuration(const TuringMachine& m);

/// One transition. Throws MachineError on end-marker violations, head
/// leaving the tape, halting states or missing transitions.
TMConfiguration tm_step(const TuringMachine& m, const TMConfiguration& c);

enum class RunOutcome { Accepted, Rejected, NoTransition, Loops };

struct RunResult {
    RunOutcome outcome;
    std::vector<TMConfiguration> trace; // initial ... final (loop: up to first repeat)
};

/// Simulates until halting or a repeated configuration. Throws
/// ResourceLimitError after `step_limit` steps.
RunResult run_machine(const TuringMachine& m, const Word& x, std::size_t step_limit = 100'000);

/// Alphabet Σ ∪ (Q × Σ) ∪ {_} of configuration encodings; the pair for
/// state q and symbol a is named `(q,a)`.
Alphabet encoding_alphabet(const TuringMachine& m);
Symbol head_symbol(const TuringMachine& m, const Alphabet& gamma, Symbol state, Symbol tape_symbol);

/// Tape with the head cell replaced by its (state, symbol) pair, padded
/// with `_` to exactly `space` symbols.
Word encode_config(const TuringMachine& m, const TMConfiguration& c, std::size_t space);

/// The transition rules as ordered pairs (one per directed rewriting step).
std::vector<Rule> tm_directed_rules(const TuringMachine& m);

/// Symmetric closure of the transition rules: a 2-balanced symmetric system.
StringRewritingSystem tm_to_srs(const TuringMachine& m);

/// (s_x, t_x): encoded initial and cleared accepting configurations.
std::pair<Word, Word> make_endpoints(const TuringMachine& m, const Word& x, std::size_t space);

/// Throws ValidationError when the machine accepts x without ending in the
/// cleared configuration.
void validate_normal_form(const TuringMachine& m, const Word& x, std::size_t space, std::size_t step_limit = 100'000);

// Text format: `tape:`, `states:`, `init:`, `accept:`, `reject:` headers and
// `delta q a -> p b S|L|R` lines.
TuringMachine parse_turing_machine(std::string_view text);
std::string write_turing_machine(const TuringMachine& m);

} // namespace reconf
