#include "reconf/turing.hpp"

#include "reconf/error.hpp"
#include "reconf/text_format.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace reconf {

TuringMachine::TuringMachine(std::vector<std::string> tape_alphabet, std::vector<std::string> states,
                             const std::string& initial, const std::string& accepting, const std::string& rejecting,
                             const std::vector<TransitionSpec>& delta)
    : tape_(std::move(tape_alphabet)), states_(std::move(states))
{
    if (!tape_.find(left_marker) || !tape_.find(right_marker))
        throw MachineError("tape alphabet must contain the end markers $ and ¢");
    if (tape_.find(tape_blank))
        throw MachineError("'_' is reserved for encoding padding and cannot be a tape symbol");
    for (const auto& q : states_.names())
        if (q.find(',') != std::string::npos || q.find('(') != std::string::npos || q.find(')') != std::string::npos)
            throw MachineError("state name '" + q + "' may not contain parentheses or commas");
    left_ = tape_.at(left_marker);
    right_ = tape_.at(right_marker);
    initial_ = states_.at(initial);
    accepting_ = states_.at(accepting);
    rejecting_ = states_.at(rejecting);
    if (accepting_ == rejecting_)
        throw MachineError("accepting and rejecting states must differ");
    for (const auto& d : delta) {
        auto q = states_.at(d.state);
        if (is_halting(q))
            throw MachineError("halting state '" + d.state + "' cannot have transitions");
        auto key = std::make_pair(q, tape_.at(d.read));
        if (delta_.count(key))
            throw MachineError("duplicate transition for (" + d.state + ", " + d.read + ")");
        delta_.emplace(key, Transition{states_.at(d.next_state), tape_.at(d.write), d.move});
    }
}

std::optional<Transition> TuringMachine::transition(Symbol state, Symbol read) const
{
    auto it = delta_.find({state, read});
    if (it == delta_.end())
        return std::nullopt;
    return it->second;
}

void TuringMachine::validate_discipline() const
{
    for (const auto& [key, tr] : delta_) {
        auto [q, a] = key;
        const auto where = "(" + states_.name(q) + ", " + tape_.name(a) + ")";
        if (is_marker(a) && tr.write != a)
            throw MachineError("transition " + where + " overwrites an end marker");
        if (!is_marker(a) && is_marker(tr.write))
            throw MachineError("transition " + where + " writes an end marker");
        if (a == left_ && tr.move == Move::Left)
            throw MachineError("transition " + where + " moves left of $");
        if (a == right_ && tr.move == Move::Right)
            throw MachineError("transition " + where + " moves right of ¢");
    }
}

TMConfiguration initial_configuration(const TuringMachine& m, const Word& x)
{
    TMConfiguration c;
    c.tape.push_back(m.left_end());
    for (auto s : x) {
        if (!m.tape_alphabet().contains(s) || m.is_marker(s))
            throw EncodingError("input symbols must be non-marker tape symbols");
        c.tape.push_back(s);
    }
    c.tape.push_back(m.right_end());
    c.head = 0;
    c.state = m.initial();
    return c;
}

TMConfiguration accepting_configuration(const TuringMachine& m)
{
    return TMConfiguration{{m.left_end(), m.right_end()}, 0, m.accepting()};
}

TMConfiguration tm_step(const TuringMachine& m, const TMConfiguration& c)
{
    if (c.head >= c.tape.size())
        throw MachineError("head outside the tape");
    if (m.is_halting(c.state))
        throw MachineError("machine has halted in state '" + m.states().name(c.state) + "'");
    const auto read = c.tape[c.head];
    auto tr = m.transition(c.state, read);
    if (!tr)
        throw MachineError("no transition for (" + m.states().name(c.state) + ", " + m.tape_alphabet().name(read) + ")");
    if (m.is_marker(read) && tr->write != read)
        throw MachineError("transition overwrites end marker " + m.tape_alphabet().name(read));
    if (!m.is_marker(read) && m.is_marker(tr->write))
        throw MachineError("transition writes end marker " + m.tape_alphabet().name(tr->write));
    TMConfiguration next = c;
    next.tape[c.head] = tr->write;
    next.state = tr->next_state;
    switch (tr->move) {
    case Move::Stay:
        break;
    case Move::Left:
        if (c.head == 0)
            throw MachineError("head moves left of the tape");
        --next.head;
        break;
    case Move::Right:
        if (c.head + 1 >= c.tape.size())
            throw MachineError("head moves right of the tape");
        ++next.head;
        break;
    }
    return next;
}

RunResult run_machine(const TuringMachine& m, const Word& x, std::size_t step_limit)
{
    RunResult r;
    r.trace.push_back(initial_configuration(m, x));
    std::set<TMConfiguration> seen{r.trace.back()};
    for (std::size_t steps = 0;; ++steps) {
        const auto& c = r.trace.back();
        if (c.state == m.accepting()) {
            r.outcome = RunOutcome::Accepted;
            return r;
        }
        if (c.state == m.rejecting()) {
            r.outcome = RunOutcome::Rejected;
            return r;
        }
        if (!m.transition(c.state, c.tape.at(c.head))) {
            r.outcome = RunOutcome::NoTransition;
            return r;
        }
        if (steps >= step_limit)
            throw ResourceLimitError("machine did not halt within " + std::to_string(step_limit) + " steps");
        auto next = tm_step(m, c);
        if (!seen.insert(next).second) {
            r.trace.push_back(std::move(next));
            r.outcome = RunOutcome::Loops;
            return r;
        }
        r.trace.push_back(std::move(next));
    }
}

namespace {

std::string pair_name(const TuringMachine& m, Symbol state, Symbol a)
{
    return "(" + m.states().name(state) + "," + m.tape_alphabet().name(a) + ")";
}

} // namespace

Alphabet encoding_alphabet(const TuringMachine& m)
{
    std::vector<std::string> names = m.tape_alphabet().names();
    for (auto q : m.states().symbols())
        for (auto a : m.tape_alphabet().symbols())
            names.push_back(pair_name(m, q, a));
    names.emplace_back(tape_blank);
    return Alphabet(std::move(names));
}

Symbol head_symbol(const TuringMachine& m, const Alphabet& gamma, Symbol state, Symbol tape_symbol)
{
    return gamma.at(pair_name(m, state, tape_symbol));
}

Word encode_config(const TuringMachine& m, const TMConfiguration& c, std::size_t space)
{
    if (c.tape.size() > space)
        throw EncodingError("tape of length " + std::to_string(c.tape.size()) + " does not fit in space " +
                            std::to_string(space));
    if (c.head >= c.tape.size())
        throw EncodingError("head outside the tape");
    const auto gamma = encoding_alphabet(m);
    Word w;
    w.reserve(space);
    for (std::size_t i = 0; i < c.tape.size(); ++i)
        w.push_back(i == c.head ? head_symbol(m, gamma, c.state, c.tape[i])
                                : gamma.at(m.tape_alphabet().name(c.tape[i])));
    w.resize(space, gamma.at(tape_blank));
    return w;
}

std::vector<Rule> tm_directed_rules(const TuringMachine& m)
{
    const auto gamma = encoding_alphabet(m);
    auto plain = [&](Symbol a) { return gamma.at(m.tape_alphabet().name(a)); };
    auto head = [&](Symbol q, Symbol a) { return head_symbol(m, gamma, q, a); };
    std::vector<Rule> rules;
    for (const auto& [key, tr] : m.delta()) {
        auto [q, a] = key;
        const auto p = tr.next_state;
        const auto b = tr.write;
        for (auto c : m.tape_alphabet().symbols()) {
            switch (tr.move) {
            case Move::Stay:
                rules.push_back({{head(q, a), plain(c)}, {head(p, b), plain(c)}});
                // ¢ is followed by padding, never by a tape symbol, so a
                // stationary step on it is read with its left neighbour.
                if (a == m.right_end())
                    rules.push_back({{plain(c), head(q, a)}, {plain(c), head(p, b)}});
                break;
            case Move::Right:
                rules.push_back({{head(q, a), plain(c)}, {plain(b), head(p, c)}});
                break;
            case Move::Left:
                rules.push_back({{plain(c), head(q, a)}, {head(p, c), plain(b)}});
                break;
            }
        }
    }
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    return rules;
}

StringRewritingSystem tm_to_srs(const TuringMachine& m)
{
    m.validate_discipline();
    return StringRewritingSystem(encoding_alphabet(m), tm_directed_rules(m), true);
}

std::pair<Word, Word> make_endpoints(const TuringMachine& m, const Word& x, std::size_t space)
{
    if (x.size() + 2 > space)
        throw EncodingError("space " + std::to_string(space) + " cannot hold an input of length " +
                            std::to_string(x.size()) + " plus end markers");
    return {encode_config(m, initial_configuration(m, x), space), encode_config(m, accepting_configuration(m), space)};
}

void validate_normal_form(const TuringMachine& m, const Word& x, std::size_t space, std::size_t step_limit)
{
    m.validate_discipline();
    auto run = run_machine(m, x, step_limit);
    if (run.outcome != RunOutcome::Accepted)
        return;
    const auto& last = run.trace.back();
    if (encode_config(m, last, space) != make_endpoints(m, x, space).second)
        throw ValidationError("machine accepts without first clearing the tape to '$ ¢' with the head on $ "
                              "(required accepting normal form)");
}

namespace {

Move parse_move(const TextLine& line, const std::string& token)
{
    if (token == "S")
        return Move::Stay;
    if (token == "L")
        return Move::Left;
    if (token == "R")
        return Move::Right;
    throw ParseError(line.number, "move must be S, L or R, got '" + token + "'");
}

const char* move_name(Move m)
{
    switch (m) {
    case Move::Stay:
        return "S";
    case Move::Left:
        return "L";
    case Move::Right:
        return "R";
    }
    return "S";
}

} // namespace

TuringMachine parse_turing_machine(std::string_view text)
{
    std::vector<std::string> tape, states;
    std::string init, accept, reject;
    std::vector<TransitionSpec> delta;
    std::size_t last_line = 1;
    for (const auto& line : tokenize_lines(text)) {
        const auto& t = line.tokens;
        last_line = line.number;
        auto single = [&](std::string& slot) {
            if (t.size() != 2)
                throw ParseError(line.number, "expected '" + t[0] + " <state>'");
            slot = t[1];
        };
        if (t[0] == "tape:")
            tape.assign(t.begin() + 1, t.end());
        else if (t[0] == "states:")
            states.assign(t.begin() + 1, t.end());
        else if (t[0] == "init:")
            single(init);
        else if (t[0] == "accept:")
            single(accept);
        else if (t[0] == "reject:")
            single(reject);
        else if (t[0] == "delta") {
            if (t.size() != 7 || t[3] != "->")
                throw ParseError(line.number, "expected 'delta q a -> p b S|L|R'");
            delta.push_back({t[1], t[2], t[4], t[5], parse_move(line, t[6])});
        } else {
            throw ParseError(line.number, "unexpected keyword '" + t[0] + "'");
        }
    }
    if (tape.empty() || states.empty() || init.empty() || accept.empty() || reject.empty())
        throw ParseError(last_line, "machine needs tape:, states:, init:, accept: and reject: headers");
    try {
        return TuringMachine(std::move(tape), std::move(states), init, accept, reject, delta);
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        throw ParseError(last_line, e.what());
    }
}

std::string write_turing_machine(const TuringMachine& m)
{
    std::ostringstream out;
    out << "tape:";
    for (const auto& n : m.tape_alphabet().names())
        out << ' ' << n;
    out << "\nstates:";
    for (const auto& n : m.states().names())
        out << ' ' << n;
    out << "\ninit: " << m.states().name(m.initial()) << "\naccept: " << m.states().name(m.accepting())
        << "\nreject: " << m.states().name(m.rejecting()) << '\n';
    for (const auto& [key, tr] : m.delta())
        out << "delta " << m.states().name(key.first) << ' ' << m.tape_alphabet().name(key.second) << " -> "
            << m.states().name(tr.next_state) << ' ' << m.tape_alphabet().name(tr.write) << ' ' << move_name(tr.move)
            << '\n';
    return out.str();
}

} // namespace reconf
