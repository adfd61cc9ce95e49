#include "doctest.h"
#include "oracle.hpp"

#include "reconf/cli/commands.hpp"
#include "reconf/error.hpp"
#include "reconf/split.hpp"
#include "reconf/srs.hpp"
#include "reconf/turing.hpp"

#include <set>

using namespace reconf;

namespace {

const Alphabet bits({"0", "1"});

StringRewritingSystem swap_system()
{
    return StringRewritingSystem(bits, {{bits.parse_word("0 1"), bits.parse_word("1 0")}}, true);
}

std::vector<std::string> rendered(const std::vector<Word>& words, const Alphabet& a)
{
    std::vector<std::string> out;
    for (auto& w : words)
        out.push_back(a.render(w));
    return out;
}

TuringMachine machine(const std::vector<TransitionSpec>& delta)
{
    return TuringMachine({"$", "¢", "a", "b"}, {"q0", "q1", "acc", "rej"}, "q0", "acc", "rej", delta);
}

std::vector<oracle::Conf> all_words(std::size_t k, std::size_t max_len)
{
    std::vector<oracle::Conf> out;
    for (std::size_t len = 1; len <= max_len; ++len)
        for (auto& w : oracle::all_tuples(k, len))
            out.push_back(w);
    return out;
}

oracle::Successors oracle_rewrite(const StringRewritingSystem& sys)
{
    std::vector<std::pair<oracle::Conf, oracle::Conf>> rules;
    for (auto& r : sys.directed_rules())
        rules.emplace_back(to_configuration(r.lhs), to_configuration(r.rhs));
    return oracle::rewrite(rules);
}

} // namespace

TEST_SUITE("rewriting")
{
    TEST_CASE("apply_rule_at examples")
    {
        const Alphabet a({"a", "b"});
        const Rule r{a.parse_word("a b"), a.parse_word("b a")};
        CHECK(a.render(apply_rule_at(a.parse_word("a b"), r, 0)) == "b a");
        CHECK(a.render(apply_rule_at(a.parse_word("a a b"), r, 1)) == "a b a");
        CHECK_THROWS_AS(apply_rule_at(a.parse_word("a b"), r, 1), RuleApplicationError);
        CHECK_THROWS_AS(apply_rule_at(a.parse_word("a b"), r, 5), RuleApplicationError);
    }

    TEST_CASE("rewrite_neighbors examples")
    {
        const auto sys = swap_system();
        CHECK(rendered(rewrite_neighbors(bits.parse_word("0 1"), sys), bits) == std::vector<std::string>{"1 0"});
        CHECK(rendered(rewrite_neighbors(bits.parse_word("0 0 1 1"), sys), bits) == std::vector<std::string>{"0 1 0 1"});
        CHECK(rewrite_neighbors(bits.parse_word("0 0"), sys).empty());
        CHECK(is_rewrite_step(bits.parse_word("0 1 1"), bits.parse_word("1 0 1"), sys));
        CHECK_FALSE(is_rewrite_step(bits.parse_word("0 1 1"), bits.parse_word("1 1 0"), sys));
    }

    TEST_CASE("srs_reachability examples")
    {
        const auto sys = swap_system();
        const auto same = srs_reachability(bits.parse_word("0 1"), bits.parse_word("0 1"), sys);
        REQUIRE(same);
        CHECK(same->size() == 1);
        CHECK(srs_reachability(bits.parse_word("0 1"), bits.parse_word("1 0"), sys)->size() == 2);
        const auto four = srs_reachability(bits.parse_word("0 0 1 1"), bits.parse_word("1 1 0 0"), sys);
        REQUIRE(four);
        CHECK(four->size() == 5);
        for (std::size_t i = 0; i + 1 < four->size(); ++i)
            CHECK(is_rewrite_step((*four)[i], (*four)[i + 1], sys));
        CHECK_FALSE(srs_reachability(bits.parse_word("0 0"), bits.parse_word("0 1"), sys));
        CHECK_FALSE(srs_reachability(bits.parse_word("0"), bits.parse_word("0 0"), sys));
        CHECK_THROWS_AS(srs_reachability(bits.parse_word("0 0 0 0 0 0 1 1 1 1 1 1"), bits.parse_word("1 1 1 1 1 1 0 0 0 0 0 0"),
                                         sys, {.max_states = 5}),
                        ResourceLimitError);
    }

    TEST_CASE("step counts on bit strings equal inversion counts")
    {
        const auto sys = swap_system();
        for (auto& w : oracle::all_tuples(2, 6)) {
            auto sorted = w;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            std::size_t inversions = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j < w.size(); ++j)
                    inversions += w[i] == 0 && w[j] == 1;
            const auto seq = srs_reachability(to_word(w), to_word(sorted), sys);
            REQUIRE(seq);
            CHECK(seq->size() == inversions + 1);
        }
    }

    TEST_CASE("reachability matches brute-force components")
    {
        oracle::Rng rng(31);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t k = 2 + rng.below(2);
            std::vector<std::string> names;
            for (std::size_t i = 0; i < k; ++i)
                names.push_back("s" + std::to_string(i));
            std::vector<Rule> rules;
            for (std::size_t r = 0, count = 1 + rng.below(3); r < count; ++r)
                rules.push_back({{Symbol{static_cast<std::uint32_t>(rng.below(k))}, Symbol{static_cast<std::uint32_t>(rng.below(k))}},
                                 {Symbol{static_cast<std::uint32_t>(rng.below(k))}, Symbol{static_cast<std::uint32_t>(rng.below(k))}}});
            const StringRewritingSystem sys(Alphabet(names), rules, rng.below(2) == 0);
            const auto succ = oracle_rewrite(sys);
            const auto words = oracle::all_tuples(k, 3);
            const auto s = words[rng.below(words.size())];
            const auto comp = oracle::component(s, succ);
            for (auto& t : words)
                CHECK(srs_reachability(to_word(s), to_word(t), sys).has_value() == (comp.count(t) > 0));
        }
    }

    TEST_CASE("system normalisation and classification")
    {
        const Alphabet a({"a", "b", "c"});
        const StringRewritingSystem sys(a,
                                        {{a.parse_word("b a"), a.parse_word("a b")},
                                         {a.parse_word("a b"), a.parse_word("b a")},
                                         {a.parse_word("c c"), a.parse_word("c c")}},
                                        true);
        REQUIRE(sys.rules().size() == 1);
        CHECK(a.render(sys.rules()[0].lhs) == "a b");
        CHECK(sys.directed_rules().size() == 2);
        CHECK(sys.is_two_balanced());
        CHECK_FALSE(sys.is_one_side_fixed());
        CHECK(StringRewritingSystem(a, {{a.parse_word("a b"), a.parse_word("c b")}}, true).is_one_side_fixed());
        const StringRewritingSystem grow(a, {{a.parse_word("a"), a.parse_word("b c")}}, false);
        CHECK_FALSE(grow.is_balanced());
        CHECK_THROWS_AS(StringRewritingSystem(a, {{Word{}, a.parse_word("a")}}, true), ValidationError);
    }

    TEST_CASE("rewriting system text round trip")
    {
        const auto sys = parse_srs("alphabet: a b c\nrule: a b <-> b a\nrule: b c <-> c b\n");
        CHECK(sys.symmetric());
        CHECK(sys.rules().size() == 2);
        CHECK(parse_srs(write_srs(sys)) == sys);
        const auto one_way = parse_srs("alphabet: a b\nrule: a b -> b a\n");
        CHECK_FALSE(one_way.symmetric());
        CHECK(parse_srs(write_srs(one_way)) == one_way);
        CHECK_THROWS_AS(parse_srs("alphabet: a\nrule: a q <-> a a\n"), ValidationError);
        CHECK_THROWS_AS(parse_srs("rule: a a <-> a a\n"), ParseError);
    }

    TEST_CASE("tm_step examples")
    {
        const auto m = machine({{"q0", "$", "q1", "$", Move::Right}, {"q1", "a", "q1", "b", Move::Stay},
                                {"q1", "b", "q0", "b", Move::Left}});
        const auto& tape = m.tape_alphabet();
        const auto c0 = initial_configuration(m, tape.parse_word("a"));
        CHECK(tape.render(c0.tape) == "$ a ¢");
        const auto c1 = tm_step(m, c0);
        CHECK(c1.head == 1);
        CHECK(m.states().name(c1.state) == "q1");
        CHECK(c1.tape == c0.tape);
        const auto c2 = tm_step(m, c1);
        CHECK(c2.head == 1);
        CHECK(tape.render(c2.tape) == "$ b ¢");
        const auto c3 = tm_step(m, c2);
        CHECK(c3.head == 0);
        auto missing = c2;
        missing.state = m.states().at("q0");
        CHECK_THROWS_AS(tm_step(m, missing), MachineError);
        missing.state = m.accepting();
        CHECK_THROWS_AS(tm_step(m, missing), MachineError);
    }

    TEST_CASE("end-marker discipline")
    {
        CHECK_THROWS_AS(machine({{"q0", "$", "q1", "a", Move::Right}}).validate_discipline(), MachineError);
        CHECK_THROWS_AS(machine({{"q0", "a", "q1", "$", Move::Stay}}).validate_discipline(), MachineError);
        CHECK_THROWS_AS(machine({{"q0", "$", "q1", "$", Move::Left}}).validate_discipline(), MachineError);
        CHECK_THROWS_AS(machine({{"q0", "¢", "q1", "¢", Move::Right}}).validate_discipline(), MachineError);
        CHECK_NOTHROW(machine({{"q0", "$", "q1", "$", Move::Right}}).validate_discipline());
        CHECK_THROWS_AS(TuringMachine({"a"}, {"q0", "acc", "rej"}, "q0", "acc", "rej", {}), ValidationError);
        CHECK_THROWS_AS(machine({{"acc", "a", "q1", "a", Move::Stay}}), ValidationError);
    }

    TEST_CASE("run_machine outcomes")
    {
        const auto demo = parse_turing_machine(cli::demo_machine_text());
        const auto& tape = demo.tape_alphabet();
        CHECK(run_machine(demo, tape.parse_word("a a")).outcome == RunOutcome::Accepted);
        CHECK(run_machine(demo, tape.parse_word("a b")).outcome == RunOutcome::Rejected);
        CHECK(run_machine(demo, Word{}).trace.size() == 4);
        CHECK_THROWS_AS(run_machine(demo, tape.parse_word("a a a"), 3), ResourceLimitError);
        const auto loop = machine({{"q0", "$", "q0", "$", Move::Stay}});
        CHECK(run_machine(loop, Word{}).outcome == RunOutcome::Loops);
        const auto stuck = machine({{"q0", "$", "q1", "$", Move::Right}});
        CHECK(run_machine(stuck, Word{}).outcome == RunOutcome::NoTransition);
        CHECK_THROWS_AS(initial_configuration(demo, tape.parse_word("a $")), ValidationError);
    }

    TEST_CASE("encode_config examples")
    {
        const auto m = machine({{"q0", "$", "acc", "$", Move::Stay}});
        const auto gamma = encoding_alphabet(m);
        CHECK(gamma.find("(q0,$)").has_value());
        CHECK(gamma.find("_").has_value());
        CHECK(gamma.size() == 4 + 4 * 4 + 1);
        const auto c = initial_configuration(m, m.tape_alphabet().parse_word("a"));
        CHECK(gamma.render(encode_config(m, c, 5)) == "(q0,$) a ¢ _ _");
        CHECK(gamma.render(encode_config(m, accepting_configuration(m), 4)) == "(acc,$) ¢ _ _");
        auto end = c;
        end.head = 2;
        CHECK(gamma.render(encode_config(m, end, 3)) == "$ a (q0,¢)");
        CHECK_THROWS_AS(encode_config(m, c, 2), EncodingError);
    }

    TEST_CASE("tm_to_srs examples")
    {
        const TuringMachine m({"$", "¢"}, {"q0", "acc", "rej"}, "q0", "acc", "rej", {{"q0", "$", "acc", "$", Move::Stay}});
        const auto sys = tm_to_srs(m);
        CHECK(sys.symmetric());
        CHECK(sys.is_two_balanced());
        REQUIRE(sys.rules().size() == 2);
        std::set<std::string> got;
        for (auto& r : sys.rules())
            got.insert(sys.alphabet().render(r.lhs) + " | " + sys.alphabet().render(r.rhs));
        CHECK(got == std::set<std::string>{"(acc,$) $ | (q0,$) $", "(acc,$) ¢ | (q0,$) ¢"});
        CHECK(tm_directed_rules(m).size() == 2);
        const auto demo = parse_turing_machine(cli::demo_machine_text());
        CHECK(tm_to_srs(demo).is_two_balanced());
    }

    TEST_CASE("make_endpoints examples")
    {
        const auto m = machine({{"q0", "$", "acc", "$", Move::Stay}});
        const auto gamma = encoding_alphabet(m);
        const auto [s, t] = make_endpoints(m, Word{}, 3);
        CHECK(gamma.render(s) == "(q0,$) ¢ _");
        CHECK(gamma.render(t) == "(acc,$) ¢ _");
        const auto [s2, t2] = make_endpoints(m, m.tape_alphabet().parse_word("a b"), 5);
        CHECK(gamma.render(s2) == "(q0,$) a b ¢ _");
        CHECK(gamma.render(t2) == "(acc,$) ¢ _ _ _");
        CHECK_THROWS_AS(make_endpoints(m, m.tape_alphabet().parse_word("a b"), 3), EncodingError);
    }

    TEST_CASE("normal form validation")
    {
        const auto demo = parse_turing_machine(cli::demo_machine_text());
        CHECK_NOTHROW(validate_normal_form(demo, Word{}, 2));
        CHECK_THROWS_AS(validate_normal_form(demo, demo.tape_alphabet().parse_word("a"), 3), ValidationError);
        CHECK_NOTHROW(validate_normal_form(demo, demo.tape_alphabet().parse_word("b"), 3));
    }

    TEST_CASE("machine text round trip")
    {
        const auto demo = parse_turing_machine(cli::demo_machine_text());
        CHECK(parse_turing_machine(write_turing_machine(demo)) == demo);
        CHECK(demo.delta().size() == 6);
        CHECK_THROWS_AS(parse_turing_machine("tape: $ ¢\nstates: q0 acc rej\ninit: q0\naccept: acc\nreject: rej\n"
                                             "delta q0 $ -> acc $ X\n"),
                        ParseError);
        CHECK_THROWS_AS(parse_turing_machine("tape: $ ¢\n"), ValidationError);
    }

    TEST_CASE("split examples")
    {
        const Alphabet a({"a", "b", "c", "d"});
        const StringRewritingSystem both(a, {{a.parse_word("a b"), a.parse_word("c d")}}, true);
        const auto split = split_rules(both);
        CHECK(split.system.rules().size() == 4);
        CHECK(split.system.is_one_side_fixed());
        CHECK(split.system.is_two_balanced());
        CHECK(split.system.alphabet().find("X1").has_value());
        CHECK(split.system.alphabet().find("Y1").has_value());
        CHECK(split.system.alphabet().size() == 6);
        CHECK(split.original_alphabet == a);
        REQUIRE(split.split_rules.size() == 1);

        const StringRewritingSystem fixed(a, {{a.parse_word("a b"), a.parse_word("c b")}}, true);
        CHECK(split_rules(fixed).system == fixed);
        CHECK(split_rules(split.system).system == split.system);
        CHECK_THROWS_AS(split_rules(StringRewritingSystem(a, {{a.parse_word("a b"), a.parse_word("c d")}}, false)),
                        ValidationError);
    }

    TEST_CASE("retract examples")
    {
        const Alphabet a({"a", "b", "c", "d"});
        const auto split = split_rules(StringRewritingSystem(a, {{a.parse_word("a b"), a.parse_word("c d")}}, true));
        const auto& sa = split.system.alphabet();
        CHECK(a.render(retract(split, sa.parse_word("X1 Y1"))) == "a b");
        CHECK(a.render(retract(split, sa.parse_word("X1 d"))) == "a d");
        CHECK(a.render(retract(split, sa.parse_word("c Y1"))) == "c d");
        CHECK(a.render(retract(split, sa.parse_word("b c a"))) == "b c a");
        CHECK(sa.render(embed(split, a.parse_word("a d"))) == "a d");
    }

    TEST_CASE("splitting preserves reachability")
    {
        oracle::Rng rng(32);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t k = 2 + rng.below(3);
            std::vector<std::string> names;
            for (std::size_t i = 0; i < k; ++i)
                names.push_back(std::string(1, static_cast<char>('a' + i)));
            std::vector<Rule> rules;
            for (std::size_t r = 0, count = 1 + rng.below(2); r < count; ++r) {
                auto sym = [&] { return Symbol{static_cast<std::uint32_t>(rng.below(k))}; };
                rules.push_back({{sym(), sym()}, {sym(), sym()}});
            }
            const StringRewritingSystem sys(Alphabet(names), rules, true);
            const auto split = split_rules(sys);
            REQUIRE(split.system.is_one_side_fixed());
            const auto orig = oracle_rewrite(sys);
            const auto lifted = oracle_rewrite(split.system);
            const auto words = all_words(k, 3);
            const auto s = words[rng.below(words.size())];
            const auto comp = oracle::component(s, orig);
            const auto split_comp = oracle::component(to_configuration(embed(split, to_word(s))), lifted);
            std::set<oracle::Conf> retracted;
            for (auto& w : split_comp)
                retracted.insert(to_configuration(retract(split, to_word(w))));
            CHECK(retracted == comp);
            for (auto& t : comp)
                CHECK(split_comp.count(to_configuration(embed(split, to_word(t)))) == 1);
        }
    }
}
