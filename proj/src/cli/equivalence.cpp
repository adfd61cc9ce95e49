#include "reconf/cli/equivalence.hpp"

#include "reconf/adapters.hpp"
#include "reconf/error.hpp"
#include "reconf/forest.hpp"
#include "reconf/hword.hpp"
#include "reconf/reductions.hpp"
#include "reconf/split.hpp"
#include "reconf/tree_recolor.hpp"
#include "reconf/treedepth_solver.hpp"
#include "reconf/turing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

namespace reconf::cli {

namespace {

/// Same label iff mutually reachable in `space`, for every seed.
std::vector<std::size_t> component_labels(const ConfigurationSpace& space, const std::vector<Configuration>& seeds)
{
    std::unordered_map<Configuration, std::size_t, ConfigurationHash> label;
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (const auto& seed : seeds) {
        auto it = label.find(seed);
        if (it == label.end()) {
            auto s = space;
            s.initial = seed;
            s.target = seed;
            for (auto& c : reachable_set(s))
                label.emplace(std::move(c), next);
            ++next;
            it = label.find(seed);
        }
        out.push_back(it->second);
    }
    return out;
}

/// Compares two labelings as equivalence relations.
bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    std::map<std::size_t, std::size_t> ab, ba;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [x, fresh_x] = ab.emplace(a[i], b[i]);
        auto [y, fresh_y] = ba.emplace(b[i], a[i]);
        if (x->second != b[i] || y->second != a[i])
            return false;
    }
    return true;
}

std::vector<Word> all_words(std::size_t symbols, std::size_t length)
{
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (std::uint32_t a = 0; a < symbols; ++a) {
                auto x = w;
                x.push_back(Symbol{a});
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::string> letter_names(std::size_t k)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    return names;
}

Digraph digraph_from_mask(std::size_t k, std::uint64_t mask)
{
    Digraph h(letter_names(k));
    for (std::size_t i = 0; i < k * k; ++i)
        if (mask >> i & 1)
            h.add_arc(static_cast<VertexId>(i / k), static_cast<VertexId>(i % k));
    return h;
}

std::vector<Digraph> small_digraphs(std::size_t max_vertices, bool loops)
{
    std::vector<Digraph> out;
    for (std::size_t k = 1; k <= max_vertices; ++k)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * k)); ++mask) {
            auto h = digraph_from_mask(k, mask);
            if (loops || !h.has_loops())
                out.push_back(std::move(h));
        }
    return out;
}

/// Keeps at most `samples` items, chosen with the seed; records the mode.
template <typename T>
std::vector<T> select(std::vector<T> items, const EquivalenceOptions& o, EquivalenceReport& r)
{
    if (items.size() <= o.samples) {
        r.mode = "exhaustive";
        return items;
    }
    r.mode = "sampled";
    std::mt19937_64 rng(o.seed);
    std::shuffle(items.begin(), items.end(), rng);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(o.samples), items.end());
    return items;
}

void record(EquivalenceReport& r, bool agree, const std::function<std::string()>& describe)
{
    ++r.cases;
    if (agree)
        ++r.agreements;
    else if (r.counterexamples.size() < 5)
        r.counterexamples.push_back(describe());
}

// Turing machine vs. rewriting system ----------------------------------------

std::vector<TuringMachine> small_machines()
{
    const std::vector<std::string> tape{"$", "¢", "a"};
    const std::vector<std::string> states{"acc", "q0", "rej"};
    const std::vector<Move> moves{Move::Stay, Move::Left, Move::Right};
    std::vector<std::vector<std::optional<TransitionSpec>>> options;
    for (const auto& read : tape) {
        std::vector<std::optional<TransitionSpec>> opts{std::nullopt};
        for (const auto& next : states)
            for (auto mv : moves) {
                if ((read == "$" && mv == Move::Left) || (read == "¢" && mv == Move::Right))
                    continue;
                opts.push_back(TransitionSpec{"q0", read, next, read == "$" || read == "¢" ? read : "a", mv});
            }
        options.push_back(std::move(opts));
    }
    std::vector<TuringMachine> out;
    for (const auto& d0 : options[0])
        for (const auto& d1 : options[1])
            for (const auto& d2 : options[2]) {
                std::vector<TransitionSpec> delta;
                for (const auto* d : {&d0, &d1, &d2})
                    if (*d)
                        delta.push_back(**d);
                out.emplace_back(tape, states, "q0", "acc", "rej", delta);
            }
    return out;
}

EquivalenceReport check_machine_srs(const EquivalenceOptions& o)
{
    EquivalenceReport r{"machine-srs", "", 0, 0, {}};
    auto machines = select(small_machines(), o, r);
    for (const auto& m : machines) {
        const auto sys = tm_to_srs(m);
        const auto a = m.tape_alphabet().at("a");
        for (std::size_t len = 0; len <= std::min<std::size_t>(o.max_length, 3); ++len) {
            const Word x(len, a);
            const auto run = run_machine(m, x);
            const bool accepted = run.outcome == RunOutcome::Accepted;
            for (std::size_t space = len + 2; space <= std::min<std::size_t>(len + 3, 6); ++space) {
                auto [s, t] = make_endpoints(m, x, space);
                bool normal_form = true;
                try {
                    validate_normal_form(m, x, space);
                } catch (const ValidationError&) {
                    normal_form = false;
                }
                auto describe = [&] {
                    return "machine:\n" + write_turing_machine(m) + "input length " + std::to_string(len) +
                           ", space " + std::to_string(space);
                };
                if (normal_form)
                    record(r, accepted == srs_reachability(s, t, sys).has_value(), describe);
                if (accepted)
                    record(r, srs_reachability(s, encode_config(m, run.trace.back(), space), sys).has_value(),
                           describe);
            }
        }
    }
    return r;
}

// Rewriting systems ----------------------------------------------------------

std::vector<StringRewritingSystem> random_systems(std::size_t max_symbols, std::size_t count, std::uint64_t seed,
                                                  bool one_side_fixed)
{
    std::mt19937_64 rng(seed);
    std::vector<StringRewritingSystem> out;
    while (out.size() < count) {
        const auto k = std::uniform_int_distribution<std::size_t>(1, max_symbols)(rng);
        const auto m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        std::uniform_int_distribution<std::uint32_t> sym(0, static_cast<std::uint32_t>(k - 1));
        std::vector<Rule> rules;
        for (std::size_t i = 0; i < m; ++i) {
            Rule rule{{Symbol{sym(rng)}, Symbol{sym(rng)}}, {Symbol{sym(rng)}, Symbol{sym(rng)}}};
            if (one_side_fixed) {
                if (rng() % 2)
                    rule.rhs[0] = rule.lhs[0];
                else
                    rule.rhs[1] = rule.lhs[1];
            }
            rules.push_back(rule);
        }
        out.emplace_back(Alphabet(letter_names(k)), rules, true);
    }
    return out;
}

EquivalenceReport check_split(const EquivalenceOptions& o)
{
    EquivalenceReport r{"split", "sampled", 0, 0, {}};
    for (const auto& sys : random_systems(o.max_symbols, o.samples, o.seed, false)) {
        const auto split = split_rules(sys);
        for (std::size_t len = 1; len <= o.max_length; ++len) {
            const auto words = all_words(sys.alphabet().size(), len);
            std::vector<Configuration> before, after;
            for (const auto& w : words) {
                before.push_back(to_configuration(w));
                after.push_back(to_configuration(embed(split, w)));
            }
            const auto lb = component_labels(srs_word_space(sys, words[0], words[0]), before);
            const auto la = component_labels(
                srs_word_space(split.system, embed(split, words[0]), embed(split, words[0])), after);
            record(r, same_partition(lb, la), [&] { return write_srs(sys) + "length " + std::to_string(len); });
        }
    }
    return r;
}

std::vector<StringRewritingSystem> one_side_fixed_systems(std::size_t max_symbols)
{
    std::vector<StringRewritingSystem> out;
    for (std::size_t k = 1; k <= max_symbols; ++k) {
        Alphabet alphabet(letter_names(k));
        std::vector<Rule> candidates;
        for (const auto& l : all_words(k, 2))
            for (const auto& rr : all_words(k, 2))
                if (l < rr && (l[0] == rr[0] || l[1] == rr[1]))
                    candidates.push_back({l, rr});
        out.emplace_back(alphabet, std::vector<Rule>{}, true);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            out.emplace_back(alphabet, std::vector<Rule>{candidates[i]}, true);
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                out.emplace_back(alphabet, std::vector<Rule>{candidates[i], candidates[j]}, true);
        }
    }
    return out;
}

EquivalenceReport check_srs_hword(const EquivalenceOptions& o)
{
    EquivalenceReport r{"srs-hword", "", 0, 0, {}};
    for (const auto& sys : select(one_side_fixed_systems(o.max_symbols), o, r)) {
        const auto h = build_h_from_srs(sys);
        for (std::size_t len = 1; len <= o.max_length; ++len) {
            const auto words = all_words(sys.alphabet().size(), len);
            std::vector<Configuration> plain, lifted;
            for (const auto& w : words) {
                plain.push_back(to_configuration(w));
                lifted.push_back(to_configuration(psi(w, h)));
            }
            const auto lp = component_labels(srs_word_space(sys, words[0], words[0]), plain);
            const auto lh = component_labels(hword_space(h.digraph, psi(words[0], h), psi(words[0], h)), lifted);
            record(r, same_partition(lp, lh), [&] { return write_srs(sys) + "length " + std::to_string(len); });
        }
    }
    return r;
}

// Graph reductions of H-word reachability -----------------------------------

EquivalenceReport check_reduction(const std::string& pair, const EquivalenceOptions& o)
{
    EquivalenceReport r{pair, "", 0, 0, {}};
    for (const auto& h : select(small_digraphs(o.max_symbols, true), o, r)) {
        for (std::size_t n = 1; n <= o.max_length; ++n) {
            std::vector<Word> words;
            for (auto& w : all_words(h.num_vertices(), n))
                if (is_h_word(w, h))
                    words.push_back(std::move(w));
            if (words.empty())
                continue;
            std::vector<Configuration> word_configs;
            for (const auto& w : words)
                word_configs.push_back(to_configuration(w));
            const auto lw = component_labels(hword_space(h, words[0], words[0]), word_configs);

            std::vector<Configuration> encoded;
            std::optional<ConfigurationSpace> space;
            if (pair == "shortest-path") {
                auto inst = to_shortest_path(h, words[0], words[0]);
                for (const auto& w : words)
                    encoded.push_back(word_to_path(w, inst));
                space = instance_space(inst);
            } else if (pair == "max-is") {
                auto inst = to_mis(h, words[0], words[0]);
                for (const auto& w : words)
                    encoded.push_back(word_to_is(w, inst));
                space = instance_space(inst);
            } else {
                auto inst = to_list_coloring(h, words[0], words[0]);
                for (const auto& w : words)
                    encoded.push_back(extend_word_to_list_coloring(w, inst));
                space = instance_space(inst);
            }
            const auto lr = component_labels(*space, encoded);
            record(r, same_partition(lw, lr), [&] { return "H:\n" + write_digraph(h) + "length " + std::to_string(n); });
        }
    }
    return r;
}

EquivalenceReport check_list_plain(const EquivalenceOptions& o)
{
    EquivalenceReport r{"list-plain", "", 0, 0, {}};
    for (const auto& h : select(small_digraphs(o.max_symbols, true), o, r)) {
        for (std::size_t n = 1; n <= o.max_length; ++n) {
            std::vector<Word> words;
            for (auto& w : all_words(h.num_vertices(), n))
                if (is_h_word(w, h))
                    words.push_back(std::move(w));
            if (words.empty())
                continue;
            auto list = to_list_coloring(h, words[0], words[0]);
            auto plain = list_to_plain(list);
            auto list_space = instance_space(list);
            // Every proper list coloring, not only canonical extensions.
            std::vector<Configuration> all;
            for (const auto& w : words) {
                auto s = list_space;
                s.initial = extend_word_to_list_coloring(w, list);
                for (auto& c : reachable_set(s))
                    all.push_back(std::move(c));
            }
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            std::vector<Configuration> lifted;
            for (const auto& c : all)
                lifted.push_back(extend_list_coloring(c, plain));
            const auto ll = component_labels(list_space, all);
            const auto lp = component_labels(instance_space(plain), lifted);
            record(r, same_partition(ll, lp), [&] { return "H:\n" + write_digraph(h) + "length " + std::to_string(n); });
        }
    }
    return r;
}

EquivalenceReport check_cycle(const EquivalenceOptions& o)
{
    EquivalenceReport r{"cycle", "", 0, 0, {}};
    for (const auto& h : select(small_digraphs(o.max_symbols, true), o, r)) {
        for (std::size_t len : {std::size_t{3}, std::size_t{6}}) {
            const auto cycle = directed_cycle(len);
            std::vector<Configuration> colorings;
            for (const auto& w : all_words(h.num_vertices(), len)) {
                auto c = to_configuration(w);
                if (is_h_coloring(cycle, h, c))
                    colorings.push_back(std::move(c));
            }
            if (colorings.empty())
                continue;
            auto inst = lift_cycle(h, len, colorings[0], colorings[0]);
            std::vector<Configuration> lifted;
            for (const auto& c : colorings)
                lifted.push_back(lift_cycle_coloring(c));
            const auto ld = component_labels(h_coloring_space(cycle, h, colorings[0], colorings[0]), colorings);
            const auto lu = component_labels(instance_space(inst), lifted);
            record(r, same_partition(ld, lu), [&] { return "H:\n" + write_digraph(h) + "cycle " + std::to_string(len); });
        }
    }
    return r;
}

/// Labelled trees on n vertices from Prüfer sequences.
std::vector<Graph> all_trees(std::size_t n)
{
    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(std::vector<std::string>{"t0"});
        return out;
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("t" + std::to_string(i));
    std::size_t total = 1;
    for (std::size_t i = 0; i + 2 < n; ++i)
        total *= n;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<VertexId> seq;
        for (std::size_t c = code, i = 0; i + 2 < n; ++i, c /= n)
            seq.push_back(static_cast<VertexId>(c % n));
        std::vector<std::size_t> degree(n, 1);
        for (auto v : seq)
            ++degree[v];
        Graph t(names);
        for (auto v : seq) {
            VertexId leaf = 0;
            while (degree[leaf] != 1)
                ++leaf;
            t.add_edge(leaf, v);
            --degree[leaf];
            --degree[v];
        }
        std::vector<VertexId> rest;
        for (VertexId v = 0; v < n; ++v)
            if (degree[v] == 1)
                rest.push_back(v);
        t.add_edge(rest[0], rest[1]);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Graph> small_graphs(std::size_t max_vertices)
{
    std::vector<Graph> out;
    for (std::size_t k = 1; k <= max_vertices; ++k) {
        const auto pairs = k * (k + 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph h(letter_names(k));
            std::size_t bit = 0;
            for (VertexId a = 0; a < k; ++a)
                for (VertexId b = a; b < k; ++b, ++bit)
                    if (mask >> bit & 1)
                        h.add_edge(a, b);
            out.push_back(std::move(h));
        }
    }
    return out;
}

EquivalenceReport check_tree(const EquivalenceOptions& o)
{
    EquivalenceReport r{"tree", "", 0, 0, {}};
    std::vector<std::pair<Graph, Graph>> cases;
    for (std::size_t n = 2; n <= std::max<std::size_t>(o.max_length, 2); ++n)
        for (const auto& t : all_trees(n))
            for (const auto& h : small_graphs(o.max_symbols))
                cases.emplace_back(t, h);
    for (const auto& [t, h] : select(cases, o, r)) {
        const auto td = symmetric_digraph(t);
        const auto hd = symmetric_digraph(h);
        std::vector<Configuration> colorings;
        for (const auto& w : all_words(h.num_vertices(), t.num_vertices())) {
            auto c = to_configuration(w);
            if (is_h_coloring(td, hd, c))
                colorings.push_back(std::move(c));
        }
        if (colorings.empty())
            continue;
        const auto labels = component_labels(h_coloring_space(td, hd, colorings[0], colorings[0]), colorings);
        bool agree = true;
        for (std::size_t i = 0; i < colorings.size() && agree; ++i)
            for (std::size_t j = 0; j < colorings.size() && agree; ++j)
                agree = tree_reach(t, 0, colorings[i], colorings[j], h) == (labels[i] == labels[j]);
        record(r, agree, [&] { return "tree:\n" + write_graph(t) + "H:\n" + write_graph(h); });
    }
    return r;
}

EquivalenceReport check_treedepth(const EquivalenceOptions& o)
{
    EquivalenceReport r{"treedepth", "sampled", 0, 0, {}};
    std::mt19937_64 rng(o.seed);
    const auto max_vertices = std::max<std::size_t>(o.max_length, 1);
    for (std::size_t trial = 0; trial < o.samples; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i)
            names.push_back("g" + std::to_string(i));
        Digraph g(names);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v)
                if (u != v && rng() % 4 == 0)
                    g.add_arc(u, v);
        const auto k = std::uniform_int_distribution<std::size_t>(1, o.max_symbols)(rng);
        const auto h = digraph_from_mask(k, rng() & ((std::uint64_t{1} << (k * k)) - 1));
        std::vector<Configuration> colorings;
        for (const auto& w : all_words(k, n)) {
            auto c = to_configuration(w);
            if (is_h_coloring(g, h, c))
                colorings.push_back(std::move(c));
        }
        if (colorings.empty())
            continue;
        const auto alpha = colorings[rng() % colorings.size()];
        const auto beta = colorings[rng() % colorings.size()];
        const auto forest = exact_treedepth(underlying_graph(g)).forest;
        const auto direct = bfs_reach(h_coloring_space(g, h, alpha, beta)).reachable();
        const auto via_core = treedepth_reach(g, forest, alpha, beta, h);
        bool agree = direct == via_core.reachable;
        if (via_core.sequence)
            agree = agree && verify_sequence(h_coloring_space(g, h, alpha, beta), *via_core.sequence) &&
                    via_core.sequence->steps.back() == beta;
        record(r, agree, [&] { return "G:\n" + write_digraph(g) + "H:\n" + write_digraph(h); });
    }
    return r;
}

} // namespace

std::string EquivalenceReport::render() const
{
    std::ostringstream out;
    out << "pair=" << pair << "\nmode=" << mode << "\ncases=" << cases << "\nagreements=" << agreements
        << "\ndisagreements=" << disagreements() << '\n';
    for (const auto& c : counterexamples)
        out << "counterexample:\n" << c << '\n';
    return out.str();
}

const std::vector<std::string>& equivalence_pairs()
{
    static const std::vector<std::string> pairs{"machine-srs", "split", "srs-hword", "shortest-path", "max-is",
                                                "list-coloring", "list-plain", "cycle", "tree", "treedepth"};
    return pairs;
}

EquivalenceReport check_equivalence(const std::string& pair, const EquivalenceOptions& options)
{
    if (pair == "machine-srs")
        return check_machine_srs(options);
    if (pair == "split")
        return check_split(options);
    if (pair == "srs-hword")
        return check_srs_hword(options);
    if (pair == "shortest-path" || pair == "max-is" || pair == "list-coloring")
        return check_reduction(pair, options);
    if (pair == "list-plain")
        return check_list_plain(options);
    if (pair == "cycle")
        return check_cycle(options);
    if (pair == "tree")
        return check_tree(options);
    if (pair == "treedepth")
        return check_treedepth(options);
    throw ValidationError("unknown equivalence pair '" + pair + "'");
}

} // namespace reconf::cli
