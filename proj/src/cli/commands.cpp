#include "reconf/cli/commands.hpp"

#include "reconf/adapters.hpp"
#include "reconf/cli/instance.hpp"
#include "reconf/error.hpp"
#include "reconf/hword.hpp"
#include "reconf/layout.hpp"
#include "reconf/reductions.hpp"
#include "reconf/split.hpp"
#include "reconf/text_format.hpp"
#include "reconf/tree_recolor.hpp"
#include "reconf/treedepth_solver.hpp"
#include "reconf/turing.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace reconf::cli {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> stage_order{"tm", "srs", "split", "hword", "reduction"};
const std::vector<std::string> reduction_stages{"shortest-path", "max-is", "list-coloring", "k-coloring"};

std::size_t stage_rank(const std::string& stage)
{
    if (std::find(reduction_stages.begin(), reduction_stages.end(), stage) != reduction_stages.end())
        return 4;
    auto it = std::find(stage_order.begin(), stage_order.end(), stage);
    if (it == stage_order.end() || stage == "reduction")
        throw ValidationError("unknown stage '" + stage +
                              "' (expected srs, split, hword, shortest-path, max-is, list-coloring or k-coloring)");
    return static_cast<std::size_t>(it - stage_order.begin());
}

bool has_keyword(const std::vector<TextLine>& lines, const std::string& keyword)
{
    return std::any_of(lines.begin(), lines.end(), [&](const TextLine& l) { return l.tokens[0] == keyword; });
}

void emit(CommandResult& r, const std::string& out_path, const std::string& contents)
{
    if (out_path.empty())
        r.output += contents;
    else
        write_file(out_path, contents);
}

json graph_stats(const Graph& g)
{
    return json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
}

json arrangement_stats(const Graph& g, const BucketArrangement& a, std::size_t bound)
{
    json j;
    j["bucket_count"] = a.buckets.size();
    j["max_bucket_size"] = a.max_bucket_size();
    j["arrangement_valid"] = verify_bucket_arrangement(g, a);
    j["bandwidth_bound"] = bound;
    j["layout_bandwidth"] = bandwidth_of_layout(g, bucket_layout(g, a));
    return j;
}

void guard_vertices(std::size_t estimate, const CommandOptions& o, const std::string& stage)
{
    if (estimate > o.max_vertices)
        throw ResourceLimitError("the " + stage + " instance would have " + std::to_string(estimate) +
                                 " vertices, above --max-vertices " + std::to_string(o.max_vertices));
}

Instance srs_instance(const StringRewritingSystem& sys, const Word& s, const Word& t)
{
    Instance inst;
    inst.kind = ProblemKind::SrsWord;
    inst.srs = sys;
    inst.config_a = to_configuration(s);
    inst.config_b = to_configuration(t);
    return inst;
}

std::string format_verdict(const std::string& verdict, const std::string& method, const SearchStats& stats)
{
    return "verdict=" + verdict + "\nmethod=" + method + "\n" + format_stats(stats);
}

} // namespace

const std::string& demo_machine_text()
{
    static const std::string text = R"(# Accepts inputs over {a, b} without any b and parks the head on $.
tape: $ ¢ a b
states: q0 scan back acc rej
init: q0
accept: acc
reject: rej
delta q0 $ -> scan $ R
delta scan a -> scan a R
delta scan b -> rej b S
delta scan ¢ -> back ¢ L
delta back a -> back a L
delta back $ -> acc $ S
)";
    return text;
}

CommandResult cmd_compile(const std::string& input_path, const CommandOptions& o)
{
    const auto text = read_file(input_path);
    const auto lines = tokenize_lines(text);
    const auto target = stage_rank(o.stage);
    CommandResult r;
    json manifest;
    manifest["source"] = input_path;
    manifest["target_stage"] = o.stage;
    json stages = json::array();

    std::optional<StringRewritingSystem> sys;
    std::optional<HStructure> h;
    Word s, t;
    std::size_t stage = 0;

    if (has_keyword(lines, "tape:")) {
        const auto m = parse_turing_machine(text);
        const auto x = m.tape_alphabet().parse_word(o.input.value_or(""));
        const auto space = o.space.value_or(x.size() + 2);
        validate_normal_form(m, x, space);
        sys = tm_to_srs(m);
        std::tie(s, t) = make_endpoints(m, x, space);
        stages.push_back({{"stage", "tm"},
                          {"tape_symbols", m.tape_alphabet().size()},
                          {"states", m.states().size()},
                          {"transitions", m.delta().size()},
                          {"input_length", x.size()},
                          {"space", space}});
        stage = 1;
    } else if (has_keyword(lines, "alphabet:")) {
        sys = parse_srs(text);
        if (!o.word_a || !o.word_b)
            throw ValidationError("compiling a rewriting system needs --word-a and --word-b");
        s = sys->alphabet().parse_word(*o.word_a);
        t = sys->alphabet().parse_word(*o.word_b);
        stage = 1;
    } else {
        auto inst = parse_instance(text);
        if (inst.kind == ProblemKind::SrsWord) {
            sys = *inst.srs;
            stage = 1;
        } else if (inst.kind == ProblemKind::HWord) {
            h = *inst.h_structure;
            stage = 3;
        } else {
            throw ValidationError("only machines, rewriting systems, srs-word and h-word instances can be compiled");
        }
        s = to_word(inst.config_a);
        t = to_word(inst.config_b);
    }
    if (target < stage)
        throw ValidationError("input is already past stage '" + o.stage + "'");
    if (sys) {
        if (!sys->is_two_balanced() || !sys->symmetric())
            throw ValidationError("lowering needs a symmetric 2-balanced rewriting system");
        if (s.size() != t.size())
            throw ValidationError("endpoint words must have equal length");
        stages.push_back({{"stage", "srs"},
                          {"alphabet_size", sys->alphabet().size()},
                          {"rules", sys->rules().size()},
                          {"word_length", s.size()}});
    }
    Instance out;
    if (stage == 1 && target >= 2) {
        auto split = split_rules(*sys);
        s = embed(split, s);
        t = embed(split, t);
        sys = split.system;
        stages.push_back({{"stage", "split"},
                          {"alphabet_size", sys->alphabet().size()},
                          {"rules", sys->rules().size()},
                          {"split_rules", split.split_rules.size()},
                          {"word_length", s.size()}});
        stage = 2;
    }
    if (stage == 2 && target >= 3) {
        h = build_h_from_srs(*sys);
        s = psi(s, *h);
        t = psi(t, *h);
        stages.push_back({{"stage", "hword"},
                          {"alphabet_size", h->alphabet.size()},
                          {"arcs", h->digraph.num_arcs()},
                          {"word_length", s.size()}});
        stage = 3;
    }
    if (target <= 2) {
        out = srs_instance(*sys, s, t);
    } else if (target == 3) {
        out.kind = ProblemKind::HWord;
        out.h_structure = *h;
        out.config_a = to_configuration(s);
        out.config_b = to_configuration(t);
    } else {
        const auto& hd = h->digraph;
        const auto k = hd.num_vertices();
        const auto n = s.size();
        const auto forbidden = k * k - hd.num_arcs();
        json j;
        j["stage"] = o.stage;
        if (o.stage == "shortest-path") {
            guard_vertices(n * k + 2, o, o.stage);
            auto inst = to_shortest_path(hd, s, t);
            out.kind = ProblemKind::ShortestPath;
            out.graph = inst.graph;
            out.source = inst.source;
            out.sink = inst.sink;
            out.layers = inst.layers;
            out.config_a = inst.path_a;
            out.config_b = inst.path_b;
            j.update(graph_stats(inst.graph));
            j.update(arrangement_stats(inst.graph, inst.layers, 2 * k));
        } else if (o.stage == "max-is") {
            guard_vertices(n * k, o, o.stage);
            auto inst = to_mis(hd, s, t);
            out.kind = ProblemKind::MaxIS;
            out.graph = inst.graph;
            out.layers = inst.cliques;
            out.config_a = inst.set_a;
            out.config_b = inst.set_b;
            j.update(graph_stats(inst.graph));
            j.update(arrangement_stats(inst.graph, inst.cliques, 2 * k));
        } else {
            const auto list_vertices = n + (n - 1) * forbidden;
            guard_vertices(o.stage == "list-coloring" ? list_vertices : list_vertices * (1 + 2 * k), o, o.stage);
            auto list = to_list_coloring(hd, s, t);
            j["onion_width"] = forbidden;
            j["colors"] = list.num_colors;
            if (o.stage == "list-coloring") {
                out.kind = ProblemKind::ListColoring;
                out.graph = list.graph;
                out.color_names = list.color_names;
                out.lists = list.lists;
                out.layers = list.arrangement;
                out.config_a = list.coloring_a;
                out.config_b = list.coloring_b;
                j.update(graph_stats(list.graph));
                j.update(arrangement_stats(list.graph, list.arrangement, 2 * forbidden));
            } else {
                auto plain = list_to_plain(list);
                out.kind = ProblemKind::KColoring;
                out.graph = plain.graph;
                out.color_names = list.color_names;
                out.config_a = plain.coloring_a;
                out.config_b = plain.coloring_b;
                j.update(graph_stats(plain.graph));
            }
        }
        stages.push_back(j);
    }
    manifest["stages"] = stages;
    emit(r, o.out, write_instance(out));
    if (!o.out.empty()) {
        write_file(o.out + ".manifest.json", manifest.dump(2) + "\n");
        r.output += "stage=" + o.stage + "\ninstance=" + o.out + "\nmanifest=" + o.out + ".manifest.json\n";
    }
    return r;
}

CommandResult cmd_solve(const std::string& instance_path, const CommandOptions& o)
{
    const auto inst = parse_instance(read_file(instance_path));
    CommandResult r;
    std::optional<ReconfigurationSequence> sequence;
    std::string method;
    SearchStats stats;
    const auto space = make_space(inst);
    try {
        if (inst.kind == ProblemKind::HColoring && inst.graph && inst.h_graph && is_forest(*inst.graph)) {
            method = "tree";
            sequence = tree_reconfigure_sequence(*inst.graph, 0, inst.config_a, inst.config_b, *inst.h_graph);
            stats.moves = sequence ? sequence->moves() : 0;
        } else if (inst.kind == ProblemKind::HColoring && inst.forest) {
            method = "treedepth";
            auto result =
                treedepth_reach(source_digraph(inst), *inst.forest, inst.config_a, inst.config_b, target_digraph(inst),
                                o.limits);
            sequence = result.sequence;
            stats = result.stats;
        } else {
            method = "bfs";
            auto result = bfs_reach(space, o.limits);
            sequence = result.sequence;
            stats = result.stats;
        }
    } catch (const ResourceLimitError& e) {
        r.exit_code = exit_resource;
        r.output = format_verdict("resource-limit", method, stats);
        r.error = std::string("error: ") + e.what() + "\n";
        return r;
    }
    if (!sequence) {
        r.exit_code = exit_unreachable;
        r.output = format_verdict("unreachable", method, stats);
        return r;
    }
    if (!verify_sequence(space, *sequence) || sequence->steps.front() != inst.config_a ||
        sequence->steps.back() != inst.config_b)
        throw std::logic_error("solver produced an invalid sequence");
    r.output = format_verdict("reachable", method, stats);
    if (o.out.empty())
        r.output += "sequence:\n" + write_sequence(inst, *sequence);
    else
        write_file(o.out, write_sequence(inst, *sequence));
    return r;
}

CommandResult cmd_verify(const std::string& instance_path, const std::string& sequence_path)
{
    const auto inst = parse_instance(read_file(instance_path));
    const auto seq = parse_sequence(inst, read_file(sequence_path));
    const auto space = make_space(inst);
    CommandResult r;
    if (seq.steps.empty()) {
        r.exit_code = exit_validation;
        r.output = "valid=false\nreason=empty sequence\n";
        return r;
    }
    if (auto bad = first_violation(space, seq)) {
        r.exit_code = exit_validation;
        r.output = "valid=false\nstep=" + std::to_string(*bad) + "\nreason=" +
                   (space.is_valid(seq.steps[*bad]) ? "not a single move from the previous configuration"
                                                    : "invalid configuration") +
                   "\n";
        return r;
    }
    if (seq.steps.front() != inst.config_a || seq.steps.back() != inst.config_b) {
        r.exit_code = exit_validation;
        r.output = std::string("valid=false\nreason=sequence does not run from config a to config b\n");
        return r;
    }
    r.output = "valid=true\nmoves=" + std::to_string(seq.moves()) + "\n";
    return r;
}

CommandResult cmd_check_equivalence(const std::string& pair, const CommandOptions& o)
{
    auto eo = o.equivalence;
    eo.seed = o.seed;
    const auto report = check_equivalence(pair, eo);
    CommandResult r;
    r.output = report.render();
    r.exit_code = report.disagreements() == 0 ? exit_success : exit_unreachable;
    if (!o.out.empty())
        write_file(o.out, r.output);
    return r;
}

CommandResult cmd_treedepth(const std::string& graph_path, const CommandOptions& o)
{
    const auto text = read_file(graph_path);
    const auto lines = tokenize_lines(text);
    const Graph g = has_keyword(lines, "a") ? underlying_graph(parse_digraph(lines)) : parse_graph(lines);
    const auto result = exact_treedepth(g, o.treedepth_limit);
    CommandResult r;
    r.output = "treedepth=" + std::to_string(result.treedepth) + "\n";
    const auto forest = write_forest(result.forest, g.names());
    if (o.out.empty())
        r.output += "forest:\n" + forest;
    else
        write_file(o.out, forest);
    return r;
}

namespace {

/// Number of (directed rule, position) pairs taking `from` to `to`.
std::size_t directed_applications(const Word& from, const Word& to, const std::vector<Rule>& rules)
{
    std::size_t count = 0;
    for (const auto& rule : rules)
        for (std::size_t p = 0; p + 1 < from.size(); ++p)
            if (from[p] == rule.lhs[0] && from[p + 1] == rule.lhs[1] && apply_rule_at(from, rule, p) == to)
                ++count;
    return count;
}

std::string outcome_name(RunOutcome o)
{
    switch (o) {
    case RunOutcome::Accepted:
        return "accepted";
    case RunOutcome::Rejected:
        return "rejected";
    case RunOutcome::NoTransition:
        return "halted-without-transition";
    case RunOutcome::Loops:
        return "loops";
    }
    return "unknown";
}

} // namespace

CommandResult cmd_demo_tm(const std::optional<std::string>& machine_path, const CommandOptions& o)
{
    const auto m = parse_turing_machine(machine_path ? read_file(*machine_path) : demo_machine_text());
    const auto x = m.tape_alphabet().parse_word(o.input.value_or(""));
    const auto space = o.space.value_or(x.size() + 2);
    const auto sys = tm_to_srs(m);
    const auto gamma = encoding_alphabet(m);
    const auto directed = tm_directed_rules(m);
    const auto run = run_machine(m, x);

    std::ostringstream out;
    out << "machine=" << (machine_path ? *machine_path : std::string("built-in")) << '\n'
        << "input=" << m.tape_alphabet().render(x) << '\n'
        << "space=" << space << '\n'
        << "outcome=" << outcome_name(run.outcome) << '\n'
        << "steps=" << run.trace.size() - 1 << '\n'
        << "srs_alphabet=" << gamma.size() << '\n'
        << "srs_rules=" << sys.rules().size() << '\n'
        << "trace:\n";
    bool matches = true;
    for (std::size_t i = 0; i < run.trace.size(); ++i) {
        const auto w = encode_config(m, run.trace[i], space);
        out << "  " << gamma.render(w) << '\n';
        if (i > 0)
            matches = matches && directed_applications(encode_config(m, run.trace[i - 1], space), w, directed) == 1;
    }
    out << "simulation_matches=" << (matches ? "true" : "false") << '\n';
    const auto [s, t] = make_endpoints(m, x, space);
    const auto final_word = encode_config(m, run.trace.back(), space);
    const auto final_reach = srs_reachability(s, final_word, sys, o.limits);
    out << "final_configuration_reachable=" << (final_reach ? "true" : "false") << '\n';
    const auto cleared = srs_reachability(s, t, sys, o.limits);
    out << "cleared_accepting_reachable=" << (cleared ? "true" : "false") << '\n';

    CommandResult r;
    r.output = out.str();
    r.exit_code = run.outcome == RunOutcome::Accepted ? exit_success : exit_unreachable;
    if (!matches)
        throw std::logic_error("rewriting simulation diverged from the machine run");
    if (!o.out.empty())
        write_file(o.out, r.output);
    return r;
}

CommandResult run_guarded(const std::function<CommandResult()>& command)
{
    CommandResult r;
    try {
        return command();
    } catch (const ResourceLimitError& e) {
        r.exit_code = exit_resource;
        r.error = std::string("error: ") + e.what() + "\n";
    } catch (const ValidationError& e) {
        r.exit_code = exit_validation;
        r.error = std::string("error: ") + e.what() + "\n";
    }
    return r;
}

} // namespace reconf::cli
