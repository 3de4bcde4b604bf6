#include "isr/isr.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace isr;

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

auto parse_rule(const std::string & s) -> Rule
{
    if (s == "ts")
        return Rule::ts;
    if (s == "tj")
        return Rule::tj;
    throw CLI::ValidationError("--rule", "expected ts or tj");
}

/// Writes to `path`, or to stdout for "" and "-".
auto emit(const std::string & path, const std::string & text) -> void
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file(path, text);
}

auto parse_ids(const std::string & text) -> TokenSet
{
    TokenSet out;
    std::istringstream in(text);
    for (std::string w; in >> w;) {
        for (auto & c : w)
            if (c == ',')
                c = ' ';
        std::istringstream part(w);
        for (int v; part >> v;)
            out.push_back(v);
    }
    return out;
}

auto verdict_code(Verdict v) -> int
{
    return v == Verdict::yes ? exit_yes : v == Verdict::no ? exit_no : exit_error;
}

auto print_stats(const SolveOutcome & r) -> void
{
    std::cout << to_string(r.verdict) << "\n";
    std::cout << "reason: " << r.reason << "\n";
    std::cout << "restarts: " << r.stats.restarts << "\n";
    std::cout << "escalations: " << r.stats.escalations << "\n";
    std::cout << "certificates: " << r.stats.certificates.size() << "\n";
    for (auto & c : r.stats.certificates) {
        std::cout << "  " << to_string(c.certificate.source) << " X =";
        for (auto v : c.certificate.blocked)
            std::cout << " " << c.graph.label(v);
        std::cout << "\n";
    }
    if (r.witness)
        std::cout << "length: " << r.witness->length() << "\n";
}

struct SolveArgs {
    std::string instance;
    std::string rule = "ts";
    std::string witness;
    bool trace = false;
    bool fallback = false;
    std::size_t budget = default_oracle_budget;
};

auto cmd_solve(const SolveArgs & a) -> int
{
    auto inst = read_instance(a.instance);
    SolveOptions opt{parse_rule(a.rule), a.fallback, a.budget};
    SolveOutcome r;
    try {
        r = solve(inst, opt);
    }
    catch (const NotForkFree & e) {
        std::cerr << "error: " << e.what() << "; fork center " << e.embedding.center << " leaves";
        for (auto v : e.embedding.leaves)
            std::cerr << " " << v;
        std::cerr << "\n";
        return exit_error;
    }
    if (a.trace)
        for (auto & line : r.stats.trail)
            std::cerr << "trace: " << line << "\n";
    print_stats(r);
    if (r.yes() && ! a.witness.empty())
        emit(a.witness, render_sequence(*r.witness, opt.rule));
    if (r.verdict == Verdict::unknown)
        std::cerr << "error: no verdict without --oracle-fallback: " << r.reason << "\n";
    return verdict_code(r.verdict);
}

struct OracleArgs {
    std::string instance;
    std::string rule = "ts";
    std::string witness;
    std::size_t budget = default_oracle_budget;
};

auto cmd_oracle(const OracleArgs & a) -> int
{
    auto inst = read_instance(a.instance);
    auto rule = parse_rule(a.rule);
    auto r = reachable(inst.graph, inst.source, inst.target, rule, a.budget);
    std::cout << to_string(r.status) << "\n";
    std::cout << "explored: " << r.explored << "\n";
    if (r.witness) {
        std::cout << "length: " << r.witness->length() << "\n";
        if (! a.witness.empty())
            emit(a.witness, render_sequence(*r.witness, rule));
    }
    if (r.status == OracleStatus::budget_exhausted) {
        std::cerr << "error: " << r.reason << "\n";
        return exit_error;
    }
    return r.reachable() ? exit_yes : exit_no;
}

auto cmd_validate(const std::string & instance, const std::string & sequence, const std::string & rule_flag) -> int
{
    auto inst = read_instance(instance);
    auto file = read_sequence(sequence, inst.source);
    auto rule = rule_flag.empty() ? file.rule : parse_rule(rule_flag);
    auto v = validate_sequence(inst.graph, file.sequence, inst.target, rule);
    if (v && file.end != file.sequence.final_set())
        v = Validation{false, file.sequence.length(), "declared end set differs from the replayed one"};
    if (v) {
        std::cout << "ok " << file.sequence.length() << " moves\n";
        return exit_yes;
    }
    std::cout << "violation at move " << v.index << ": " << v.message << "\n";
    return exit_no;
}

auto map_path(const std::string & out, const std::string & map) -> std::string
{
    if (! map.empty())
        return map;
    if (out.empty() || out == "-")
        throw CLI::ValidationError("--map", "needed when the instance goes to stdout");
    return out + ".map";
}

auto cmd_subdivide(const std::string & instance, int t, const std::string & out, const std::string & map) -> int
{
    auto inst = read_instance(instance);
    auto m = subdivide(inst.graph, t);
    auto sub = make_instance(m.subdivided, extend(inst.source, m), extend(inst.target, m));
    auto where = map_path(out, map);
    emit(out, render_instance(sub));
    write_file(where, render_submap(m));
    return exit_yes;
}

auto require_maximum(const Instance & inst) -> void
{
    int a = alpha(inst.graph);
    if (static_cast<int>(inst.source.size()) != a || static_cast<int>(inst.target.size()) != a)
        throw GraphError("lift needs maximum independent sets (alpha = " + std::to_string(a) + ")");
}

auto cmd_lift(const std::string & instance, const std::string & sequence, int t, const std::string & out) -> int
{
    auto inst = read_instance(instance);
    require_maximum(inst);
    auto file = read_sequence(sequence, inst.source);
    if (auto v = validate_sequence(inst.graph, file.sequence, inst.target, Rule::ts); ! v)
        throw GraphError("input sequence invalid at move " + std::to_string(v.index) + ": " + v.message);
    auto m = subdivide(inst.graph, t);
    emit(out, render_sequence(lift_sequence(m, file.sequence), Rule::ts));
    return exit_yes;
}

auto cmd_project(const std::string & instance, const std::string & sequence, const std::string & map,
    const std::string & out) -> int
{
    auto inst = read_instance(instance);
    auto m = read_submap(map);
    if (inst.graph.edges() != m.subdivided.edges() || inst.graph.size() != m.subdivided.size())
        throw GraphError("the instance is not the subdivision described by the map");
    auto file = read_sequence(sequence, inst.source);
    if (auto v = validate_sequence(inst.graph, file.sequence, inst.target, Rule::ts); ! v)
        throw GraphError("input sequence invalid at move " + std::to_string(v.index) + ": " + v.message);
    emit(out, render_sequence(project_sequence(m, file.sequence), Rule::ts));
    return exit_yes;
}

struct GenerateArgs {
    std::string family;
    int n = 6;
    int k = 0;
    int a = 2, b = 2, missing = 0;
    int kind = 1;
    int t = 2;
    double density = 0.4;
    std::uint64_t seed = 1;
    std::string input;
    std::string out;
};

auto cmd_generate(const GenerateArgs & a) -> int
{
    Instance inst;
    if (a.family == "path") {
        int k = a.k > 0 ? a.k : (a.n + 1) / 2;
        if (2 * k - 1 > a.n)
            throw GraphError("path: k too large for n");
        TokenSet i, j;
        for (int s = 0; s < k; ++s) {
            i.push_back(2 * s);
            j.push_back(a.n - 1 - 2 * s);
        }
        inst = make_instance(path_graph(a.n), i, j);
    }
    else if (a.family == "cycle") {
        if (a.k == 0 || 2 * a.k == a.n)
            inst = frozen_cycle(a.n);
        else {
            if (2 * a.k > a.n)
                throw GraphError("cycle: k too large for n");
            TokenSet i, j;
            for (int s = 0; s < a.k; ++s) {
                i.push_back(2 * s);
                j.push_back(2 * s + 1);
            }
            inst = make_instance(cycle_graph(a.n), i, j);
        }
    }
    else if (a.family == "complex") {
        auto g = complex_graph(a.a, a.b, a.missing);
        int k = a.k > 0 ? a.k : std::min(a.a, a.b);
        if (k > std::min(a.a, a.b))
            throw GraphError("complex: k larger than a side");
        TokenSet i, j;
        for (int s = 0; s < k; ++s) {
            i.push_back(s);
            j.push_back(a.a + s);
        }
        inst = make_instance(g, i, j);
    }
    else if (a.family == "h-gadget")
        inst = h_gadget(a.kind);
    else if (a.family == "random-forkfree") {
        std::mt19937_64 rng(a.seed);
        auto r = random_forkfree(a.n, rng, a.density);
        int k = a.k > 0 ? a.k : 2;
        auto i = random_independent_set(r.graph, k, rng);
        auto j = random_independent_set(r.graph, k, rng);
        if (! i || ! j)
            throw GraphError("random-forkfree: no independent set of size " + std::to_string(k));
        std::cerr << "acceptance: " << r.accepted << "/" << r.attempts << "\n";
        inst = make_instance(r.graph, *i, *j);
    }
    else if (a.family == "subdivision-hard") {
        if (a.input.empty())
            throw GraphError("subdivision-hard needs --input");
        inst = subdivision_hard(read_instance(a.input), a.t);
    }
    else
        throw GraphError("unknown family '" + a.family + "'");
    emit(a.out, render_instance(inst));
    return exit_yes;
}

auto cmd_convert(const std::string & input, const std::string & i, const std::string & j, int n, const std::string & out)
    -> int
{
    std::ifstream in(input);
    if (! in)
        throw ParseError(0, "cannot open " + input);
    emit(out, render_instance(convert_edge_list(in, parse_ids(i), parse_ids(j), n)));
    return exit_yes;
}

/// One line per file, in input order; workers take every jobs-th file.
auto cmd_batch(const std::vector<std::string> & files, const SolveArgs & a, int jobs) -> int
{
    std::vector<std::string> lines(files.size());
    std::vector<int> codes(files.size(), exit_error);
    auto worker = [&](std::size_t first) {
        for (std::size_t f = first; f < files.size(); f += static_cast<std::size_t>(jobs)) {
            try {
                auto inst = read_instance(files[f]);
                auto r = solve(inst, SolveOptions{parse_rule(a.rule), a.fallback, a.budget});
                lines[f] = files[f] + " " + std::string(to_string(r.verdict)) + " escalations="
                    + std::to_string(r.stats.escalations);
                codes[f] = verdict_code(r.verdict);
            }
            catch (const std::exception & e) {
                lines[f] = files[f] + " ERROR " + e.what();
            }
        }
    };
    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back(worker, static_cast<std::size_t>(w));
    for (auto & th : pool)
        th.join();
    int worst = exit_yes;
    for (std::size_t f = 0; f < files.size(); ++f) {
        std::cout << lines[f] << "\n";
        if (codes[f] == exit_error)
            worst = exit_error;
    }
    return worst;
}

}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Independent set reconfiguration in fork-free graphs"};
    app.require_subcommand(1);
    int code = exit_error;

    SolveArgs solve_args;
    auto * s = app.add_subcommand("solve", "decide reachability with the fork-free solver");
    s->add_option("instance", solve_args.instance)->required();
    s->add_option("--rule", solve_args.rule, "ts or tj");
    s->add_option("--witness", solve_args.witness, "write the witness sequence here on YES");
    s->add_flag("--trace", solve_args.trace, "print the reduction trail on stderr");
    s->add_flag("--oracle-fallback", solve_args.fallback, "let the oracle answer when a recipe is stuck");
    s->add_option("--budget", solve_args.budget, "oracle state budget");
    s->callback([&] { code = cmd_solve(solve_args); });

    OracleArgs oracle_args;
    auto * o = app.add_subcommand("oracle", "exact breadth-first search");
    o->add_option("instance", oracle_args.instance)->required();
    o->add_option("--rule", oracle_args.rule, "ts or tj");
    o->add_option("--budget", oracle_args.budget, "state budget");
    o->add_option("--witness", oracle_args.witness, "write the shortest sequence here");
    o->callback([&] { code = cmd_oracle(oracle_args); });

    std::string v_inst, v_seq, v_rule;
    auto * v = app.add_subcommand("validate", "check a sequence file against an instance");
    v->add_option("instance", v_inst)->required();
    v->add_option("sequence", v_seq)->required();
    v->add_option("--rule", v_rule, "override the rule in the sequence header");
    v->callback([&] { code = cmd_validate(v_inst, v_seq, v_rule); });

    std::string sd_inst, sd_out, sd_map;
    int sd_t = 2;
    auto * sd = app.add_subcommand("subdivide", "even subdivision with extended token sets");
    sd->add_option("instance", sd_inst)->required();
    sd->add_option("--t", sd_t, "segment length (even)");
    sd->add_option("--out", sd_out, "instance output (default stdout)");
    sd->add_option("--map", sd_map, "map output (default <out>.map)");
    sd->callback([&] { code = cmd_subdivide(sd_inst, sd_t, sd_out, sd_map); });

    std::string l_inst, l_seq, l_out;
    int l_t = 2;
    auto * l = app.add_subcommand("lift", "lift a sequence of maximum sets to the subdivision");
    l->add_option("instance", l_inst)->required();
    l->add_option("sequence", l_seq)->required();
    l->add_option("--t", l_t, "segment length (even)");
    l->add_option("--out", l_out, "output (default stdout)");
    l->callback([&] { code = cmd_lift(l_inst, l_seq, l_t, l_out); });

    std::string p_inst, p_seq, p_map, p_out;
    auto * p = app.add_subcommand("project", "project a sequence on the subdivision back to the graph");
    p->add_option("instance", p_inst, "subdivided instance")->required();
    p->add_option("sequence", p_seq)->required();
    p->add_option("map", p_map)->required();
    p->add_option("--out", p_out, "output (default stdout)");
    p->callback([&] { code = cmd_project(p_inst, p_seq, p_map, p_out); });

    GenerateArgs gen;
    auto * g = app.add_subcommand("generate", "write a fixture instance");
    g->add_option("family", gen.family, "path|cycle|complex|h-gadget|random-forkfree|subdivision-hard")->required();
    g->add_option("--n", gen.n, "vertex count");
    g->add_option("--k", gen.k, "token count");
    g->add_option("--a", gen.a, "complex: first side");
    g->add_option("--b", gen.b, "complex: second side");
    g->add_option("--missing", gen.missing, "complex: size of the removed matching");
    g->add_option("--kind", gen.kind, "h-gadget: 1..5");
    g->add_option("--t", gen.t, "subdivision-hard: segment length");
    g->add_option("--density", gen.density, "random-forkfree: edge probability");
    g->add_option("--seed", gen.seed, "random-forkfree: seed");
    g->add_option("--input", gen.input, "subdivision-hard: instance on a graph of maximum degree three");
    g->add_option("--out", gen.out, "output (default stdout)");
    g->callback([&] { code = cmd_generate(gen); });

    std::string c_in, c_i, c_j, c_out;
    int c_n = 0;
    auto * c = app.add_subcommand("convert", "bare edge list to instance");
    c->add_option("edges", c_in)->required();
    c->add_option("--I", c_i, "source set, e.g. \"0,2\"")->required();
    c->add_option("--J", c_j, "target set")->required();
    c->add_option("--n", c_n, "vertex count if larger than the edge list implies");
    c->add_option("--out", c_out, "output (default stdout)");
    c->callback([&] { code = cmd_convert(c_in, c_i, c_j, c_n, c_out); });

    std::vector<std::string> b_files;
    SolveArgs b_args;
    int b_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto * b = app.add_subcommand("batch", "solve many instance files");
    b->add_option("files", b_files)->required();
    b->add_option("--rule", b_args.rule, "ts or tj");
    b->add_flag("--oracle-fallback", b_args.fallback, "let the oracle answer when a recipe is stuck");
    b->add_option("--jobs", b_jobs, "worker threads");
    b->callback([&] { code = cmd_batch(b_files, b_args, b_jobs); });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int r = app.exit(e);
        return r == 0 ? 0 : exit_error;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return code;
}
