#pragma once

#include "isr/augmenting.hpp"
#include "isr/claw.hpp"
#include "isr/graph.hpp"
#include "isr/instance.hpp"
#include "isr/mis.hpp"
#include "isr/oracle.hpp"
#include "isr/patterns.hpp"
#include "isr/reach.hpp"
#include "isr/reductions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isr {

enum class Verdict { yes, no, unknown };

inline auto to_string(Verdict v) -> std::string_view
{
    switch (v) {
        case Verdict::yes: return "YES";
        case Verdict::no: return "NO";
        case Verdict::unknown: return "UNKNOWN";
    }
    return "?";
}

class NotForkFree : public GraphError {
public:
    explicit NotForkFree(PatternEmbedding fork) :
        GraphError("the graph contains an induced fork (center " + std::to_string(fork.center) + "); use the oracle"),
        embedding(std::move(fork))
    {
    }

    PatternEmbedding embedding;
};

class Unsupported : public GraphError {
public:
    using GraphError::GraphError;
};

struct SolveOptions {
    Rule rule = Rule::ts;
    /// Hand stuck recipes and tj on non-maximum sets to the oracle.
    bool oracle_fallback = true;
    std::size_t oracle_budget = default_oracle_budget;
};

struct CertificateRecord {
    Graph graph;
    TokenSet at;
    BlockCertificate certificate;
};

struct SolveStats {
    int restarts = 0;
    int escalations = 0;
    std::vector<std::string> trail;
    std::vector<CertificateRecord> certificates;
};

struct SolveOutcome {
    Verdict verdict = Verdict::no;
    std::optional<SlideSequence> witness;
    std::string reason;
    SolveStats stats;

    auto yes() const -> bool { return verdict == Verdict::yes; }
};

namespace detail {

    struct SolveContext {
        SolveOptions options;
        SolveStats stats;
    };

    inline auto answer(Verdict v, std::string reason, std::optional<SlideSequence> witness = std::nullopt) -> SolveOutcome
    {
        return SolveOutcome{v, std::move(witness), std::move(reason), {}};
    }

    inline auto from_oracle(const ReachabilityReport & r) -> SolveOutcome
    {
        switch (r.status) {
            case OracleStatus::reachable: return answer(Verdict::yes, "reachable", r.witness);
            case OracleStatus::unreachable: return answer(Verdict::no, r.reason);
            default: return answer(Verdict::unknown, r.reason);
        }
    }

    inline auto is_maximum_pair(const Instance & inst) -> bool
    {
        int a = alpha(inst.graph);
        return static_cast<int>(inst.source.size()) == a && static_cast<int>(inst.target.size()) == a;
    }

}

/// Decides maximum-set instances on claw-free graphs. This default engine is
/// the exact oracle.
inline auto clawfree_engine(const Instance & inst, std::size_t budget = default_oracle_budget) -> SolveOutcome
{
    if (auto claw = find_induced_claw(inst.graph))
        throw GraphError("clawfree_engine: the graph has an induced claw centred at " + std::to_string(claw->center));
    if (! detail::is_maximum_pair(inst))
        throw GraphError("clawfree_engine: I and J must be maximum independent sets");
    return detail::from_oracle(ts_reachable(inst.graph, inst.source, inst.target, budget));
}

namespace detail {

    inline auto solve_max(const Instance & inst, SolveContext & ctx) -> SolveOutcome
    {
        if (! is_maximum_pair(inst))
            throw GraphError("solve_max: I and J must be maximum independent sets");
        Instance cur = inst;
        if (auto a = rule_A_exhaustive(cur); a.fired()) {
            ctx.stats.trail.push_back(a.note);
            if (a.tag == OutcomeTag::no_instance)
                return answer(Verdict::no, a.note);
            cur = a.instance();
        }
        if (auto m = rule_MIS_exhaustive(cur); m.fired()) {
            ctx.stats.trail.push_back(m.note);
            cur = m.instance();
        }
        auto r = clawfree_engine(cur, ctx.options.oracle_budget);
        if (r.witness)
            r.witness = relabel(*r.witness, cur.graph, inst.graph);
        return r;
    }

    inline auto solve_general(const Instance & inst, SolveContext & ctx) -> SolveOutcome;

    /// Walks the cycle from `start` toward its smaller neighbour.
    inline auto cycle_order(const Graph & g, const std::vector<Vertex> & cycle, Vertex start) -> std::vector<Vertex>
    {
        std::vector<Vertex> order{start};
        Vertex prev = -1, cur = start;
        while (order.size() < cycle.size()) {
            Vertex next = -1;
            for (auto w : g.neighbors(cur))
                if (w != prev && std::binary_search(cycle.begin(), cycle.end(), w)) {
                    next = w;
                    break;
                }
            if (next < 0 || next == start)
                break;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        return order;
    }

    /// Resolves a cycle of the symmetric difference using the free vertex `f`
    /// as a parking place for one cycle token.
    inline auto cycle_with_free(const Graph & g, const TokenSet & cur, const TokenSet & target,
        const std::vector<Vertex> & cycle, const std::vector<Vertex> & frees) -> StepResult
    {
        auto want = normalized(set_minus(cur, cycle));
        for (auto v : set_intersection(target, cycle))
            want.push_back(v);
        want = normalized(want);

        for (auto t : set_intersection(cur, cycle))
            for (auto f : frees) {
                auto park = reach_free_vertex(g, cur, t, f);
                if (park.status == StepStatus::blocked)
                    return park;
                if (! park.done())
                    continue;
                auto order = cycle_order(g, cycle, t);
                int m = static_cast<int>(order.size());
                for (int direction = 0; direction < 2; ++direction) {
                    SlideSequence seq = park.moves;
                    auto now = park.moves.final_set();
                    bool ok = true;
                    Vertex r;
                    if (direction == 0) {
                        for (int k = 2; k < m && ok; k += 2)
                            ok = try_slide(g, now, seq, order[k], order[k - 1]);
                        r = order[m - 1];
                    }
                    else {
                        for (int k = m - 2; k >= 2 && ok; k -= 2)
                            ok = try_slide(g, now, seq, order[k], order[k + 1]);
                        r = order[1];
                    }
                    if (! ok || ! is_free(g, without(now, f), r))
                        continue;
                    if (! try_slide(g, now, seq, f, r)) {
                        if (! is_free(g, now, r))
                            continue;
                        auto back = reach_free_vertex(g, now, f, r);
                        seq.append(back.moves);
                        if (back.status == StepStatus::blocked)
                            return StepResult{StepStatus::blocked, seq, back.certificate, back.diagnostic};
                        if (! back.done())
                            continue;
                        now = seq.final_set();
                    }
                    if (now == want)
                        return StepResult{StepStatus::done, seq, std::nullopt, {}};
                }
            }
        return StepResult{StepStatus::stalled, SlideSequence{cur, {}}, std::nullopt, "no parking place resolves the cycle"};
    }

}

/// Replaces I's tokens on the cycle `cycle` of G[I delta J] by J's.
inline auto resolve_cycle(const Graph & g, const TokenSet & cur_in, const TokenSet & target_in, std::vector<Vertex> cycle)
    -> StepResult
{
    auto cur = normalized(cur_in), target = normalized(target_in);
    cycle = normalized(std::move(cycle));
    std::vector<Vertex> frees;
    for (Vertex f = 0; f < g.size(); ++f)
        if (is_free(g, cur, f))
            frees.push_back(f);
    if (! frees.empty())
        return detail::cycle_with_free(g, cur, target, cycle, frees);

    auto path = find_augmenting_path(g, cur, cycle);
    if (! path)
        return StepResult{StepStatus::stalled, SlideSequence{cur, {}}, std::nullopt, "no augmenting path avoiding the cycle"};
    auto & p = *path;
    SlideSequence seq{cur, {}};
    auto now = cur;
    for (std::size_t k = 1; k < p.size(); k += 2)
        if (! detail::try_slide(g, now, seq, p[k], p[k - 1]))
            return StepResult{StepStatus::stalled, SlideSequence{cur, {}}, std::nullopt, "augmenting path slide failed"};
    auto inner = detail::cycle_with_free(g, now, target, cycle, {p.back()});
    seq.append(inner.moves);
    if (! inner.done()) {
        if (inner.status == StepStatus::blocked)
            return StepResult{StepStatus::blocked, seq, inner.certificate, inner.diagnostic};
        return StepResult{StepStatus::stalled, SlideSequence{cur, {}}, std::nullopt, inner.diagnostic};
    }
    now = seq.final_set();
    for (std::size_t k = p.size() - 1; k >= 2; k -= 2)
        if (! detail::try_slide(g, now, seq, p[k - 2], p[k - 1]))
            return StepResult{StepStatus::stalled, SlideSequence{cur, {}}, std::nullopt, "unwinding the augmenting path failed"};
    return StepResult{StepStatus::done, seq, std::nullopt, {}};
}

namespace detail {

    struct DiffComponent {
        enum Shape { isolated, path, cycle, other } shape;
        std::vector<Vertex> vertices;
    };

    inline auto difference_components(const Graph & g, const TokenSet & a, const TokenSet & b) -> std::vector<DiffComponent>
    {
        auto diff = symmetric_difference(a, b);
        auto sub = g.induced(diff);
        std::vector<DiffComponent> out;
        for (auto & comp : connected_components(sub)) {
            DiffComponent d{DiffComponent::other, {}};
            int max_deg = 0, edges = 0;
            for (auto v : comp) {
                d.vertices.push_back(diff[v]);
                max_deg = std::max(max_deg, sub.degree(v));
                edges += sub.degree(v);
            }
            edges /= 2;
            int n = static_cast<int>(comp.size());
            if (n == 1)
                d.shape = DiffComponent::isolated;
            else if (max_deg <= 2 && edges == n - 1)
                d.shape = DiffComponent::path;
            else if (max_deg == 2 && edges == n)
                d.shape = DiffComponent::cycle;
            out.push_back(std::move(d));
        }
        return out;
    }

    /// Path vertices listed from an end, preferring an end outside `from`.
    inline auto path_order(const Graph & g, const std::vector<Vertex> & path, const TokenSet & from) -> std::vector<Vertex>
    {
        std::vector<Vertex> ends;
        for (auto v : path) {
            int d = 0;
            for (auto w : g.neighbors(v))
                d += std::binary_search(path.begin(), path.end(), w);
            if (d <= 1)
                ends.push_back(v);
        }
        Vertex start = ends.front();
        for (auto e : ends)
            if (! contains(from, e)) {
                start = e;
                break;
            }
        std::vector<Vertex> order{start};
        Vertex prev = -1;
        while (order.size() < path.size()) {
            for (auto w : g.neighbors(order.back()))
                if (w != prev && std::binary_search(path.begin(), path.end(), w)) {
                    prev = order.back();
                    order.push_back(w);
                    break;
                }
        }
        return order;
    }

    /// Connected, prime, reduced component with |I| = |J|.
    inline auto solve_component(const Instance & part, SolveContext & ctx) -> SolveOutcome
    {
        auto & g = part.graph;
        auto & target = part.target;
        auto cur = part.source;
        SlideSequence seq{cur, {}};

        auto with_prefix = [&](SolveOutcome r, const Graph & on) {
            if (r.yes()) {
                seq.append(relabel(*r.witness, on, g));
                r.witness = seq;
            }
            return r;
        };
        auto restart = [&](Instance child) {
            ++ctx.stats.restarts;
            child.merged.clear();
            return with_prefix(solve_general(child, ctx), child.graph);
        };
        auto escalate = [&](const std::string & why) {
            ++ctx.stats.escalations;
            ctx.stats.trail.push_back("escalated to the oracle: " + why);
            if (! ctx.options.oracle_fallback)
                return answer(Verdict::unknown, "recipe stuck: " + why);
            return with_prefix(from_oracle(ts_reachable(g, cur, target, ctx.options.oracle_budget)), g);
        };

        int chains = 0;
        for (;;) {
            if (cur == target)
                return answer(Verdict::yes, "resolved", seq);
            Instance now{g, cur, target, {}};
            if (is_maximum_pair(now))
                return with_prefix(solve_max(now, ctx), g);
            if (auto a = rule_A_exhaustive(now); a.fired()) {
                ctx.stats.trail.push_back(a.note);
                if (a.tag == OutcomeTag::no_instance)
                    return answer(Verdict::no, a.note);
                return restart(a.instance());
            }

            auto comps = difference_components(g, cur, target);
            StepResult step;
            bool acted = false;
            for (auto & d : comps)
                if (d.shape == DiffComponent::other)
                    return escalate("a component of the symmetric difference is neither a path nor a cycle");

            for (auto & d : comps) {
                if (d.shape != DiffComponent::path)
                    continue;
                auto order = path_order(g, d.vertices, cur);
                if (contains(cur, order.front()))
                    continue;
                step = StepResult{StepStatus::done, SlideSequence{cur, {}}, std::nullopt, {}};
                auto now_set = cur;
                for (std::size_t k = 1; k < order.size() && step.done(); k += 2)
                    if (! try_slide(g, now_set, step.moves, order[k], order[k - 1]))
                        step = StepResult{StepStatus::stalled, step.moves, std::nullopt,
                            "path slide " + std::to_string(order[k]) + " -> " + std::to_string(order[k - 1]) + " blocked"};
                acted = true;
                break;
            }

            if (! acted) {
                std::vector<Vertex> loose_i, loose_j;
                for (auto & d : comps) {
                    if (d.shape == DiffComponent::isolated)
                        (contains(cur, d.vertices[0]) ? loose_i : loose_j).push_back(d.vertices[0]);
                    else if (d.shape == DiffComponent::path)
                        loose_i.push_back(path_order(g, d.vertices, {}).front());
                }
                std::sort(loose_i.begin(), loose_i.end());
                std::sort(loose_j.begin(), loose_j.end());
                if (! loose_i.empty() && ! loose_j.empty()) {
                    step = reach_free_vertex(g, cur, loose_i.front(), loose_j.front());
                    acted = true;
                }
            }

            if (! acted)
                for (auto & d : comps)
                    if (d.shape == DiffComponent::cycle) {
                        step = resolve_cycle(g, cur, target, d.vertices);
                        acted = true;
                        // no augmenting path: free a vertex along a chain through the cycle
                        if (step.status == StepStatus::stalled && step.moves.moves.empty() && ++chains <= g.size())
                            if (auto chain = find_freeing_chain(g, cur)) {
                                ctx.stats.trail.push_back("freeing chain ending at " + std::to_string(chain->back()));
                                step = StepResult{StepStatus::done, SlideSequence{cur, {}}, std::nullopt, {}};
                                auto now_set = cur;
                                for (std::size_t k = 1; k < chain->size() && step.done(); k += 2)
                                    if (! try_slide(g, now_set, step.moves, (*chain)[k], (*chain)[k - 1]))
                                        step.status = StepStatus::stalled;
                                if (! step.done())
                                    step.diagnostic = "freeing chain slide blocked";
                            }
                        break;
                    }

            if (! acted)
                return escalate("no component of the symmetric difference can be resolved");

            seq.append(step.moves);
            cur = step.moves.final_set();
            if (step.status == StepStatus::stalled)
                return escalate(step.diagnostic);
            if (step.status == StepStatus::blocked) {
                auto & cert = *step.certificate;
                ctx.stats.certificates.push_back({g, cur, cert});
                auto z = rule_Z(Instance{g, cur, target, {}}, cert);
                ctx.stats.trail.push_back(z.note + " (" + std::string(to_string(cert.source)) + ")");
                if (z.tag == OutcomeTag::no_instance)
                    return answer(Verdict::no, z.note);
                return restart(z.instance());
            }
        }
    }

    inline auto solve_general(const Instance & inst, SolveContext & ctx) -> SolveOutcome
    {
        if (inst.source.size() != inst.target.size())
            return answer(Verdict::no, "token counts differ");
        if (inst.source == inst.target)
            return answer(Verdict::yes, "I = J", SlideSequence{inst.source, {}});
        if (is_maximum_pair(inst))
            return solve_max(inst, ctx);

        auto red = reduce_to_prime(inst);
        for (auto & line : red.log)
            ctx.stats.trail.push_back(line);
        if (red.no_instance)
            return answer(Verdict::no, red.log.empty() ? "reduction" : red.log.back());

        std::vector<SlideSequence> witnesses;
        for (auto & part : red.parts) {
            auto r = solve_component(part, ctx);
            if (! r.yes())
                return r;
            witnesses.push_back(*r.witness);
        }
        return answer(Verdict::yes, "all components resolved", lift_through_reduction(inst, red.parts, witnesses, red.settled));
    }

}

/// Token sliding on fork-free graphs (token jumping for maximum sets). Every
/// YES carries a validated witness.
inline auto solve(const Instance & inst, const SolveOptions & options = {}) -> SolveOutcome
{
    detail::SolveContext ctx{options, {}};
    if (inst.source.size() != inst.target.size()) {
        auto r = detail::answer(Verdict::no, "token counts differ");
        return r;
    }
    if (auto fork = find_induced_fork(inst.graph))
        throw NotForkFree(*fork);

    SolveOutcome out;
    if (options.rule == Rule::tj && ! detail::is_maximum_pair(inst)) {
        if (! options.oracle_fallback)
            throw Unsupported("token jumping is only covered for maximum independent sets");
        ctx.stats.trail.push_back("token jumping on non-maximum sets: oracle");
        out = detail::from_oracle(tj_reachable(inst.graph, inst.source, inst.target, options.oracle_budget));
    }
    else {
        Instance clean{inst.graph, inst.source, inst.target, {}};
        out = detail::solve_general(clean, ctx);
    }
    out.stats = std::move(ctx.stats);
    if (out.yes()) {
        if (auto ok = validate_sequence(inst.graph, *out.witness, inst.target, options.rule); ! ok)
            throw InvariantFailure("solver witness invalid at move " + std::to_string(ok.index) + ": " + ok.message);
    }
    return out;
}

}
