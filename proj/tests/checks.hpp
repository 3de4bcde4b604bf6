#pragma once

#include "support.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace isr::test {

/// Per-name counts of checked cases and failures, with the first few failures spelled out.
struct Tally {
    std::map<std::string, std::pair<long, long>> counts;
    std::vector<std::string> examples;

    auto check(const std::string & name, bool ok, const std::string & detail = {}) -> void
    {
        auto & c = counts[name];
        ++c.first;
        if (! ok) {
            ++c.second;
            if (examples.size() < 10)
                examples.push_back(name + ": " + detail);
        }
    }

    auto checked() const -> long
    {
        long n = 0;
        for (auto & [_, c] : counts)
            n += c.first;
        return n;
    }

    auto failures() const -> long
    {
        long n = 0;
        for (auto & [_, c] : counts)
            n += c.second;
        return n;
    }

    auto summary() const -> std::string
    {
        std::ostringstream out;
        bool first = true;
        for (auto & [name, c] : counts) {
            out << (first ? "" : ", ") << name << " " << c.first - c.second << "/" << c.first;
            first = false;
        }
        return out.str();
    }
};

inline auto describe(const Graph & g, const TokenSet & i, const TokenSet & j) -> std::string
{
    std::ostringstream out;
    out << "edges";
    for (auto [a, b] : g.edges())
        out << " " << a << "-" << b;
    out << " I";
    for (auto v : i)
        out << " " << v;
    out << " J";
    for (auto v : j)
        out << " " << v;
    return out.str();
}

/// Every graph on up to `n` vertices, one per isomorphism class.
inline auto all_graphs(int n) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (int size = 1; size <= n; ++size) {
        std::vector<Edge> pairs;
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                pairs.emplace_back(a, b);
        std::set<std::vector<std::uint8_t>> seen;
        for (unsigned m = 0; m < (1u << pairs.size()); ++m) {
            std::vector<Edge> e;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (m >> k & 1)
                    e.push_back(pairs[k]);
            Graph g(size, e);
            if (seen.insert(canonical_code(g)).second)
                out.push_back(g);
        }
    }
    return out;
}

/// No set in the class of `i` puts a token on `x`.
inline auto never_tokens(const Graph & g, const TokenSet & i, const std::vector<Vertex> & x) -> bool
{
    for (auto & s : reachable_sets(g, i, Rule::ts))
        for (auto v : x)
            if (contains(s, v))
                return false;
    return true;
}

/// H1 plus a token y' on x and y: rotating v to w is blocked for good.
inline auto blocked_h1() -> Instance
{
    Graph g(7, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}});
    return make_instance(g, {1, 2, 6}, {1, 3, 6});
}

/// H5 (z = 6) plus a token on c, x, y and a vertex on u, v, w, z.
inline auto blocked_h5() -> Instance
{
    Graph g(9, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 8}, {1, 4}, {1, 7}, {2, 4}, {2, 5},
                   {2, 7}, {3, 5}, {3, 7}, {4, 5}, {4, 6}, {4, 8}, {5, 6}, {5, 8}, {6, 7}});
    return make_instance(g, {1, 2, 8}, {1, 3, 8});
}

/// Whether `goal` is within `depth` moves of `cur`.
inline auto within_moves(const Graph & g, const TokenSet & cur, const TokenSet & goal, int depth, Rule rule) -> bool
{
    if (cur == goal)
        return true;
    if (depth == 0)
        return false;
    for (auto t : cur)
        for (Vertex w = 0; w < g.size(); ++w) {
            if (contains(cur, w) || (rule == Rule::ts && ! g.adjacent(t, w)))
                continue;
            auto next = with(without(cur, t), w);
            if (is_independent(g, next) && within_moves(g, next, goal, depth - 1, rule))
                return true;
        }
    return false;
}

/// Length of a shortest sequence by iterative deepening; the pair must be
/// reachable.
inline auto shortest_by_deepening(const Graph & g, const TokenSet & i, const TokenSet & j, Rule rule) -> int
{
    for (int d = 0;; ++d)
        if (within_moves(g, i, j, d, rule))
            return d;
}

/// What a rule outcome claims about reachability.
inline auto claimed(const RuleOutcome & r) -> bool
{
    if (r.tag == OutcomeTag::no_instance)
        return false;
    return brute_parts_reachable(r.instances);
}

/// Every rule on every pair of equal-size independent sets where its
/// preconditions hold, compared with brute-force reachability.
inline auto rule_safety(const std::vector<Graph> & graphs, int max_k) -> Tally
{
    Tally t;
    for (auto & g : graphs) {
        int a = alpha(g);
        for (int k = 1; k <= std::min(max_k, a); ++k) {
            auto classes = brute_ts_classes(g, k);
            auto sets = independent_sets(g, k);
            for (auto & i : sets) {
                auto reach = brute_ts_reachable_sets(g, i);
                for (auto & j : sets) {
                    auto inst = make_instance(g, i, j);
                    bool truth = classes.at(i) == classes.at(j);
                    auto what = describe(g, i, j);

                    if (auto r = rule_A(inst); r.fired())
                        t.check("A", claimed(r) == truth, what);
                    auto ax = rule_A_exhaustive(inst);
                    if (ax.fired())
                        t.check("A*", claimed(ax) == truth, what);

                    if (auto cert = permanently_blocked_by_degree(inst)) {
                        auto z = rule_Z(inst, *cert);
                        t.check("Z", claimed(z) == truth, what);
                        bool never = true;
                        for (auto & s : reach)
                            for (auto x : cert->blocked)
                                never = never && ! contains(s, x);
                        t.check("blocked", never, what);
                    }

                    if (k == a && ! ax.fired()) {
                        auto m = rule_MIS_exhaustive(inst);
                        if (m.fired())
                            t.check("MIS", claimed(m) == truth, what);
                    }

                    if (! ax.fired() && i != j) {
                        auto b = rule_B(inst);
                        if (b.fired())
                            t.check("B", claimed(b) == truth, what);
                        else {
                            if (auto d = rule_D(inst); d.fired())
                                t.check("D", claimed(d) == truth, what);
                            if (auto e = rule_E(inst); e.fired())
                                t.check("E", claimed(e) == truth, what);
                        }
                    }

                    auto red = reduce_to_prime(inst);
                    bool says = ! red.no_instance && brute_parts_reachable(red.parts);
                    t.check("prime", says == truth, what);
                    for (auto & p : red.parts) {
                        t.check("prime-shape", is_connected(p.graph) && is_prime(p.graph) && is_fork_free(p.graph)
                            && is_reduced_for(p.graph, p.source) && is_reduced_for(p.graph, p.target), what);
                    }
                }
            }
        }
    }
    return t;
}

/// Token-count facts along whole reachability classes: vertices seeing three
/// or more tokens keep their count; after rule A nobody sees three; modules
/// keep their token count when it is at least two.
inline auto token_count_invariants(const std::vector<Graph> & graphs, int max_k) -> Tally
{
    Tally t;
    for (auto & g : graphs) {
        auto modules = candidate_modules(g);
        for (int k = 1; k <= std::min(max_k, alpha(g)); ++k)
            for (auto & i : independent_sets(g, k)) {
                auto reach = brute_ts_reachable_sets(g, i);
                auto what = describe(g, i, i);
                for (Vertex v = 0; v < g.size(); ++v) {
                    int c = g.count_neighbors_in(v, i);
                    if (c < 3)
                        continue;
                    bool same = true;
                    for (auto & s : reach)
                        same = same && g.count_neighbors_in(v, s) == c;
                    t.check("stable", same, what);
                }
                auto base = make_instance(g, i, i);
                auto ax = rule_A_exhaustive(base);
                if (ax.tag != OutcomeTag::no_instance) {
                    auto & r = ax.fired() ? ax.instance() : base;
                    bool bounded = true;
                    for (auto & s : brute_ts_reachable_sets(r.graph, r.source))
                        for (Vertex v = 0; v < r.graph.size(); ++v)
                            bounded = bounded && r.graph.count_neighbors_in(v, s) <= 2;
                    t.check("degree", bounded, what);
                }
                for (auto & m : modules) {
                    auto l = set_intersection(i, m.vertices).size();
                    bool ok = true;
                    for (auto & s : reach) {
                        auto now = set_intersection(s, m.vertices).size();
                        ok = ok && (l >= 2 ? now == l : now <= 1);
                    }
                    t.check("module", ok, what);
                }
            }
    }
    return t;
}


/// Rule MIS on maximum-set pairs, applied directly and after the rule A
/// fixpoint.
inline auto mis_safety(const std::vector<Graph> & graphs) -> Tally
{
    Tally t;
    for (auto & g : graphs) {
        auto sets = maximum_independent_sets(g);
        ReachabilityClasses classes(g, alpha(g), Rule::ts);
        for (auto & i : sets)
            for (auto & j : sets) {
                auto inst = make_instance(g, i, j);
                bool truth = classes.same_class(i, j);
                auto what = describe(g, i, j);
                auto ax = rule_A_exhaustive(inst);
                if (ax.tag == OutcomeTag::no_instance) {
                    t.check("A* max", ! truth, what);
                    continue;
                }
                auto & base = ax.fired() ? ax.instance() : inst;
                if (auto m = rule_MIS_exhaustive(base); m.fired())
                    t.check("MIS max", claimed(m) == truth, what);
            }
    }
    return t;
}

}
