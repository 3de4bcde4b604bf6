#pragma once

#include "isr/isr.hpp"

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace isr::test {

inline auto edges_of(const Graph & g) -> std::vector<Edge> { return g.edges(); }

inline auto star(int leaves) -> Graph
{
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

inline auto fork_graph() -> Graph
{
    // center 0, leaves 1 2 3, 3 extended to 4
    return Graph(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}});
}

/// Every subset of vertices as a bitmask, n <= 20.
inline auto brute_independent_masks(const Graph & g) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
        bool ok = true;
        for (Vertex a = 0; a < g.size() && ok; ++a)
            if (m >> a & 1)
                for (auto b : g.neighbors(a))
                    ok = ok && ! (m >> b & 1);
        if (ok)
            out.push_back(m);
    }
    return out;
}

inline auto brute_alpha(const Graph & g) -> int
{
    int best = 0;
    for (auto m : brute_independent_masks(g))
        best = std::max(best, __builtin_popcount(m));
    return best;
}

/// Induced fork by trying every ordered 5-tuple.
inline auto brute_has_fork(const Graph & g) -> bool
{
    int n = g.size();
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e) {
                        std::vector<int> s{c, a, b, d, e};
                        std::set<int> distinct(s.begin(), s.end());
                        if (distinct.size() != 5)
                            continue;
                        auto adj = [&](int x, int y) { return g.adjacent(x, y); };
                        if (adj(c, a) && adj(c, b) && adj(c, d) && adj(d, e) && ! adj(a, b) && ! adj(a, d)
                            && ! adj(b, d) && ! adj(e, c) && ! adj(e, a) && ! adj(e, b))
                            return true;
                    }
    return false;
}

inline auto brute_claw_count(const Graph & g) -> int
{
    int n = g.size(), count = 0;
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int d = b + 1; d < n; ++d) {
                    if (a == c || b == c || d == c)
                        continue;
                    if (g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) && ! g.adjacent(a, b)
                        && ! g.adjacent(a, d) && ! g.adjacent(b, d))
                        ++count;
                }
    return count;
}

/// Token sliding reachability by a plain BFS over sets, independent of the
/// library oracle.
inline auto brute_ts_reachable(const Graph & g, const TokenSet & i, const TokenSet & j) -> bool
{
    std::set<TokenSet> seen{normalized(i)};
    std::queue<TokenSet> q;
    q.push(normalized(i));
    auto goal = normalized(j);
    while (! q.empty()) {
        auto s = q.front();
        q.pop();
        if (s == goal)
            return true;
        for (auto t : s)
            for (auto w : g.neighbors(t)) {
                auto next = with(without(s, t), w);
                if (next.size() != s.size() || ! is_independent(g, next))
                    continue;
                if (seen.insert(next).second)
                    q.push(next);
            }
    }
    return false;
}

/// Same for token jumping.
inline auto brute_tj_reachable(const Graph & g, const TokenSet & i, const TokenSet & j) -> bool
{
    std::set<TokenSet> seen{normalized(i)};
    std::queue<TokenSet> q;
    q.push(normalized(i));
    auto goal = normalized(j);
    while (! q.empty()) {
        auto s = q.front();
        q.pop();
        if (s == goal)
            return true;
        for (auto t : s)
            for (Vertex w = 0; w < g.size(); ++w) {
                if (contains(s, w))
                    continue;
                auto next = with(without(s, t), w);
                if (! is_independent(g, next))
                    continue;
                if (seen.insert(next).second)
                    q.push(next);
            }
    }
    return false;
}

/// Sets reachable from `i` by slides, by plain BFS.
inline auto brute_ts_reachable_sets(const Graph & g, const TokenSet & i) -> std::set<TokenSet>
{
    std::set<TokenSet> seen{normalized(i)};
    std::queue<TokenSet> q;
    q.push(normalized(i));
    while (! q.empty()) {
        auto s = q.front();
        q.pop();
        for (auto t : s)
            for (auto w : g.neighbors(t)) {
                auto next = with(without(s, t), w);
                if (next.size() != s.size() || ! is_independent(g, next))
                    continue;
                if (seen.insert(next).second)
                    q.push(next);
            }
    }
    return seen;
}

/// Class index of every independent set of size k under slides.
inline auto brute_ts_classes(const Graph & g, int k) -> std::map<TokenSet, int>
{
    std::map<TokenSet, int> cls;
    int next = 0;
    for (auto & s : independent_sets(g, k)) {
        if (cls.count(s))
            continue;
        for (auto & r : brute_ts_reachable_sets(g, s))
            cls[r] = next;
        ++next;
    }
    return cls;
}

/// The answer a reduced form claims: No, or all parts reachable.
inline auto brute_parts_reachable(const std::vector<Instance> & parts) -> bool
{
    for (auto & p : parts)
        if (! brute_ts_reachable(p.graph, p.source, p.target))
            return false;
    return true;
}

/// Connected fork-free graphs used by the exhaustive checks: every class up to
/// `exhaustive` vertices and `extra` random ones on up to `max_n`.
inline auto test_graphs(int exhaustive, int extra, int max_n, std::uint64_t seed) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (int n = 1; n <= exhaustive; ++n)
        for (auto & g : connected_forkfree_graphs(n))
            out.push_back(g);
    std::mt19937_64 rng(seed);
    for (int r = 0; r < extra; ++r)
        out.push_back(random_forkfree(exhaustive + 1 + r % std::max(1, max_n - exhaustive), rng, 0.45).graph);
    return out;
}

}
