#pragma once

#include "isr/bipartite.hpp"
#include "isr/claw.hpp"
#include "isr/graph.hpp"
#include "isr/instance.hpp"
#include "isr/mis.hpp"
#include "isr/patterns.hpp"
#include "isr/subdivision.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace isr {

inline auto path_graph(int n) -> Graph
{
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

/// K_{a,b} minus a matching of size `missing`; sides are 0..a-1 and a..a+b-1.
inline auto complex_graph(int a, int b, int missing) -> Graph
{
    if (a < 1 || b < 1 || missing < 0 || missing > std::min(a, b))
        throw GraphError("complex: bad side sizes or matching size");
    std::vector<Edge> edges;
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y)
            if (! (x == y && x < missing))
                edges.emplace_back(x, a + y);
    return Graph(a + b, edges);
}

/// Alternating tokens on an even cycle; both sets maximum and frozen.
inline auto frozen_cycle(int n) -> Instance
{
    if (n < 4 || n % 2 != 0)
        throw GraphError("frozen cycle needs an even length of at least 4");
    TokenSet i, j;
    for (int v = 0; v < n; ++v)
        (v % 2 == 0 ? i : j).push_back(v);
    return make_instance(cycle_graph(n), i, j);
}

/// H_kind with tokens on u and v, target tokens on u and w.
inline auto h_gadget(int kind) -> Instance
{
    return make_instance(expansion_graph(kind), {1, 2}, {1, 3});
}

/// Token sets of size k, in lexicographic order.
inline auto independent_sets(const Graph & g, int k) -> std::vector<TokenSet>
{
    std::vector<TokenSet> out;
    TokenSet cur;
    auto rec = [&](auto & self, Vertex from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = from; v < g.size(); ++v) {
            bool ok = true;
            for (auto t : cur)
                ok = ok && ! g.adjacent(t, v);
            if (! ok)
                continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline auto maximum_independent_sets(const Graph & g) -> std::vector<TokenSet>
{
    return independent_sets(g, alpha(g));
}

/// Smallest adjacency code over vertex orders that respect a degree-based
/// refinement; equal codes iff isomorphic.
inline auto canonical_code(const Graph & g) -> std::vector<std::uint8_t>
{
    int n = g.size();
    std::vector<std::pair<std::vector<int>, Vertex>> keys;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> key{g.degree(v)};
        std::vector<int> nd;
        for (auto w : g.neighbors(v))
            nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        key.insert(key.end(), nd.begin(), nd.end());
        keys.emplace_back(std::move(key), v);
    }
    std::sort(keys.begin(), keys.end());
    std::vector<Vertex> order;
    std::vector<int> cls;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        order.push_back(keys[k].second);
        cls.push_back(k == 0 ? 0 : cls.back() + (keys[k].first != keys[k - 1].first));
    }

    std::vector<std::uint8_t> best;
    auto code = [&](const std::vector<Vertex> & ord) {
        std::vector<std::uint8_t> c;
        c.reserve(n * (n - 1) / 2 + n);
        for (auto & k : keys)
            c.push_back(static_cast<std::uint8_t>(k.first[0]));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                c.push_back(g.adjacent(ord[a], ord[b]));
        return c;
    };
    // permute within each refinement class
    std::vector<std::pair<int, int>> ranges;
    for (int a = 0; a < n;) {
        int b = a;
        while (b < n && cls[b] == cls[a])
            ++b;
        ranges.emplace_back(a, b);
        a = b;
    }
    for (auto [a, b] : ranges)
        std::sort(order.begin() + a, order.begin() + b);
    auto rec = [&](auto & self, std::size_t r) -> void {
        if (r == ranges.size()) {
            auto c = code(order);
            if (best.empty() || c < best)
                best = std::move(c);
            return;
        }
        auto [a, b] = ranges[r];
        std::sort(order.begin() + a, order.begin() + b);
        do
            self(self, r + 1);
        while (std::next_permutation(order.begin() + a, order.begin() + b));
    };
    rec(rec, 0);
    return best;
}

/// One graph per isomorphism class of connected fork-free graphs on n vertices.
inline auto connected_forkfree_graphs(int n) -> std::vector<Graph>
{
    if (n < 1)
        return {};
    std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
    for (int size = 2; size <= n; ++size) {
        std::set<std::vector<std::uint8_t>> seen;
        std::vector<Graph> next;
        for (auto & g : level) {
            auto edges = g.edges();
            for (unsigned mask = 1; mask < (1u << (size - 1)); ++mask) {
                auto e = edges;
                for (int v = 0; v < size - 1; ++v)
                    if (mask >> v & 1)
                        e.emplace_back(v, size - 1);
                Graph h(size, e);
                if (! is_fork_free(h))
                    continue;
                if (seen.insert(canonical_code(h)).second)
                    next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

struct RandomForkFree {
    Graph graph;
    int attempts = 0;
    int accepted = 0;
};

/// Grows a connected fork-free graph one vertex at a time; a new vertex gets a
/// random neighbourhood (sometimes copying a twin) and is rejected if it
/// creates an induced fork.
inline auto random_forkfree(int n, std::mt19937_64 & rng, double density = 0.4) -> RandomForkFree
{
    if (n < 1)
        throw GraphError("random_forkfree: need at least one vertex");
    RandomForkFree out{Graph(1, std::vector<Edge>{}), 0, 0};
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(density), twin(0.2), adjacent_twin(0.5);
    for (int size = 2; size <= n;) {
        ++out.attempts;
        Vertex fresh = size - 1;
        std::vector<Edge> e = edges;
        if (twin(rng)) {
            Vertex of = std::uniform_int_distribution<Vertex>(0, size - 2)(rng);
            for (auto w : out.graph.neighbors(of))
                e.emplace_back(w, fresh);
            if (adjacent_twin(rng) || out.graph.degree(of) == 0)
                e.emplace_back(of, fresh);
        }
        else {
            for (Vertex v = 0; v < size - 1; ++v)
                if (coin(rng))
                    e.emplace_back(v, fresh);
            if (e.size() == edges.size())
                e.emplace_back(std::uniform_int_distribution<Vertex>(0, size - 2)(rng), fresh);
        }
        Graph h(size, e);
        if (! is_fork_free(h))
            continue;
        ++out.accepted;
        out.graph = std::move(h);
        edges = out.graph.edges();
        ++size;
    }
    return out;
}

/// A uniformly chosen independent set of size k, if one exists.
inline auto random_independent_set(const Graph & g, int k, std::mt19937_64 & rng) -> std::optional<TokenSet>
{
    auto all = independent_sets(g, k);
    if (all.empty())
        return std::nullopt;
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

/// Even subdivision of a graph of maximum degree three, tokens on the
/// extensions of the given sets.
inline auto subdivision_hard(const Instance & inst, int t) -> Instance
{
    for (Vertex v = 0; v < inst.graph.size(); ++v)
        if (inst.graph.degree(v) > 3)
            throw GraphError("subdivision-hard needs maximum degree three");
    auto m = subdivide(inst.graph, t);
    return make_instance(m.subdivided, extend(inst.source, m), extend(inst.target, m));
}

}
