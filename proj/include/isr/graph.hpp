#pragma once

#include "isr/vertex_set.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isr {

/// External, stable vertex identity. Survives deletion and contraction.
using Label = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using TokenSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a property that the theory guarantees on valid input does not hold.
class InvariantFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline auto normalized(TokenSet s) -> TokenSet
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline auto contains(const TokenSet & s, Vertex v) -> bool
{
    return std::binary_search(s.begin(), s.end(), v);
}

inline auto with(TokenSet s, Vertex v) -> TokenSet
{
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
}

inline auto without(TokenSet s, Vertex v) -> TokenSet
{
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v)
        s.erase(it);
    return s;
}

inline auto set_minus(const TokenSet & a, const TokenSet & b) -> TokenSet
{
    TokenSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline auto set_intersection(const TokenSet & a, const TokenSet & b) -> TokenSet
{
    TokenSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline auto symmetric_difference(const TokenSet & a, const TokenSet & b) -> TokenSet
{
    TokenSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Undirected simple graph on dense ids 0..n-1, each carrying an external label.
/// Immutable once built; deletion and contraction produce new graphs.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::span<const Edge> edges, std::vector<Label> labels = {}) :
        _adj(n), _rows(n, VertexSet(n)), _labels(std::move(labels))
    {
        if (n < 0)
            throw GraphError("negative vertex count");
        if (_labels.empty()) {
            _labels.resize(n);
            for (int v = 0; v < n; ++v)
                _labels[v] = v;
        }
        else if (static_cast<int>(_labels.size()) != n)
            throw GraphError("label count does not match vertex count");

        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an endpoint out of range");
            if (a == b)
                throw GraphError("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
            _rows[a].set(b);
            _rows[b].set(a);
        }
        for (int v = 0; v < n; ++v)
            _adj[v] = _rows[v].members();

        for (int v = 0; v < n; ++v)
            _by_label.emplace(_labels[v], v);
        if (static_cast<int>(_by_label.size()) != n)
            throw GraphError("duplicate vertex label");
    }

    auto size() const -> int { return static_cast<int>(_adj.size()); }
    auto edge_count() const -> int
    {
        int m = 0;
        for (auto & a : _adj)
            m += static_cast<int>(a.size());
        return m / 2;
    }

    auto adjacent(Vertex a, Vertex b) const -> bool { return _rows[a].test(b); }
    auto neighbors(Vertex v) const -> const std::vector<Vertex> & { return _adj[v]; }
    auto row(Vertex v) const -> const VertexSet & { return _rows[v]; }
    auto degree(Vertex v) const -> int { return static_cast<int>(_adj[v].size()); }

    auto label(Vertex v) const -> Label { return _labels[v]; }
    auto labels() const -> const std::vector<Label> & { return _labels; }

    auto find_label(Label l) const -> std::optional<Vertex>
    {
        auto it = _by_label.find(l);
        if (it == _by_label.end())
            return std::nullopt;
        return it->second;
    }

    auto vertex_of(Label l) const -> Vertex
    {
        auto v = find_label(l);
        if (! v)
            throw GraphError("no vertex with label " + std::to_string(l));
        return *v;
    }

    /// Edges (a, b) with a < b in increasing order.
    auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (Vertex a = 0; a < size(); ++a)
            for (Vertex b : _adj[a])
                if (a < b)
                    out.emplace_back(a, b);
        return out;
    }

    auto all_vertices() const -> VertexSet
    {
        VertexSet s(size());
        for (Vertex v = 0; v < size(); ++v)
            s.set(v);
        return s;
    }

    /// Subgraph induced by `keep` (any order); new ids follow increasing old id.
    auto induced(std::span<const Vertex> keep) const -> Graph
    {
        std::vector<Vertex> kept(keep.begin(), keep.end());
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        std::vector<int> remap(size(), -1);
        std::vector<Label> labels;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            remap[kept[i]] = static_cast<int>(i);
            labels.push_back(_labels[kept[i]]);
        }
        std::vector<Edge> es;
        for (auto [a, b] : edges())
            if (remap[a] != -1 && remap[b] != -1)
                es.emplace_back(remap[a], remap[b]);
        return Graph(static_cast<int>(kept.size()), es, std::move(labels));
    }

    auto without(std::span<const Vertex> drop) const -> Graph
    {
        VertexSet gone(size());
        for (auto v : drop)
            gone.set(v);
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < size(); ++v)
            if (! gone.test(v))
                keep.push_back(v);
        return induced(keep);
    }

    /// Translate a vertex set of this graph into the ids of `other` by label.
    /// Vertices whose label is absent in `other` are dropped.
    auto translate(const TokenSet & s, const Graph & other) const -> TokenSet
    {
        TokenSet out;
        for (auto v : s)
            if (auto w = other.find_label(_labels[v]))
                out.push_back(*w);
        return normalized(std::move(out));
    }

    auto set_of(const TokenSet & s) const -> VertexSet
    {
        VertexSet out(size());
        for (auto v : s)
            out.set(v);
        return out;
    }

    auto count_neighbors_in(Vertex v, const TokenSet & s) const -> int
    {
        int c = 0;
        for (auto u : s)
            if (adjacent(v, u))
                ++c;
        return c;
    }

private:
    std::vector<std::vector<Vertex>> _adj;
    std::vector<VertexSet> _rows;
    std::vector<Label> _labels;
    std::map<Label, Vertex> _by_label;
};

inline auto build_graph(int n, std::span<const Edge> edges) -> Graph
{
    return Graph(n, edges);
}

inline auto check_vertices(const Graph & g, const TokenSet & s) -> void
{
    for (auto v : s)
        if (v < 0 || v >= g.size())
            throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
}

inline auto is_independent(const Graph & g, const TokenSet & s) -> bool
{
    check_vertices(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j]))
                return false;
    return true;
}

/// Vertices with no neighbour in `s` and not in `s`.
inline auto is_free(const Graph & g, const TokenSet & s, Vertex v) -> bool
{
    if (contains(s, v))
        return false;
    for (auto u : s)
        if (g.adjacent(u, v))
            return false;
    return true;
}

inline auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>
{
    std::vector<int> comp(g.size(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.size(); ++s) {
        if (comp[s] != -1)
            continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (auto w : g.neighbors(members[i]))
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline auto is_connected(const Graph & g) -> bool
{
    return g.size() == 0 || connected_components(g).size() == 1;
}

/// BFS distances from `source`; -1 for unreachable vertices.
inline auto bfs_distances(const Graph & g, Vertex source) -> std::vector<int>
{
    std::vector<int> dist(g.size(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (! queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v))
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

/// Shortest u-v path; among shortest paths, the one whose vertex sequence is
/// lexicographically smallest.
inline auto shortest_path(const Graph & g, Vertex u, Vertex v) -> std::optional<std::vector<Vertex>>
{
    check_vertices(g, {u, v});
    auto to_target = bfs_distances(g, v);
    if (to_target[u] == -1)
        return std::nullopt;
    std::vector<Vertex> path{u};
    while (path.back() != v) {
        auto cur = path.back();
        for (auto w : g.neighbors(cur))
            if (to_target[w] == to_target[cur] - 1) {
                path.push_back(w);
                break;
            }
    }
    return path;
}

}
