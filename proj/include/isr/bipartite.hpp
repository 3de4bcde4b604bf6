#pragma once

#include "isr/graph.hpp"
#include "isr/patterns.hpp"

#include <string_view>

namespace isr {

enum class BipartiteShape {
    path,
    cycle,
    complex,
    not_bipartite,
    /// Connected, bipartite and fork-free, yet none of path / cycle / complex.
    not_fork_free_counterexample,
    /// Connected bipartite graph with an induced fork that fits none of the shapes.
    other,
};

inline auto to_string(BipartiteShape s) -> std::string_view
{
    switch (s) {
        case BipartiteShape::path: return "path";
        case BipartiteShape::cycle: return "cycle";
        case BipartiteShape::complex: return "complex";
        case BipartiteShape::not_bipartite: return "not-bipartite";
        case BipartiteShape::not_fork_free_counterexample: return "not-fork-free-counterexample";
        case BipartiteShape::other: return "other";
    }
    return "?";
}

/// Two-colouring of a graph, or empty if it has an odd cycle.
inline auto two_colouring(const Graph & g) -> std::vector<int>
{
    std::vector<int> side(g.size(), -1);
    for (Vertex s = 0; s < g.size(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                }
                else if (side[w] == side[v])
                    return {};
            }
        }
    }
    return side;
}

/// Complete bipartite between the colour classes, minus a matching.
inline auto is_complex(const Graph & g, const std::vector<int> & side) -> bool
{
    for (Vertex a = 0; a < g.size(); ++a) {
        int missing = 0;
        for (Vertex b = 0; b < g.size(); ++b)
            if (side[b] != side[a] && ! g.adjacent(a, b))
                ++missing;
        if (missing > 1)
            return false;
    }
    return true;
}

inline auto classify_bipartite_component(const Graph & g) -> BipartiteShape
{
    if (! is_connected(g))
        throw GraphError("classify_bipartite_component requires a connected graph");
    auto side = two_colouring(g);
    if (side.empty() && g.size() > 0)
        return BipartiteShape::not_bipartite;

    int max_degree = 0;
    bool all_two = true;
    for (Vertex v = 0; v < g.size(); ++v) {
        max_degree = std::max(max_degree, g.degree(v));
        all_two = all_two && g.degree(v) == 2;
    }
    // the shapes overlap (P5 and C6 are complexes too): path, then complex, then cycle
    if (max_degree <= 2 && g.edge_count() == g.size() - 1)
        return BipartiteShape::path;
    if (is_complex(g, side))
        return BipartiteShape::complex;
    if (all_two && g.edge_count() == g.size())
        return BipartiteShape::cycle;
    return is_fork_free(g) ? BipartiteShape::not_fork_free_counterexample : BipartiteShape::other;
}

}
