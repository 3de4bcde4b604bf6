#pragma once

#include "isr/graph.hpp"
#include "isr/instance.hpp"

#include <optional>
#include <vector>

namespace isr {

/// A vertex set together with the connected components it induces.
struct ModuleSet {
    std::vector<Vertex> vertices;
    std::vector<std::vector<Vertex>> components;

    auto component_of(Vertex v) const -> int
    {
        for (std::size_t i = 0; i < components.size(); ++i)
            if (std::binary_search(components[i].begin(), components[i].end(), v))
                return static_cast<int>(i);
        return -1;
    }
};

inline auto is_module(const Graph & g, const std::vector<Vertex> & u) -> bool
{
    auto inside = g.set_of(normalized(u));
    for (Vertex x = 0; x < g.size(); ++x) {
        if (inside.test(x))
            continue;
        int seen = g.row(x).intersection_count(inside);
        if (seen != 0 && seen != inside.count())
            return false;
    }
    return true;
}

inline auto make_module_set(const Graph & g, std::vector<Vertex> vertices) -> ModuleSet
{
    vertices = normalized(std::move(vertices));
    ModuleSet m{vertices, {}};
    for (auto & comp : connected_components(g.induced(vertices))) {
        std::vector<Vertex> mapped;
        for (auto v : comp)
            mapped.push_back(vertices[v]);
        m.components.push_back(std::move(mapped));
    }
    return m;
}

/// Smallest module containing `seed`: keep absorbing vertices that see part of it.
inline auto module_closure(const Graph & g, VertexSet seed) -> VertexSet
{
    bool grew = true;
    while (grew) {
        grew = false;
        int size = seed.count();
        for (Vertex x = 0; x < g.size(); ++x) {
            if (seed.test(x))
                continue;
            int seen = g.row(x).intersection_count(seed);
            if (seen != 0 && seen != size) {
                seed.set(x);
                ++size;
                grew = true;
            }
        }
    }
    return seed;
}

/// The non-trivial module with the smallest (size, members) among closures of
/// vertex pairs; none iff the graph is prime.
inline auto find_nontrivial_module(const Graph & g) -> std::optional<ModuleSet>
{
    if (! is_connected(g))
        throw GraphError("find_nontrivial_module requires a connected graph");
    int n = g.size();
    std::optional<std::vector<Vertex>> best;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            VertexSet seed(n);
            seed.set(a);
            seed.set(b);
            auto closure = module_closure(g, std::move(seed));
            if (closure.count() == n)
                continue;
            auto members = closure.members();
            if (! best || members.size() < best->size() || (members.size() == best->size() && members < *best))
                best = std::move(members);
            if (best->size() == 2 && a == (*best)[0])
                return make_module_set(g, *best);
        }
    if (! best)
        return std::nullopt;
    return make_module_set(g, *best);
}

inline auto is_prime(const Graph & g) -> bool
{
    return ! find_nontrivial_module(g).has_value();
}

/// Replace module `m` by one vertex adjacent to N(m) \ m. The new vertex takes
/// the smallest label in `m` and carries a token of I (J) iff `m` did.
inline auto contract_module(const Instance & inst, const ModuleSet & m) -> Instance
{
    auto & g = inst.graph;
    auto inside = g.set_of(m.vertices);
    int in_i = static_cast<int>(set_intersection(inst.source, m.vertices).size());
    int in_j = static_cast<int>(set_intersection(inst.target, m.vertices).size());
    if (in_i > 1 || in_j > 1)
        throw GraphError("contract_module: module holds more than one token of I or J");
    if (m.vertices.empty())
        throw GraphError("contract_module: empty module");

    Vertex rep = m.vertices.front();
    for (auto v : m.vertices)
        if (g.label(v) < g.label(rep))
            rep = v;

    // survivors keep their relative order; the representative stands for the module
    std::vector<Vertex> keep;
    std::vector<int> remap(g.size(), -1);
    std::vector<Label> labels;
    for (Vertex v = 0; v < g.size(); ++v)
        if (! inside.test(v) || v == rep) {
            remap[v] = static_cast<int>(keep.size());
            keep.push_back(v);
            labels.push_back(g.label(v));
        }

    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        bool ia = inside.test(a), ib = inside.test(b);
        if (ia && ib)
            continue;
        if (! ia && ! ib)
            edges.emplace_back(remap[a], remap[b]);
        else if (ia && a == rep)
            edges.emplace_back(remap[a], remap[b]);
        else if (ib && b == rep)
            edges.emplace_back(remap[a], remap[b]);
    }
    // module property: every outside neighbour of any member is a neighbour of rep
    Instance out;
    out.graph = Graph(static_cast<int>(keep.size()), edges, labels);

    auto map_tokens = [&](const TokenSet & s) {
        TokenSet r;
        for (auto v : s)
            r.push_back(remap[inside.test(v) ? rep : v]);
        return normalized(std::move(r));
    };
    out.source = map_tokens(inst.source);
    out.target = map_tokens(inst.target);

    out.merged = inst.merged;
    std::vector<Label> members;
    for (auto v : m.vertices) {
        auto it = inst.merged.find(g.label(v));
        if (it == inst.merged.end())
            members.push_back(g.label(v));
        else {
            members.insert(members.end(), it->second.begin(), it->second.end());
            if (v != rep)
                out.merged.erase(g.label(v));
        }
    }
    std::sort(members.begin(), members.end());
    out.merged[g.label(rep)] = std::move(members);
    return out;
}

}
