#pragma once

#include "isr/graph.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace isr {

enum class Rule { ts, tj };

inline auto to_string(Rule r) -> std::string_view { return r == Rule::ts ? "ts" : "tj"; }

enum class MoveKind { slide, jump };

struct Move {
    MoveKind kind = MoveKind::slide;
    Vertex from = -1;
    Vertex to = -1;

    friend auto operator==(const Move &, const Move &) -> bool = default;
};

inline auto slide(Vertex from, Vertex to) -> Move { return Move{MoveKind::slide, from, to}; }

/// A start set and the moves applied to it in order.
struct SlideSequence {
    TokenSet start;
    std::vector<Move> moves;

    auto length() const -> std::size_t { return moves.size(); }

    /// Replays the moves without checking them.
    auto sets() const -> std::vector<TokenSet>
    {
        std::vector<TokenSet> out{start};
        for (auto & m : moves)
            out.push_back(with(without(out.back(), m.from), m.to));
        return out;
    }

    auto final_set() const -> TokenSet
    {
        auto cur = start;
        for (auto & m : moves)
            cur = with(without(cur, m.from), m.to);
        return cur;
    }

    auto append(const SlideSequence & tail) -> void
    {
        moves.insert(moves.end(), tail.moves.begin(), tail.moves.end());
    }

    auto reversed() const -> SlideSequence
    {
        SlideSequence out{final_set(), {}};
        for (auto it = moves.rbegin(); it != moves.rend(); ++it)
            out.moves.push_back(Move{it->kind, it->to, it->from});
        return out;
    }

    friend auto operator==(const SlideSequence &, const SlideSequence &) -> bool = default;
};

namespace detail {

    /// Applies the slide to `cur` and records it if it is legal.
    inline auto try_slide(const Graph & g, TokenSet & cur, SlideSequence & seq, Vertex from, Vertex to) -> bool
    {
        if (! contains(cur, from) || ! g.adjacent(from, to) || contains(cur, to))
            return false;
        for (auto w : g.neighbors(to))
            if (w != from && contains(cur, w))
                return false;
        cur = with(without(cur, from), to);
        seq.moves.push_back(slide(from, to));
        return true;
    }

}

/// Re-express a sequence on `from` in the ids of `to`, matching by label.
inline auto relabel(const SlideSequence & seq, const Graph & from, const Graph & to) -> SlideSequence
{
    SlideSequence out{from.translate(seq.start, to), {}};
    for (auto & m : seq.moves)
        out.moves.push_back(Move{m.kind, to.vertex_of(from.label(m.from)), to.vertex_of(from.label(m.to))});
    return out;
}

/// (G, I, J). `merged` records, for contracted vertices, the labels of the
/// vertices of the reduction's input graph that were folded into them.
struct Instance {
    Graph graph;
    TokenSet source;
    TokenSet target;
    std::map<Label, std::vector<Label>> merged;

    auto members_of(Vertex v) const -> std::vector<Label>
    {
        auto it = merged.find(graph.label(v));
        if (it == merged.end())
            return {graph.label(v)};
        return it->second;
    }

    /// Same triple with the roles of I and J exchanged.
    auto swapped() const -> Instance { return Instance{graph, target, source, merged}; }
};

inline auto make_instance(Graph g, TokenSet i, TokenSet j) -> Instance
{
    i = normalized(std::move(i));
    j = normalized(std::move(j));
    if (! is_independent(g, i))
        throw GraphError("I is not independent");
    if (! is_independent(g, j))
        throw GraphError("J is not independent");
    return Instance{std::move(g), std::move(i), std::move(j), {}};
}

/// Induced sub-instance; tokens outside `keep` are dropped.
inline auto restrict_instance(const Instance & inst, std::span<const Vertex> keep) -> Instance
{
    Instance out;
    out.graph = inst.graph.induced(keep);
    out.source = inst.graph.translate(inst.source, out.graph);
    out.target = inst.graph.translate(inst.target, out.graph);
    for (auto & [l, members] : inst.merged)
        if (out.graph.find_label(l))
            out.merged.emplace(l, members);
    return out;
}

inline auto delete_vertices(const Instance & inst, std::span<const Vertex> drop) -> Instance
{
    VertexSet gone(inst.graph.size());
    for (auto v : drop)
        gone.set(v);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < inst.graph.size(); ++v)
        if (! gone.test(v))
            keep.push_back(v);
    return restrict_instance(inst, keep);
}

}
