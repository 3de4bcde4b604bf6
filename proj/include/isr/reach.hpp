#pragma once

#include "isr/claw.hpp"
#include "isr/graph.hpp"
#include "isr/instance.hpp"
#include "isr/patterns.hpp"
#include "isr/reductions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isr {

/// A token near a path, with the index of its first neighbour on the path.
struct LeftmostNeighbor {
    Vertex token;
    int index;
};

/// Tokens of N[V(P)] with their leftmost neighbours on P, sorted by index. A
/// token on P itself counts its predecessor on P.
inline auto leftmost_neighbors(const Graph & g, const std::vector<Vertex> & path, const TokenSet & tokens)
    -> std::vector<LeftmostNeighbor>
{
    std::vector<LeftmostNeighbor> out;
    for (auto t : tokens)
        for (int k = 0; k < static_cast<int>(path.size()); ++k)
            if (g.adjacent(t, path[k])) {
                out.push_back({t, k});
                break;
            }
    std::sort(out.begin(), out.end(), [](auto & a, auto & b) { return a.index != b.index ? a.index < b.index : a.token < b.token; });
    return out;
}

namespace detail {

    inline auto stalled(SlideSequence moves, std::string why) -> StepResult
    {
        return StepResult{StepStatus::stalled, std::move(moves), std::nullopt, std::move(why)};
    }

}

/// Moves tokens so that the result is I - v + u, along a shortest u-v path,
/// or reports a permanently blocked set.
inline auto reach_free_vertex(const Graph & g, const TokenSet & i_in, Vertex v, Vertex u) -> StepResult
{
    auto i = normalized(i_in);
    if (! contains(i, v))
        throw GraphError("reach_free_vertex: no token on " + std::to_string(v));
    if (! is_free(g, i, u))
        throw GraphError("reach_free_vertex: vertex " + std::to_string(u) + " is not free");

    StepResult out{StepStatus::done, SlideSequence{i, {}}, std::nullopt, {}};
    if (auto cert = permanently_blocked_by_degree(Instance{g, i, i, {}})) {
        out.status = StepStatus::blocked;
        out.certificate = *cert;
        return out;
    }
    auto path = shortest_path(g, u, v);
    if (! path)
        return detail::stalled(out.moves, "no path between " + std::to_string(u) + " and " + std::to_string(v));
    auto & p = *path;
    auto cur = i;
    int len = static_cast<int>(p.size());

    if (len == 3) {
        Vertex mid = p[1];
        std::vector<Vertex> others;
        for (auto t : cur)
            if (t != v && g.adjacent(t, mid))
                others.push_back(t);
        if (others.empty()) {
            detail::try_slide(g, cur, out.moves, v, mid);
            detail::try_slide(g, cur, out.moves, mid, u);
            if (cur != with(without(i, v), u))
                return detail::stalled(out.moves, "direct slide through " + std::to_string(mid) + " failed");
            return out;
        }
        PatternEmbedding claw{PatternKind::claw, mid, {u, v, others[0]}};
        if (others.size() > 1 || ! induces_pattern(g, claw))
            return detail::stalled(out.moves, "the middle vertex " + std::to_string(mid) + " does not centre a claw");
        ClawExpansion expansion;
        try {
            expansion = detect_claw_expansion(g, claw, false);
        }
        catch (const InvariantFailure & e) {
            return detail::stalled(out.moves, e.what());
        }
        return rotate_claw(g, cur, expansion, v, u);
    }

    auto near = leftmost_neighbors(g, p, cur);
    for (std::size_t j = 1; j < near.size(); ++j)
        if (near[j].index == near[j - 1].index)
            return detail::stalled(out.moves, "tokens " + std::to_string(near[j - 1].token) + " and "
                + std::to_string(near[j].token) + " share their leftmost neighbour");
    if (near.empty() || near.back().token != v)
        return detail::stalled(out.moves, "the far token is not last in leftmost order");

    // token a_j goes to the old place of a_{j-1}, a_0 being u
    Vertex prev = u;
    int prev_index = 0;
    for (auto [a, index] : near) {
        std::vector<Vertex> route{a};
        int k = index;
        route.push_back(p[k]);
        if (p[k] != prev) {
            while (k > prev_index && ! g.adjacent(p[k], prev)) {
                --k;
                route.push_back(p[k]);
            }
            if (route.back() != prev)
                route.push_back(prev);
        }
        for (std::size_t s = 0; s + 1 < route.size(); ++s)
            if (! detail::try_slide(g, cur, out.moves, route[s], route[s + 1]))
                return detail::stalled(out.moves, "caravan slide " + std::to_string(route[s]) + " -> "
                    + std::to_string(route[s + 1]) + " is blocked");
        prev = a;
        prev_index = index;
    }
    if (cur != with(without(i, v), u))
        return detail::stalled(out.moves, "caravan ended away from I - v + u");
    return out;
}

}
