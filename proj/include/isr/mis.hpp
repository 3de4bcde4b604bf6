#pragma once

#include "isr/graph.hpp"

namespace isr {

namespace detail {

    // Branch and bound over the candidate set. Degree <= 1 vertices are taken
    // greedily; otherwise branch on a vertex of maximum candidate degree.
    inline auto alpha_search(const Graph & g, VertexSet cand, int taken, int & best) -> void
    {
        while (true) {
            if (taken + cand.count() <= best)
                return;
            Vertex low = -1, high = -1;
            int high_deg = -1;
            for (Vertex v = cand.next(0); v != -1; v = cand.next(v + 1)) {
                int d = g.row(v).intersection_count(cand);
                if (d <= 1) {
                    low = v;
                    break;
                }
                if (d > high_deg) {
                    high_deg = d;
                    high = v;
                }
            }
            if (low == -1 && high == -1) {
                best = std::max(best, taken);
                return;
            }
            if (low != -1) {
                cand.reset(low);
                cand.subtract(g.row(low));
                ++taken;
                continue;
            }
            auto include = cand;
            include.reset(high);
            include.subtract(g.row(high));
            alpha_search(g, std::move(include), taken + 1, best);
            cand.reset(high);
        }
    }

    inline auto alpha_within(const Graph & g, const VertexSet & cand) -> int
    {
        int best = 0;
        alpha_search(g, cand, 0, best);
        return best;
    }

}

/// Independence number by exact branch and bound.
inline auto alpha(const Graph & g) -> int
{
    return detail::alpha_within(g, g.all_vertices());
}

/// A maximum independent set; the lexicographically smallest one.
inline auto max_independent_set(const Graph & g) -> TokenSet
{
    auto cand = g.all_vertices();
    int remaining = detail::alpha_within(g, cand);
    TokenSet chosen;
    for (Vertex v = 0; v < g.size() && remaining > 0; ++v) {
        if (! cand.test(v))
            continue;
        auto rest = cand;
        rest.reset(v);
        rest.subtract(g.row(v));
        if (detail::alpha_within(g, rest) == remaining - 1) {
            chosen.push_back(v);
            cand = std::move(rest);
            --remaining;
        }
        else
            cand.reset(v);
    }
    return chosen;
}

inline auto is_maximum_independent(const Graph & g, const TokenSet & s) -> bool
{
    return is_independent(g, s) && static_cast<int>(s.size()) == alpha(g);
}

inline auto is_maximal_independent(const Graph & g, const TokenSet & s) -> bool
{
    if (! is_independent(g, s))
        return false;
    for (Vertex v = 0; v < g.size(); ++v)
        if (is_free(g, s, v))
            return false;
    return true;
}

}
