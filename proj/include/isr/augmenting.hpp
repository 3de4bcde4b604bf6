#pragma once

#include "isr/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace isr {

namespace detail {

    /// Alternating search behind find_augmenting_path and find_freeing_chain.
    /// `strict`: each outside vertex sees exactly its path neighbours in I.
    /// Otherwise it may also see earlier inside vertices of the chain.
    inline auto alternating_search(const Graph & g, const TokenSet & i_in, const TokenSet & avoid, bool strict)
        -> std::optional<std::vector<Vertex>>;

}

/// p0, p1, ..., p2k alternating outside / inside I, where the outside vertices
/// are independent and each sees exactly its path neighbours in I. Swapping
/// gives an independent set one larger. Exhaustive search; vertices in
/// `avoid` are not used.
inline auto find_augmenting_path(const Graph & g, const TokenSet & i, const TokenSet & avoid = {})
    -> std::optional<std::vector<Vertex>>
{
    return detail::alternating_search(g, i, avoid, true);
}

/// Like an augmenting path, but an outside vertex may also see inside vertices
/// met earlier on the chain. Sliding p1 -> p0, p3 -> p2, ... is still valid
/// and leaves p2k free.
inline auto find_freeing_chain(const Graph & g, const TokenSet & i, const TokenSet & avoid = {})
    -> std::optional<std::vector<Vertex>>
{
    return detail::alternating_search(g, i, avoid, false);
}

inline auto detail::alternating_search(const Graph & g, const TokenSet & i_in, const TokenSet & avoid, bool strict)
    -> std::optional<std::vector<Vertex>>
{
    auto i = normalized(i_in);
    auto skip = normalized(avoid);
    std::vector<int> seen(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        seen[v] = g.count_neighbors_in(v, i);

    std::vector<Vertex> path;
    std::vector<bool> used(g.size(), false);
    // tokens next to v that are not yet on the chain
    auto fresh = [&](Vertex v) {
        int k = 0;
        for (auto w : g.neighbors(v))
            k += contains(i, w) && ! used[w];
        return k;
    };
    std::function<bool()> extend = [&]() -> bool {
        // path ends in an outside vertex
        Vertex last = path.back();
        Vertex in_prev = path.size() > 1 ? path[path.size() - 2] : -1;
        int open = strict ? seen[last] - (in_prev < 0 ? 0 : 1) : fresh(last);
        if (open == 0)
            return in_prev >= 0;
        if (open > 1)
            return false;
        for (auto p : g.neighbors(last)) {
            if (! contains(i, p) || used[p] || contains(skip, p))
                continue;
            used[p] = true;
            path.push_back(p);
            for (auto q : g.neighbors(p)) {
                if (contains(i, q) || used[q] || contains(skip, q))
                    continue;
                bool ok = true;
                for (std::size_t k = 0; k < path.size() && ok; k += 2)
                    ok = ! g.adjacent(path[k], q);
                // q sees p and at most one more token, to be added next
                if (! ok || (strict && seen[q] > 2))
                    continue;
                used[q] = true;
                path.push_back(q);
                if (extend())
                    return true;
                path.pop_back();
                used[q] = false;
            }
            path.pop_back();
            used[p] = false;
        }
        return false;
    };

    for (Vertex s = 0; s < g.size(); ++s) {
        if (contains(i, s) || contains(skip, s) || seen[s] != 1)
            continue;
        path = {s};
        used.assign(g.size(), false);
        used[s] = true;
        if (extend())
            return path;
    }
    return std::nullopt;
}

}
