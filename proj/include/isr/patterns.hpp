#pragma once

#include "isr/graph.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace isr {

enum class PatternKind { claw, fork };

/// An induced claw or fork.
///
/// claw: `center` plus three pairwise non-adjacent `leaves` (sorted).
/// fork: `center` of degree three; `leaves` = {a, b, d, e} where a < b are the
/// plain leaves, d is the third neighbour of the center and e hangs off d.
struct PatternEmbedding {
    PatternKind kind = PatternKind::claw;
    Vertex center = -1;
    std::vector<Vertex> leaves;

    auto vertices() const -> std::vector<Vertex>
    {
        std::vector<Vertex> out{center};
        out.insert(out.end(), leaves.begin(), leaves.end());
        return out;
    }

    friend auto operator==(const PatternEmbedding &, const PatternEmbedding &) -> bool = default;
};

/// Checks that the listed vertices induce exactly the named pattern.
inline auto induces_pattern(const Graph & g, const PatternEmbedding & p) -> bool
{
    auto & l = p.leaves;
    auto c = p.center;
    if (p.kind == PatternKind::claw) {
        if (l.size() != 3)
            return false;
        return g.adjacent(c, l[0]) && g.adjacent(c, l[1]) && g.adjacent(c, l[2])
            && ! g.adjacent(l[0], l[1]) && ! g.adjacent(l[0], l[2]) && ! g.adjacent(l[1], l[2]);
    }
    if (l.size() != 4)
        return false;
    auto [a, b, d, e] = std::tuple{l[0], l[1], l[2], l[3]};
    return g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) && g.adjacent(d, e)
        && ! g.adjacent(a, b) && ! g.adjacent(a, d) && ! g.adjacent(b, d)
        && ! g.adjacent(c, e) && ! g.adjacent(a, e) && ! g.adjacent(b, e);
}

/// First induced fork in (center, a, b, d, e) order, or none.
inline auto find_induced_fork(const Graph & g) -> std::optional<PatternEmbedding>
{
    for (Vertex c = 0; c < g.size(); ++c) {
        auto & nc = g.neighbors(c);
        if (nc.size() < 3)
            continue;
        for (std::size_t i = 0; i < nc.size(); ++i) {
            auto a = nc[i];
            for (std::size_t j = i + 1; j < nc.size(); ++j) {
                auto b = nc[j];
                if (g.adjacent(a, b))
                    continue;
                for (auto d : nc) {
                    if (d == a || d == b || g.adjacent(d, a) || g.adjacent(d, b))
                        continue;
                    for (auto e : g.neighbors(d)) {
                        if (e == c || g.adjacent(e, c) || g.adjacent(e, a) || g.adjacent(e, b))
                            continue;
                        return PatternEmbedding{PatternKind::fork, c, {a, b, d, e}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

inline auto is_fork_free(const Graph & g) -> bool
{
    return ! find_induced_fork(g).has_value();
}

/// Every induced claw once, ordered by (center, leaves).
inline auto enumerate_induced_claws(const Graph & g) -> std::vector<PatternEmbedding>
{
    std::vector<PatternEmbedding> out;
    for (Vertex c = 0; c < g.size(); ++c) {
        auto & nc = g.neighbors(c);
        for (std::size_t i = 0; i < nc.size(); ++i)
            for (std::size_t j = i + 1; j < nc.size(); ++j) {
                if (g.adjacent(nc[i], nc[j]))
                    continue;
                for (std::size_t k = j + 1; k < nc.size(); ++k)
                    if (! g.adjacent(nc[i], nc[k]) && ! g.adjacent(nc[j], nc[k]))
                        out.push_back(PatternEmbedding{PatternKind::claw, c, {nc[i], nc[j], nc[k]}});
            }
    }
    return out;
}

inline auto find_induced_claw(const Graph & g) -> std::optional<PatternEmbedding>
{
    for (Vertex c = 0; c < g.size(); ++c) {
        auto & nc = g.neighbors(c);
        for (std::size_t i = 0; i < nc.size(); ++i)
            for (std::size_t j = i + 1; j < nc.size(); ++j) {
                if (g.adjacent(nc[i], nc[j]))
                    continue;
                for (std::size_t k = j + 1; k < nc.size(); ++k)
                    if (! g.adjacent(nc[i], nc[k]) && ! g.adjacent(nc[j], nc[k]))
                        return PatternEmbedding{PatternKind::claw, c, {nc[i], nc[j], nc[k]}};
            }
    }
    return std::nullopt;
}

}
