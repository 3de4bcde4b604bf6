#pragma once

#include "isr/graph.hpp"
#include "isr/instance.hpp"
#include "isr/modular.hpp"
#include "isr/patterns.hpp"
#include "isr/reductions.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace isr {

enum class StepStatus { done, blocked, stalled };

/// Outcome of a local recipe. `moves` is always valid; when blocked, the
/// certificate refers to the set reached by `moves`.
struct StepResult {
    StepStatus status = StepStatus::done;
    SlideSequence moves;
    std::optional<BlockCertificate> certificate;
    std::string diagnostic;

    auto done() const -> bool { return status == StepStatus::done; }
};

/// Roles of the five prime fork-free expansions of a claw c; u, v, w.
struct ClawExpansion {
    int kind = 0;
    Vertex c = -1, u = -1, v = -1, w = -1, x = -1, y = -1, z = -1;

    auto vertices() const -> std::vector<Vertex>
    {
        std::vector<Vertex> out{c, u, v, w, x, y};
        if (z >= 0)
            out.push_back(z);
        return out;
    }
};

namespace detail {

    // role indices: c u v w x y z
    enum Role { rc, ru, rv, rw, rx, ry, rz };
    using RolePair = std::pair<Role, Role>;

    inline auto expansion_edges(int kind) -> std::vector<RolePair>
    {
        std::vector<RolePair> e{{rc, ru}, {rc, rv}, {rc, rw}, {ru, rx}, {rx, rv}, {rv, ry}, {ry, rw}};
        if (kind == 2 || kind == 4 || kind == 5)
            e.emplace_back(rx, ry);
        if (kind == 3 || kind == 4 || kind == 5)
            e.emplace_back(rc, ry);
        if (kind == 5) {
            e.emplace_back(rx, rc);
            e.emplace_back(rx, rz);
            e.emplace_back(rz, ry);
        }
        return e;
    }

    inline auto matches_expansion(const Graph & g, const std::vector<Vertex> & roles, int kind) -> bool
    {
        int k = static_cast<int>(roles.size());
        std::array<std::array<bool, 7>, 7> want{};
        for (auto [a, b] : expansion_edges(kind)) {
            want[a][b] = true;
            want[b][a] = true;
        }
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (g.adjacent(roles[a], roles[b]) != want[a][b])
                    return false;
        return true;
    }

}

/// The graph H_kind on vertices c=0, u=1, v=2, w=3, x=4, y=5 (and z=6 for H5).
inline auto expansion_graph(int kind) -> Graph
{
    if (kind < 1 || kind > 5)
        throw GraphError("claw expansions are numbered 1 to 5");
    std::vector<Edge> edges;
    for (auto [a, b] : detail::expansion_edges(kind))
        edges.emplace_back(a, b);
    return Graph(kind == 5 ? 7 : 6, edges);
}

/// Finds an induced H1..H5 around the given claw, lowest kind first.
inline auto detect_claw_expansion(const Graph & g, const PatternEmbedding & claw, bool check_graph = true)
    -> ClawExpansion
{
    if (claw.kind != PatternKind::claw || claw.leaves.size() != 3 || ! induces_pattern(g, claw))
        throw GraphError("detect_claw_expansion: not an induced claw");
    if (check_graph) {
        if (! is_fork_free(g))
            throw GraphError("detect_claw_expansion: the graph has an induced fork");
        if (! is_connected(g) || ! is_prime(g))
            throw GraphError("detect_claw_expansion: the graph is not prime");
    }
    std::array<Vertex, 3> leaves{claw.leaves[0], claw.leaves[1], claw.leaves[2]};
    std::sort(leaves.begin(), leaves.end());
    auto outside = [&](Vertex q) { return q != claw.center && std::find(leaves.begin(), leaves.end(), q) == leaves.end(); };

    for (int kind = 1; kind <= 5; ++kind) {
        auto perm = leaves;
        do {
            for (Vertex x = 0; x < g.size(); ++x) {
                if (! outside(x) || ! g.adjacent(x, perm[0]) || ! g.adjacent(x, perm[1]))
                    continue;
                for (Vertex y = 0; y < g.size(); ++y) {
                    if (y == x || ! outside(y) || ! g.adjacent(y, perm[1]) || ! g.adjacent(y, perm[2]))
                        continue;
                    std::vector<Vertex> roles{claw.center, perm[0], perm[1], perm[2], x, y};
                    if (kind < 5) {
                        if (detail::matches_expansion(g, roles, kind))
                            return ClawExpansion{kind, roles[0], roles[1], roles[2], roles[3], x, y, -1};
                        continue;
                    }
                    for (Vertex z = 0; z < g.size(); ++z) {
                        if (z == x || z == y || ! outside(z))
                            continue;
                        roles.resize(6);
                        roles.push_back(z);
                        if (detail::matches_expansion(g, roles, kind))
                            return ClawExpansion{kind, roles[0], roles[1], roles[2], roles[3], x, y, z};
                    }
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    throw InvariantFailure("detect_claw_expansion: no H1..H5 around the claw centred at " + std::to_string(claw.center));
}

/// Moves the token on leaf `token` of the expanded claw to the untokened leaf
/// `free_leaf`, touching only the two tokens on the claw. Fails with a
/// certificate on {c, x, y} when those are blocked.
inline auto rotate_claw(const Graph & g, const TokenSet & i_in, const ClawExpansion & e, Vertex token, Vertex free_leaf)
    -> StepResult
{
    auto i = normalized(i_in);
    std::array<Vertex, 3> leaves{e.u, e.v, e.w};
    if (std::find(leaves.begin(), leaves.end(), token) == leaves.end()
        || std::find(leaves.begin(), leaves.end(), free_leaf) == leaves.end() || token == free_leaf)
        throw GraphError("rotate_claw: token and free leaf must be distinct leaves of the claw");
    for (auto l : leaves)
        if (contains(i, l) == (l == free_leaf))
            throw GraphError("rotate_claw: expected tokens on exactly the two leaves other than the free one");
    if (contains(i, e.c))
        throw GraphError("rotate_claw: the claw center holds a token");

    // each entry moves a token through a waypoint
    struct Hop { Vertex from, via, to; };
    std::vector<Hop> plan;
    if (free_leaf == e.w) {
        plan.push_back({e.v, e.y, e.w});
        if (token == e.u)
            plan.push_back({e.u, e.x, e.v});
    }
    else if (free_leaf == e.u) {
        plan.push_back({e.v, e.x, e.u});
        if (token == e.w)
            plan.push_back({e.w, e.y, e.v});
    }
    else if (token == e.w)
        plan.push_back({e.w, e.y, e.v});
    else
        plan.push_back({e.u, e.x, e.v});

    StepResult out{StepStatus::done, SlideSequence{i, {}}, std::nullopt, {}};
    auto cur = i;
    for (auto hop : plan) {
        if (detail::try_slide(g, cur, out.moves, hop.from, hop.via)) {
            if (detail::try_slide(g, cur, out.moves, hop.via, hop.to))
                continue;
            detail::try_slide(g, cur, out.moves, hop.via, hop.from);
        }
        std::vector<Vertex> x{e.c, e.x, e.y};
        std::sort(x.begin(), x.end());
        if (set_intersection(x, cur).empty() && is_locally_blocked(g, cur, x)) {
            out.status = StepStatus::blocked;
            out.certificate = BlockCertificate{x, blocking_set(g, cur, x), CertificateSource::claw_rotation};
            out.diagnostic = "rotation around " + std::to_string(e.c) + " blocked";
        }
        else {
            out.status = StepStatus::stalled;
            out.diagnostic = "rotation around " + std::to_string(e.c) + " stalled at " + std::to_string(hop.from)
                + " -> " + std::to_string(hop.via) + " -> " + std::to_string(hop.to);
        }
        return out;
    }
    return out;
}

}
