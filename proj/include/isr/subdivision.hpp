#pragma once

#include "isr/graph.hpp"
#include "isr/instance.hpp"
#include "isr/mis.hpp"
#include "isr/oracle.hpp"

#include <string>
#include <vector>

namespace isr {

/// G_t: every edge uv (u < v) of the original graph replaced by a path
/// u, s^1, ..., s^t, v. Original vertices keep their ids; segment vertices
/// follow, edge by edge in sorted edge order.
struct SubdivisionMap {
    int t = 0;
    Graph original;
    Graph subdivided;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> segments;

    auto is_original(Vertex v) const -> bool { return v < original.size(); }

    auto edge_index(Vertex u, Vertex v) const -> int
    {
        Edge e{std::min(u, v), std::max(u, v)};
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e)
            throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v) + " in the original graph");
        return static_cast<int>(it - edges.begin());
    }

    /// Interior of the segment between u and v, listed starting next to `u`.
    auto path_from(Vertex u, Vertex v) const -> std::vector<Vertex>
    {
        auto s = segments[edge_index(u, v)];
        if (u > v)
            std::reverse(s.begin(), s.end());
        return s;
    }

    /// Index of the edge whose segment contains `v`, or -1 for originals.
    auto segment_of(Vertex v) const -> int
    {
        if (is_original(v))
            return -1;
        return (v - original.size()) / t;
    }
};

inline auto subdivide(const Graph & g, int t) -> SubdivisionMap
{
    if (t < 2 || t % 2 != 0)
        throw GraphError("subdivision parameter must be even and at least 2, got " + std::to_string(t));
    SubdivisionMap m;
    m.t = t;
    m.original = g;
    m.edges = g.edges();
    int n = g.size();
    int total = n + t * static_cast<int>(m.edges.size());

    Label next = 0;
    for (auto l : g.labels())
        next = std::max(next, l + 1);
    std::vector<Label> labels = g.labels();
    std::vector<Edge> edges;
    Vertex id = n;
    for (auto [u, v] : m.edges) {
        std::vector<Vertex> seg;
        Vertex prev = u;
        for (int i = 0; i < t; ++i, ++id) {
            seg.push_back(id);
            labels.push_back(next + (id - n));
            edges.emplace_back(prev, id);
            prev = id;
        }
        edges.emplace_back(prev, v);
        m.segments.push_back(std::move(seg));
    }
    m.subdivided = Graph(total, edges, labels);
    return m;
}

/// The canonical extension: t/2 tokens per segment, as far as possible from a
/// tokened endpoint, and packed toward the smaller endpoint otherwise.
inline auto extend(const TokenSet & i_in, const SubdivisionMap & m) -> TokenSet
{
    auto i = normalized(i_in);
    if (! is_independent(m.original, i))
        throw GraphError("extend: the set is not independent in the original graph");
    TokenSet out = i;
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        auto [u, v] = m.edges[e];
        // s^2, s^4, ... when the smaller endpoint is tokened, s^1, s^3, ... otherwise
        int first = contains(i, u) ? 1 : 0;
        for (int k = first; k < m.t; k += 2)
            out.push_back(m.segments[e][k]);
    }
    return normalized(std::move(out));
}

struct AlphaShift {
    int original = 0;
    int subdivided = 0;
    bool holds = false;
};

inline auto alpha_shift_check(const Graph & g, int t) -> AlphaShift
{
    auto m = subdivide(g, t);
    AlphaShift r{alpha(g), alpha(m.subdivided), false};
    r.holds = r.subdivided == r.original + t * g.edge_count() / 2;
    return r;
}

struct Normalized {
    TokenSet set;
    SlideSequence moves;
};

/// Left-moves on one segment until none applies.
inline auto left_move_normalize(const SubdivisionMap & m, const TokenSet & i_in, int edge) -> Normalized
{
    auto & g = m.subdivided;
    auto cur = normalized(i_in);
    if (! is_independent(g, cur))
        throw GraphError("left_move_normalize: the set is not independent");
    Normalized out{cur, SlideSequence{cur, {}}};
    auto & seg = m.segments.at(edge);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int k = 1; k < m.t; ++k)
            if (detail::try_slide(g, out.set, out.moves, seg[k], seg[k - 1]))
                moved = true;
    }
    return out;
}

/// Left-moves on every segment. Segments with both endpoints tokened have
/// slack too once t >= 4.
inline auto normalize_segments(const SubdivisionMap & m, const TokenSet & i) -> Normalized
{
    Normalized out{normalized(i), SlideSequence{normalized(i), {}}};
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        auto step = left_move_normalize(m, out.set, static_cast<int>(e));
        out.set = step.set;
        out.moves.append(step.moves);
    }
    return out;
}

inline auto segment_token_count_check(const SubdivisionMap & m, const TokenSet & i_in) -> bool
{
    auto i = normalized(i_in);
    if (! is_maximum_independent(m.subdivided, i))
        throw GraphError("segment_token_count_check requires a maximum independent set of the subdivision");
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        auto [u, v] = m.edges[e];
        int want = contains(i, u) && contains(i, v) ? (m.t - 2) / 2 : m.t / 2;
        int have = 0;
        for (auto s : m.segments[e])
            have += contains(i, s);
        if (have != want)
            return false;
    }
    return true;
}

struct Trace {
    std::vector<Vertex> isolated;
    std::vector<Edge> edges;

    auto v() const -> int { return static_cast<int>(isolated.size()); }
    auto e() const -> int { return static_cast<int>(edges.size()); }
};

inline auto trace(const SubdivisionMap & m, const TokenSet & i) -> Trace
{
    Trace out;
    TokenSet on_v;
    for (auto v : i)
        if (m.is_original(v))
            on_v.push_back(v);
    for (auto v : on_v) {
        int deg = m.original.count_neighbors_in(v, on_v);
        if (deg >= 2)
            throw InvariantFailure("trace: original vertex " + std::to_string(v)
                + " has two tokened original neighbours");
        if (deg == 0)
            out.isolated.push_back(v);
        else
            for (auto w : m.original.neighbors(v))
                if (w > v && contains(on_v, w))
                    out.edges.emplace_back(v, w);
    }
    return out;
}

/// Isolated trace vertices plus the smaller end of each trace edge.
inline auto project_set(const SubdivisionMap & m, const TokenSet & i) -> TokenSet
{
    auto tr = trace(m, i);
    TokenSet out = tr.isolated;
    for (auto [a, b] : tr.edges)
        out.push_back(std::min(a, b));
    return normalized(std::move(out));
}

/// Sequence between two maximum sets of G_t with the same tokens on the
/// original vertices.
inline auto same_trace_sequence(const SubdivisionMap & m, const TokenSet & a, const TokenSet & b) -> SlideSequence
{
    auto na = normalize_segments(m, a), nb = normalize_segments(m, b);
    if (na.set != nb.set)
        throw InvariantFailure("same_trace_sequence: normalized sets differ");
    auto out = na.moves;
    out.append(nb.moves.reversed());
    return out;
}

/// Lifts a single slide u -> v between maximum sets of the original graph to
/// a sequence in G_t between their extensions.
inline auto lift_step(const SubdivisionMap & m, const TokenSet & i1_in, const TokenSet & i2_in) -> SlideSequence
{
    auto i1 = normalized(i1_in), i2 = normalized(i2_in);
    auto start = extend(i1, m);
    SlideSequence out{start, {}};
    if (i1 == i2)
        return out;
    auto gone = set_minus(i1, i2), come = set_minus(i2, i1);
    if (gone.size() != 1 || come.size() != 1 || ! m.original.adjacent(gone[0], come[0]))
        throw GraphError("lift_step: the sets are not one slide apart");
    Vertex u = gone[0], v = come[0];
    auto & g = m.subdivided;
    auto cur = start;
    auto step = [&](Vertex from, Vertex to) {
        if (! detail::try_slide(g, cur, out, from, to))
            throw InvariantFailure("lift_step: cannot slide " + std::to_string(from) + " -> " + std::to_string(to));
    };

    // clear the segment vertices next to v, pushing their tokens toward w
    for (auto w : m.original.neighbors(v)) {
        if (w == u)
            continue;
        auto seg = m.path_from(v, w);
        if (! contains(cur, seg[0]))
            continue;
        for (int k = m.t - 2; k >= 0; k -= 2)
            step(seg[k], seg[k + 1]);
    }

    auto seg = m.path_from(u, v);
    step(seg[m.t - 1], v);
    for (int k = m.t - 2; k >= 0; --k)
        if (contains(cur, seg[k]))
            step(seg[k], seg[k + 1]);
    step(u, seg[0]);

    // segments at u now carry the no-endpoint pattern in u's orientation
    for (auto w : m.original.neighbors(u)) {
        if (w == v || u > w)
            continue;
        auto norm = left_move_normalize(m, cur, m.edge_index(u, w));
        cur = norm.set;
        out.append(norm.moves);
    }

    if (cur != extend(i2, m))
        throw InvariantFailure("lift_step: the recipe did not reach the extension of the second set");
    return out;
}

/// Lifts a TS sequence between maximum sets of the original graph.
inline auto lift_sequence(const SubdivisionMap & m, const SlideSequence & seq) -> SlideSequence
{
    auto sets = seq.sets();
    int a = alpha(m.original);
    for (std::size_t k = 0; k < sets.size(); ++k)
        if (static_cast<int>(sets[k].size()) != a || ! is_independent(m.original, sets[k]))
            throw GraphError("lift_sequence: set " + std::to_string(k) + " is not a maximum independent set");
    SlideSequence out{extend(seq.start, m), {}};
    for (std::size_t k = 0; k + 1 < sets.size(); ++k) {
        auto & mv = seq.moves[k];
        if (! m.original.adjacent(mv.from, mv.to))
            throw GraphError("lift_sequence: move " + std::to_string(k) + " is not a slide along an edge");
        out.append(lift_step(m, sets[k], sets[k + 1]));
    }
    return out;
}

/// Projects a TS sequence of maximum sets of G_t; equal consecutive
/// projections are merged.
inline auto project_sequence(const SubdivisionMap & m, const SlideSequence & seq) -> SlideSequence
{
    if (auto ok = validate_sequence(m.subdivided, seq, seq.final_set(), Rule::ts); ! ok)
        throw GraphError("project_sequence: move " + std::to_string(ok.index) + ": " + ok.message);
    auto sets = seq.sets();
    int a = alpha(m.subdivided);
    SlideSequence out{project_set(m, sets.front()), {}};
    auto prev = out.start;
    for (std::size_t k = 0; k < sets.size(); ++k) {
        if (static_cast<int>(sets[k].size()) != a)
            throw GraphError("project_sequence: set " + std::to_string(k) + " is not maximum in the subdivision");
        auto p = project_set(m, sets[k]);
        if (p == prev)
            continue;
        auto gone = set_minus(prev, p), come = set_minus(p, prev);
        if (gone.size() != 1 || come.size() != 1 || ! m.original.adjacent(gone[0], come[0]))
            throw InvariantFailure("project_sequence: projections " + std::to_string(k - 1) + " and "
                + std::to_string(k) + " are not one slide apart");
        out.moves.push_back(slide(gone[0], come[0]));
        prev = p;
    }
    return out;
}

}
