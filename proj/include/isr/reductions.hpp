#pragma once

#include "isr/graph.hpp"
#include "isr/instance.hpp"
#include "isr/mis.hpp"
#include "isr/modular.hpp"
#include "isr/oracle.hpp"
#include "isr/patterns.hpp"

#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace isr {

enum class OutcomeTag { unchanged, reduced, split, no_instance };

inline auto to_string(OutcomeTag t) -> std::string_view
{
    switch (t) {
        case OutcomeTag::unchanged: return "unchanged";
        case OutcomeTag::reduced: return "reduced";
        case OutcomeTag::split: return "split";
        case OutcomeTag::no_instance: return "no-instance";
    }
    return "?";
}

struct RuleOutcome {
    OutcomeTag tag = OutcomeTag::unchanged;
    std::vector<Instance> instances;
    std::string note;

    auto fired() const -> bool { return tag != OutcomeTag::unchanged; }
    auto instance() const -> const Instance & { return instances.front(); }
};

enum class CertificateSource { degree, module_neighbourhood, claw_rotation };

inline auto to_string(CertificateSource s) -> std::string_view
{
    switch (s) {
        case CertificateSource::degree: return "three-token vertex";
        case CertificateSource::module_neighbourhood: return "module neighbourhood";
        case CertificateSource::claw_rotation: return "claw rotation";
    }
    return "?";
}

/// A vertex set claimed permanently blocked, with its blocking tokens as they
/// stood when the claim was made.
struct BlockCertificate {
    std::vector<Vertex> blocked;
    TokenSet blocking;
    CertificateSource source = CertificateSource::degree;
};

namespace detail {

    inline auto label_list(const Graph & g, const std::vector<Vertex> & vs) -> std::string
    {
        std::string s = "{";
        for (std::size_t i = 0; i < vs.size(); ++i)
            s += (i ? "," : "") + std::to_string(g.label(vs[i]));
        return s + "}";
    }

    inline auto no(std::string note) -> RuleOutcome { return RuleOutcome{OutcomeTag::no_instance, {}, std::move(note)}; }

    inline auto reduced(Instance inst, std::string note) -> RuleOutcome
    {
        RuleOutcome out{OutcomeTag::reduced, {}, std::move(note)};
        out.instances.push_back(std::move(inst));
        return out;
    }

}

inline auto is_locally_blocked(const Graph & g, const TokenSet & tokens, const std::vector<Vertex> & x) -> bool
{
    for (auto v : x)
        if (g.count_neighbors_in(v, tokens) < 2)
            return false;
    return true;
}

inline auto blocking_set(const Graph & g, const TokenSet & tokens, const std::vector<Vertex> & x) -> TokenSet
{
    TokenSet out;
    for (auto t : tokens)
        for (auto v : x)
            if (g.adjacent(t, v)) {
                out.push_back(t);
                break;
            }
    return out;
}

/// Deletes the first vertex seeing three or more tokens of I, or answers No if
/// that vertex belongs to J.
inline auto rule_A(const Instance & inst) -> RuleOutcome
{
    auto & g = inst.graph;
    for (Vertex c = 0; c < g.size(); ++c)
        if (g.count_neighbors_in(c, inst.source) >= 3) {
            auto what = "vertex " + std::to_string(g.label(c)) + " sees three or more tokens";
            if (contains(inst.target, c))
                return detail::no("rule A: " + what + " and is in J");
            return detail::reduced(delete_vertices(inst, std::vector{c}), "rule A: deleted " + what);
        }
    return {};
}

/// Rule A to a fixpoint, for I and symmetrically for J.
inline auto rule_A_exhaustive(const Instance & inst) -> RuleOutcome
{
    Instance cur = inst;
    std::string note;
    bool fired = false;
    while (true) {
        auto r = rule_A(cur);
        if (! r.fired()) {
            auto s = rule_A(cur.swapped());
            if (! s.fired())
                break;
            if (s.tag == OutcomeTag::no_instance)
                return s;
            cur = s.instance().swapped();
            note += (note.empty() ? "" : "; ") + s.note + " (J side)";
        }
        else {
            if (r.tag == OutcomeTag::no_instance)
                return r;
            cur = r.instance();
            note += (note.empty() ? "" : "; ") + r.note;
        }
        fired = true;
    }
    if (! fired)
        return {};
    return detail::reduced(std::move(cur), note);
}

inline auto is_reduced_for(const Graph & g, const TokenSet & tokens) -> bool
{
    for (Vertex c = 0; c < g.size(); ++c)
        if (g.count_neighbors_in(c, tokens) >= 3)
            return false;
    return true;
}

inline auto rule_Z(const Instance & inst, const BlockCertificate & cert) -> RuleOutcome
{
    auto x = normalized(cert.blocked);
    if (! set_intersection(x, inst.source).empty())
        throw GraphError("rule Z: the blocked set carries a token of I");
    auto what = detail::label_list(inst.graph, x);
    if (! set_intersection(x, inst.target).empty())
        return detail::no("rule Z: permanently blocked " + what + " meets J");
    return detail::reduced(delete_vertices(inst, x), "rule Z: deleted permanently blocked " + what);
}

inline auto permanently_blocked_by_degree(const Instance & inst) -> std::optional<BlockCertificate>
{
    auto & g = inst.graph;
    for (Vertex c = 0; c < g.size(); ++c)
        if (g.count_neighbors_in(c, inst.source) >= 3)
            return BlockCertificate{{c}, blocking_set(g, inst.source, {c}), CertificateSource::degree};
    return std::nullopt;
}

/// With I and J maximum, no claw center can ever hold a token: delete the
/// center of the first induced claw.
inline auto rule_MIS(const Instance & inst) -> RuleOutcome
{
    int a = alpha(inst.graph);
    if (static_cast<int>(inst.source.size()) != a || static_cast<int>(inst.target.size()) != a)
        throw GraphError("rule MIS requires maximum independent sets I and J");
    if (auto claw = find_induced_claw(inst.graph))
        return detail::reduced(delete_vertices(inst, std::vector{claw->center}),
            "rule MIS: deleted claw center " + std::to_string(inst.graph.label(claw->center)));
    return {};
}

inline auto rule_MIS_exhaustive(const Instance & inst) -> RuleOutcome
{
    Instance cur = inst;
    std::string note;
    bool fired = false;
    while (true) {
        auto r = rule_MIS(cur);
        if (! r.fired())
            break;
        cur = r.instance();
        note += (note.empty() ? "" : "; ") + r.note;
        fired = true;
    }
    if (! fired)
        return {};
    return detail::reduced(std::move(cur), note);
}

/// Probe: with I maximum and I-reduced, no induced claw has a token on its
/// center or on two leaves. Returns the first claw breaking that. A claw
/// with no token at all is possible and not reported.
inline auto check_claw_token_lemma(const Instance & inst) -> std::optional<PatternEmbedding>
{
    for (auto & claw : enumerate_induced_claws(inst.graph)) {
        int leaf_tokens = 0;
        for (auto l : claw.leaves)
            leaf_tokens += contains(inst.source, l);
        if (leaf_tokens > 1 || contains(inst.source, claw.center))
            return claw;
    }
    return std::nullopt;
}

/// Distinct non-trivial modules obtained as closures of vertex pairs, ordered
/// by (size, members).
inline auto candidate_modules(const Graph & g) -> std::vector<ModuleSet>
{
    std::vector<std::vector<Vertex>> found;
    for (Vertex a = 0; a < g.size(); ++a)
        for (Vertex b = a + 1; b < g.size(); ++b) {
            VertexSet seed(g.size());
            seed.set(a);
            seed.set(b);
            auto closure = module_closure(g, std::move(seed));
            if (closure.count() < g.size())
                found.push_back(closure.members());
        }
    std::sort(found.begin(), found.end(), [](auto & x, auto & y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<ModuleSet> out;
    for (auto & m : found)
        out.push_back(make_module_set(g, m));
    return out;
}

namespace detail {

    inline auto outside_neighbourhood(const Graph & g, const ModuleSet & m) -> std::vector<Vertex>
    {
        auto inside = g.set_of(m.vertices);
        std::vector<Vertex> out;
        for (Vertex x = 0; x < g.size(); ++x)
            if (! inside.test(x) && g.row(x).intersects(inside))
                out.push_back(x);
        return out;
    }

    inline auto unbalanced(const Instance & inst, const ModuleSet & m) -> std::optional<std::pair<Vertex, Vertex>>
    {
        auto in_i = set_intersection(inst.source, m.vertices);
        auto in_j = set_intersection(inst.target, m.vertices);
        if (in_i.size() == 1 && in_j.size() == 1 && m.component_of(in_i[0]) != m.component_of(in_j[0]))
            return std::pair{in_i[0], in_j[0]};
        return std::nullopt;
    }

}

/// A module with one token of I and one of J in different components of the
/// module: contract it if the I token can step out of the module, else No.
inline auto rule_B(const Instance & inst) -> RuleOutcome
{
    auto & g = inst.graph;
    for (auto & m : candidate_modules(g)) {
        auto pair = detail::unbalanced(inst, m);
        if (! pair)
            continue;
        auto [u, v] = *pair;
        auto what = detail::label_list(g, m.vertices);
        auto inside = g.set_of(m.vertices);
        for (Vertex c = 0; c < g.size(); ++c) {
            if (inside.test(c) || ! g.adjacent(c, u))
                continue;
            if (g.count_neighbors_in(c, inst.source) == 1)
                return detail::reduced(contract_module(inst, m),
                    "rule B: contracted module " + what + " (exit via " + std::to_string(g.label(c)) + ")");
        }
        return detail::no("rule B: the I token of module " + what + " can never leave its component");
    }
    return {};
}

/// Assumes rule B is not applicable.
inline auto rule_D(const Instance & inst) -> RuleOutcome
{
    auto & g = inst.graph;
    for (auto & m : candidate_modules(g)) {
        auto in_i = set_intersection(inst.source, m.vertices).size();
        if (in_i > 1)
            continue;
        auto what = detail::label_list(g, m.vertices);
        if (set_intersection(inst.target, m.vertices).size() > 1)
            return detail::no("rule D: module " + what + " has at most one token of I but several of J");
        return detail::reduced(contract_module(inst, m), "rule D: contracted module " + what);
    }
    return {};
}

/// Assumes rule B is not applicable. The remaining graph falls apart into
/// pieces the caller treats separately.
inline auto rule_E(const Instance & inst) -> RuleOutcome
{
    auto & g = inst.graph;
    for (auto & m : candidate_modules(g)) {
        auto in_i = set_intersection(inst.source, m.vertices).size();
        if (in_i < 2)
            continue;
        auto nbhd = detail::outside_neighbourhood(g, m);
        if (nbhd.empty())
            continue;
        auto what = detail::label_list(g, m.vertices);
        if (set_intersection(inst.target, m.vertices).size() != in_i)
            return detail::no("rule E: module " + what + " holds different numbers of I and J tokens");
        auto rest = delete_vertices(inst, nbhd);
        RuleOutcome out{OutcomeTag::split, {}, "rule E: deleted the neighbourhood of module " + what};
        for (auto & comp : connected_components(rest.graph)) {
            auto part = restrict_instance(rest, comp);
            if (part.source.size() != part.target.size())
                return detail::no(out.note + "; a resulting component holds different numbers of I and J tokens");
            out.instances.push_back(std::move(part));
        }
        return out;
    }
    return {};
}

/// Result of reduce_to_prime: either No, or the independent prime parts.
struct PrimeReduction {
    bool no_instance = false;
    std::vector<Instance> parts;
    /// Dropped pieces in which I and J already agree; their contracted
    /// vertices still matter when lifting.
    std::vector<Instance> settled;
    std::vector<std::string> log;
};

/// Rules A, B, D, E to a fixpoint (in that order), splitting by connected
/// component. Components in which I and J already agree are dropped.
inline auto reduce_to_prime(const Instance & inst) -> PrimeReduction
{
    PrimeReduction out;
    if (inst.source.size() != inst.target.size()) {
        out.no_instance = true;
        out.log.push_back("token counts differ");
        return out;
    }
    std::deque<Instance> work{inst};
    auto fail = [&](std::string note) {
        out.no_instance = true;
        out.parts.clear();
        out.log.push_back(std::move(note));
        return out;
    };

    while (! work.empty()) {
        Instance cur = std::move(work.front());
        work.pop_front();

        if (auto a = rule_A_exhaustive(cur); a.fired()) {
            out.log.push_back(a.note);
            if (a.tag == OutcomeTag::no_instance)
                return fail("no-instance");
            cur = a.instance();
        }

        auto comps = connected_components(cur.graph);
        if (comps.size() > 1) {
            for (auto & comp : comps) {
                auto part = restrict_instance(cur, comp);
                if (part.source.size() != part.target.size())
                    return fail("component " + detail::label_list(cur.graph, comp) + " holds different numbers of I and J tokens");
                if (part.source != part.target)
                    work.push_back(std::move(part));
                else
                    out.settled.push_back(std::move(part));
            }
            continue;
        }
        if (cur.source == cur.target) {
            out.settled.push_back(std::move(cur));
            continue;
        }

        RuleOutcome r = rule_B(cur);
        if (! r.fired())
            r = rule_D(cur);
        if (! r.fired())
            r = rule_E(cur);
        if (r.fired()) {
            out.log.push_back(r.note);
            if (r.tag == OutcomeTag::no_instance)
                return fail("no-instance");
            for (auto & next : r.instances)
                work.push_back(std::move(next));
            continue;
        }
        out.parts.push_back(std::move(cur));
    }
    return out;
}

/// Moves the single token on `from` to `to` along a route whose vertices stay
/// free of the other tokens. Empty optional if no such route exists.
inline auto route_token(const Graph & g, const TokenSet & tokens, Vertex from, Vertex to)
    -> std::optional<std::vector<Move>>
{
    auto others = without(tokens, from);
    auto usable = [&](Vertex v) {
        if (contains(others, v))
            return false;
        for (auto t : others)
            if (g.adjacent(t, v))
                return false;
        return true;
    };
    if (! usable(to))
        return std::nullopt;
    std::vector<Vertex> prev(g.size(), -1);
    prev[from] = from;
    std::deque<Vertex> queue{from};
    while (! queue.empty() && prev[to] == -1) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v))
            if (prev[w] == -1 && usable(w)) {
                prev[w] = v;
                queue.push_back(w);
            }
    }
    if (prev[to] == -1)
        return std::nullopt;
    std::vector<Move> moves;
    for (Vertex v = to; v != from; v = prev[v])
        moves.push_back(slide(prev[v], v));
    std::reverse(moves.begin(), moves.end());
    return moves;
}

/// Turns witnesses for the parts produced by reduce_to_prime into one witness
/// on the reduction's input graph.
inline auto lift_through_reduction(const Instance & input, const std::vector<Instance> & parts,
    const std::vector<SlideSequence> & witnesses, const std::vector<Instance> & settled = {}) -> SlideSequence
{
    auto & g = input.graph;
    SlideSequence out{input.source, {}};
    TokenSet cur = input.source;
    auto apply = [&](const Move & m) {
        out.moves.push_back(m);
        cur = with(without(cur, m.from), m.to);
    };
    auto bag = [&](const Instance & part, Vertex v) {
        std::vector<Vertex> ids;
        for (auto l : part.members_of(v))
            ids.push_back(g.vertex_of(l));
        return normalized(std::move(ids));
    };
    auto relocate = [&](Vertex from, Vertex to) {
        if (from == to)
            return;
        auto route = route_token(g, cur, from, to);
        if (! route)
            throw InvariantFailure("lifting: cannot move the token on " + std::to_string(g.label(from)) + " to "
                + std::to_string(g.label(to)) + " inside its contracted module");
        for (auto & m : *route)
            apply(m);
    };

    std::vector<const Instance *> pieces;
    for (auto & part : parts)
        pieces.push_back(&part);
    for (auto & part : settled)
        pieces.push_back(&part);

    // tokens whose start and end lie in different pieces of a contracted module
    // step out and back in first
    for (auto * piece : pieces)
        for (Vertex v = 0; v < piece->graph.size(); ++v) {
            auto members = bag(*piece, v);
            if (members.size() < 2)
                continue;
            auto in_i = set_intersection(cur, members);
            auto in_j = set_intersection(input.target, members);
            if (in_i.size() != 1 || in_j.size() != 1 || in_i == in_j)
                continue;
            auto m = make_module_set(g, members);
            if (m.component_of(in_i[0]) != m.component_of(in_j[0]))
                relocate(in_i[0], in_j[0]);
        }

    for (std::size_t p = 0; p < parts.size(); ++p) {
        auto & part = parts[p];
        for (auto & mv : witnesses[p].moves) {
            auto from_bag = bag(part, mv.from);
            auto to_bag = bag(part, mv.to);
            auto here = set_intersection(cur, from_bag);
            if (here.size() != 1)
                throw InvariantFailure("lifting: expected one token in the contracted vertex " + std::to_string(part.graph.label(mv.from)));
            std::vector<Vertex> choices = set_intersection(input.target, to_bag);
            for (auto v : to_bag)
                choices.push_back(v);
            bool moved = false;
            for (auto q : choices) {
                if (! g.adjacent(here[0], q) || contains(cur, q))
                    continue;
                bool clash = false;
                for (auto t : cur)
                    if (t != here[0] && g.adjacent(t, q))
                        clash = true;
                if (clash)
                    continue;
                apply(slide(here[0], q));
                moved = true;
                break;
            }
            if (! moved)
                throw InvariantFailure("lifting: no valid image for the move " + std::to_string(part.graph.label(mv.from))
                    + " -> " + std::to_string(part.graph.label(mv.to)));
        }
    }

    // settle tokens inside their contracted modules
    for (auto * piece : pieces)
        for (Vertex v = 0; v < piece->graph.size(); ++v) {
            auto members = bag(*piece, v);
            if (members.size() < 2)
                continue;
            auto here = set_intersection(cur, members);
            auto there = set_intersection(input.target, members);
            if (here.size() == 1 && there.size() == 1)
                relocate(here[0], there[0]);
        }

    if (auto ok = validate_sequence(g, out, input.target, Rule::ts); ! ok)
        throw InvariantFailure("lifting produced an invalid sequence: " + ok.message);
    return out;
}

}
