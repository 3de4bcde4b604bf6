#pragma once

#include "isr/graph.hpp"
#include "isr/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace isr {

enum class OracleStatus { reachable, unreachable, budget_exhausted };

inline auto to_string(OracleStatus s) -> std::string_view
{
    switch (s) {
        case OracleStatus::reachable: return "reachable";
        case OracleStatus::unreachable: return "unreachable";
        case OracleStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

struct ReachabilityReport {
    OracleStatus status = OracleStatus::unreachable;
    std::optional<SlideSequence> witness;
    std::size_t explored = 0;
    std::string reason;

    auto reachable() const -> bool { return status == OracleStatus::reachable; }
};

inline constexpr std::size_t default_oracle_budget = 10'000'000;

namespace detail {

    using Mask = std::uint64_t;

    inline auto mask_rows(const Graph & g) -> std::vector<Mask>
    {
        if (g.size() > 64)
            throw GraphError("the oracle handles at most 64 vertices");
        std::vector<Mask> rows(g.size(), 0);
        for (Vertex v = 0; v < g.size(); ++v)
            for (auto w : g.neighbors(v))
                rows[v] |= Mask{1} << w;
        return rows;
    }

    inline auto to_mask(const TokenSet & s) -> Mask
    {
        Mask m = 0;
        for (auto v : s)
            m |= Mask{1} << v;
        return m;
    }

    inline auto from_mask(Mask m) -> TokenSet
    {
        TokenSet s;
        while (m) {
            s.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return s;
    }

    /// Calls visit(next_state, from, to) for every rule-adjacent independent set,
    /// tokens and destinations in increasing order.
    template <typename Visit>
    auto for_each_successor(const std::vector<Mask> & rows, int n, Mask state, Rule rule, Visit && visit) -> bool
    {
        for (Mask rest = state; rest; rest &= rest - 1) {
            int from = std::countr_zero(rest);
            Mask others = state & ~(Mask{1} << from);
            Mask cands = rule == Rule::ts ? rows[from] : (n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
            cands &= ~state;
            for (; cands; cands &= cands - 1) {
                int to = std::countr_zero(cands);
                if (rows[to] & others)
                    continue;
                if (! visit(others | (Mask{1} << to), from, to))
                    return false;
            }
        }
        return true;
    }

}

/// Exact reachability by breadth-first search over independent sets of size |I|;
/// a witness found this way is a shortest one.
inline auto reachable(const Graph & g, const TokenSet & i_in, const TokenSet & j_in, Rule rule,
    std::size_t budget = default_oracle_budget) -> ReachabilityReport
{
    using detail::Mask;
    auto i = normalized(i_in), j = normalized(j_in);
    ReachabilityReport report;
    if (i.size() != j.size()) {
        report.reason = "token counts differ";
        return report;
    }
    if (! is_independent(g, i) || ! is_independent(g, j))
        throw GraphError("oracle: I and J must be independent");

    auto rows = detail::mask_rows(g);
    Mask start = detail::to_mask(i), goal = detail::to_mask(j);
    struct Parent { Mask prev; Vertex from, to; };
    std::unordered_map<Mask, Parent> parent;
    parent.emplace(start, Parent{start, -1, -1});
    std::deque<Mask> queue{start};
    bool found = start == goal;
    bool exhausted = false;

    while (! queue.empty() && ! found) {
        Mask cur = queue.front();
        queue.pop_front();
        ++report.explored;
        detail::for_each_successor(rows, g.size(), cur, rule, [&](Mask next, Vertex from, Vertex to) {
            if (parent.contains(next))
                return true;
            if (parent.size() >= budget) {
                exhausted = true;
                return false;
            }
            parent.emplace(next, Parent{cur, from, to});
            if (next == goal) {
                found = true;
                return false;
            }
            queue.push_back(next);
            return true;
        });
        if (exhausted)
            break;
    }

    if (found) {
        report.status = OracleStatus::reachable;
        std::vector<Move> moves;
        for (Mask cur = goal; cur != start;) {
            auto & p = parent.at(cur);
            moves.push_back(Move{rule == Rule::ts ? MoveKind::slide : MoveKind::jump, p.from, p.to});
            cur = p.prev;
        }
        std::reverse(moves.begin(), moves.end());
        report.witness = SlideSequence{i, std::move(moves)};
    }
    else if (exhausted) {
        report.status = OracleStatus::budget_exhausted;
        report.reason = "explored-state budget of " + std::to_string(budget) + " exhausted";
    }
    else
        report.reason = "target not in the reachability class";
    return report;
}

inline auto ts_reachable(const Graph & g, const TokenSet & i, const TokenSet & j,
    std::size_t budget = default_oracle_budget) -> ReachabilityReport
{
    return reachable(g, i, j, Rule::ts, budget);
}

inline auto tj_reachable(const Graph & g, const TokenSet & i, const TokenSet & j,
    std::size_t budget = default_oracle_budget) -> ReachabilityReport
{
    return reachable(g, i, j, Rule::tj, budget);
}

/// The full reachability class of I, sorted.
inline auto reachable_sets(const Graph & g, const TokenSet & i_in, Rule rule) -> std::vector<TokenSet>
{
    using detail::Mask;
    auto rows = detail::mask_rows(g);
    Mask start = detail::to_mask(normalized(i_in));
    std::unordered_set<Mask> seen{start};
    std::vector<Mask> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head)
        detail::for_each_successor(rows, g.size(), queue[head], rule, [&](Mask next, Vertex, Vertex) {
            if (seen.insert(next).second)
                queue.push_back(next);
            return true;
        });
    std::vector<TokenSet> out;
    for (auto m : queue)
        out.push_back(detail::from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
}

/// Labels every independent set of size k with the id of its reachability class.
/// Desk-scale helper for exhaustive sweeps.
class ReachabilityClasses {
public:
    ReachabilityClasses(const Graph & g, int k, Rule rule)
    {
        using detail::Mask;
        auto rows = detail::mask_rows(g);
        std::vector<Mask> all;
        enumerate(g, rows, k, 0, 0, all);
        for (auto s : all) {
            if (_class.contains(s))
                continue;
            int id = _classes++;
            _class.emplace(s, id);
            std::vector<Mask> queue{s};
            for (std::size_t head = 0; head < queue.size(); ++head)
                detail::for_each_successor(rows, g.size(), queue[head], rule, [&](Mask next, Vertex, Vertex) {
                    if (_class.emplace(next, id).second)
                        queue.push_back(next);
                    return true;
                });
        }
        for (auto s : all)
            _sets.push_back(detail::from_mask(s));
    }

    auto sets() const -> const std::vector<TokenSet> & { return _sets; }
    auto class_of(const TokenSet & s) const -> int { return _class.at(detail::to_mask(s)); }
    auto same_class(const TokenSet & a, const TokenSet & b) const -> bool { return class_of(a) == class_of(b); }
    auto class_count() const -> int { return _classes; }

private:
    static auto enumerate(const Graph & g, const std::vector<detail::Mask> & rows, int k, Vertex from,
        detail::Mask cur, std::vector<detail::Mask> & out) -> void
    {
        if (k == 0) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = from; v < g.size(); ++v)
            if (! (rows[v] & cur))
                enumerate(g, rows, k - 1, v + 1, cur | (detail::Mask{1} << v), out);
    }

    std::unordered_map<detail::Mask, int> _class;
    std::vector<TokenSet> _sets;
    int _classes = 0;
};

/// Outcome of checking a sequence: `index` is the first bad move, or the
/// move count for a start/endpoint problem.
struct Validation {
    bool ok = true;
    std::size_t index = 0;
    std::string message;

    explicit operator bool() const { return ok; }
};

inline auto validate_sequence(const Graph & g, const SlideSequence & seq, const TokenSet & target, Rule rule)
    -> Validation
{
    auto fail = [](std::size_t index, std::string message) { return Validation{false, index, std::move(message)}; };
    auto cur = normalized(seq.start);
    for (auto v : cur)
        if (v < 0 || v >= g.size())
            return fail(0, "start set has a vertex outside the graph");
    if (cur.size() != seq.start.size() || ! is_independent(g, cur))
        return fail(0, "start set is not independent");

    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        auto & m = seq.moves[i];
        if (m.from < 0 || m.from >= g.size() || m.to < 0 || m.to >= g.size())
            return fail(i, "move leaves the graph");
        if (! contains(cur, m.from))
            return fail(i, "no token on " + std::to_string(m.from));
        if (contains(cur, m.to))
            return fail(i, "destination " + std::to_string(m.to) + " already holds a token");
        if (rule == Rule::ts && (m.kind != MoveKind::slide || ! g.adjacent(m.from, m.to)))
            return fail(i, "move " + std::to_string(m.from) + " -> " + std::to_string(m.to) + " is not a slide along an edge");
        cur = without(cur, m.from);
        for (auto v : cur)
            if (g.adjacent(v, m.to))
                return fail(i, "destination " + std::to_string(m.to) + " is adjacent to the token on " + std::to_string(v));
        cur = with(cur, m.to);
    }
    if (cur != normalized(target))
        return fail(seq.moves.size(), "sequence does not end at the target set");
    return {};
}

}
