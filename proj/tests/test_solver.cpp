#include "checks.hpp"

#include <gtest/gtest.h>

using namespace isr;
using namespace isr::test;

namespace {

auto no_fallback() -> SolveOptions
{
    SolveOptions o;
    o.oracle_fallback = false;
    return o;
}

}

TEST(Solve, FrozenSixCycle)
{
    auto r = solve(frozen_cycle(6));
    EXPECT_EQ(r.verdict, Verdict::no);
    EXPECT_FALSE(r.witness);
}

TEST(Solve, PathOfFive)
{
    auto inst = make_instance(path_graph(5), {0, 2}, {2, 4});
    auto r = solve(inst, no_fallback());
    ASSERT_EQ(r.verdict, Verdict::yes);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(validate_sequence(inst.graph, *r.witness, inst.target, Rule::ts));
}

TEST(Solve, TokenCountsDiffer)
{
    EXPECT_EQ(solve(make_instance(path_graph(5), {0, 2}, {4})).verdict, Verdict::no);
}

TEST(Solve, RejectsForks)
{
    try {
        solve(make_instance(fork_graph(), {1}, {4}));
        FAIL() << "no rejection";
    }
    catch (const NotForkFree & e) {
        EXPECT_TRUE(induces_pattern(fork_graph(), e.embedding));
    }
}

TEST(Solve, JumpingOutsideMaximumSets)
{
    SolveOptions o = no_fallback();
    o.rule = Rule::tj;
    auto inst = make_instance(path_graph(5), {0}, {4});
    EXPECT_THROW(solve(inst, o), Unsupported);
    o.oracle_fallback = true;
    auto r = solve(inst, o);
    EXPECT_EQ(r.verdict, Verdict::yes);

    auto frozen = frozen_cycle(6);
    o.oracle_fallback = false;
    EXPECT_EQ(solve(frozen, o).verdict, Verdict::no);
}

TEST(SolveMax, GadgetsAgreeWithOracle)
{
    for (int kind = 1; kind <= 5; ++kind) {
        auto g = expansion_graph(kind);
        auto sets = maximum_independent_sets(g);
        for (auto & i : sets)
            for (auto & j : sets) {
                auto r = solve(make_instance(g, i, j), no_fallback());
                EXPECT_EQ(r.yes(), brute_ts_reachable(g, i, j)) << "H" << kind << " " << describe(g, i, j);
                if (r.yes()) {
                    EXPECT_TRUE(validate_sequence(g, *r.witness, j, Rule::ts));
                }
            }
    }
}

TEST(SolveMax, ClawCentresLeaveFirst)
{
    auto g = expansion_graph(1);
    auto sets = maximum_independent_sets(g);
    ASSERT_FALSE(sets.empty());
    auto r = solve(make_instance(g, sets.front(), sets.back()), no_fallback());
    EXPECT_NE(r.verdict, Verdict::unknown);
    EXPECT_FALSE(r.stats.trail.empty());
}

TEST(ClawfreeEngine, Examples)
{
    EXPECT_EQ(clawfree_engine(frozen_cycle(6)).verdict, Verdict::no);

    auto c7 = make_instance(cycle_graph(7), {0, 2, 4}, {1, 3, 5});
    auto r = clawfree_engine(c7);
    EXPECT_EQ(r.yes(), brute_ts_reachable(c7.graph, c7.source, c7.target));
    if (r.yes()) {
        EXPECT_TRUE(validate_sequence(c7.graph, *r.witness, c7.target, Rule::ts));
    }

    auto p = make_instance(path_graph(5), {0, 2, 4}, {0, 2, 4});
    EXPECT_EQ(clawfree_engine(p).verdict, Verdict::yes);

    EXPECT_THROW(clawfree_engine(make_instance(star(3), {1, 2, 3}, {1, 2, 3})), GraphError);
    EXPECT_THROW(clawfree_engine(make_instance(path_graph(5), {0}, {4})), GraphError);
}

TEST(ReachFreeVertex, CaravanOnPath)
{
    auto g = path_graph(5);
    auto r = reach_free_vertex(g, {4}, 4, 0);
    ASSERT_TRUE(r.done());
    EXPECT_TRUE(validate_sequence(g, r.moves, {0}, Rule::ts));

    auto q = path_graph(7);
    auto two = reach_free_vertex(q, {3, 6}, 6, 0);
    if (two.done()) {
        EXPECT_TRUE(validate_sequence(q, two.moves, {0, 3}, Rule::ts));
    }
    else {
        EXPECT_TRUE(validate_sequence(q, two.moves, two.moves.final_set(), Rule::ts));
    }
}

TEST(ReachFreeVertex, RejectsBadPreconditions)
{
    auto g = path_graph(5);
    EXPECT_THROW(reach_free_vertex(g, {4}, 4, 3), GraphError);
    EXPECT_THROW(reach_free_vertex(g, {4}, 2, 0), GraphError);
}

TEST(ReachFreeVertex, LengthTwoUsesRotation)
{
    for (int kind = 1; kind <= 5; ++kind) {
        auto g = expansion_graph(kind);
        // token on v, free leaf w, blocker u on the middle vertex c
        auto r = reach_free_vertex(g, {1, 2}, 2, 3);
        bool truth = brute_ts_reachable(g, {1, 2}, {1, 3});
        if (r.done()) {
            EXPECT_TRUE(validate_sequence(g, r.moves, {1, 3}, Rule::ts));
        }
        else {
            EXPECT_FALSE(truth) << "H" << kind << ": " << r.diagnostic;
        }
    }
    auto b = blocked_h1();
    auto r = reach_free_vertex(b.graph, b.source, 2, 3);
    ASSERT_EQ(r.status, StepStatus::blocked);
    EXPECT_TRUE(never_tokens(b.graph, r.moves.final_set(), r.certificate->blocked));
}

TEST(LeftmostNeighbors, Examples)
{
    auto g = path_graph(6);
    EXPECT_TRUE(leftmost_neighbors(g, {0, 1, 2}, {5}).empty());

    auto on = leftmost_neighbors(g, {0, 1, 2, 3}, {2});
    ASSERT_EQ(on.size(), 1u);
    EXPECT_EQ(on[0].index, 1);

    // pendant tokens on consecutive path vertices come out in path order
    Graph h(9, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {8, 3}, {6, 1}, {7, 2}});
    auto three = leftmost_neighbors(h, {0, 1, 2, 3, 4, 5}, {6, 7, 8});
    ASSERT_EQ(three.size(), 3u);
    EXPECT_EQ(three[0].token, 6);
    EXPECT_EQ(three[1].token, 7);
    EXPECT_EQ(three[2].token, 8);
    EXPECT_EQ(three[0].index + 1, three[1].index);
    EXPECT_EQ(three[1].index + 1, three[2].index);
}

TEST(ClawExpansion, DetectsEachGadget)
{
    for (int kind = 1; kind <= 5; ++kind) {
        auto g = expansion_graph(kind);
        EXPECT_TRUE(is_fork_free(g));
        EXPECT_TRUE(is_prime(g)) << "H" << kind;
        auto e = detect_claw_expansion(g, PatternEmbedding{PatternKind::claw, 0, {1, 2, 3}});
        EXPECT_EQ(e.kind, kind);
        EXPECT_TRUE(detail::matches_expansion(g, e.vertices(), e.kind));
    }
}

TEST(ClawExpansion, EveryClawOfH5)
{
    auto g = expansion_graph(5);
    auto claws = enumerate_induced_claws(g);
    EXPECT_GE(claws.size(), 2u);
    for (auto & c : claws) {
        auto e = detect_claw_expansion(g, c);
        EXPECT_EQ(e.c, c.center);
        EXPECT_TRUE(detail::matches_expansion(g, e.vertices(), e.kind));
    }
}

TEST(ClawExpansion, Rejections)
{
    EXPECT_THROW(detect_claw_expansion(star(3), PatternEmbedding{PatternKind::claw, 0, {1, 2, 3}}), GraphError);
    EXPECT_THROW(detect_claw_expansion(expansion_graph(1), PatternEmbedding{PatternKind::claw, 0, {1, 2, 4}}), GraphError);
}

TEST(RotateClaw, BareGadgets)
{
    for (int kind = 1; kind <= 5; ++kind) {
        auto g = expansion_graph(kind);
        auto e = detect_claw_expansion(g, PatternEmbedding{PatternKind::claw, 0, {1, 2, 3}});
        std::vector<Vertex> leaves{e.u, e.v, e.w};
        for (auto free : leaves)
            for (auto token : leaves) {
                if (token == free)
                    continue;
                TokenSet i;
                for (auto l : leaves)
                    if (l != free)
                        i.push_back(l);
                i = normalized(i);
                auto r = rotate_claw(g, i, e, token, free);
                ASSERT_TRUE(r.done()) << "H" << kind << " " << token << " -> " << free << ": " << r.diagnostic;
                auto want = with(without(i, token), free);
                EXPECT_TRUE(validate_sequence(g, r.moves, want, Rule::ts));
                EXPECT_TRUE(brute_ts_reachable(g, i, want));
                auto roles = e.vertices();
                for (auto & mv : r.moves.moves) {
                    EXPECT_NE(std::find(roles.begin(), roles.end(), mv.from), roles.end());
                    EXPECT_NE(std::find(roles.begin(), roles.end(), mv.to), roles.end());
                }
            }
    }
}

TEST(RotateClaw, OtherTokensStay)
{
    auto b = blocked_h5();
    auto e = detect_claw_expansion(b.graph, PatternEmbedding{PatternKind::claw, 0, {1, 2, 3}});
    EXPECT_EQ(e.kind, 5);
    auto r = rotate_claw(b.graph, b.source, e, 2, 3);
    for (auto & mv : r.moves.moves)
        EXPECT_TRUE(mv.from == 1 || mv.from == 2 || mv.from == e.x || mv.from == e.y);
}

TEST(RotateClaw, BlockedFixtures)
{
    for (auto inst : {blocked_h1(), blocked_h5()}) {
        auto & g = inst.graph;
        EXPECT_TRUE(is_fork_free(g));
        EXPECT_TRUE(is_prime(g));
        auto e = detect_claw_expansion(g, PatternEmbedding{PatternKind::claw, 0, {1, 2, 3}});
        auto r = rotate_claw(g, inst.source, e, 2, 3);
        ASSERT_EQ(r.status, StepStatus::blocked);
        auto want = normalized(std::vector<Vertex>{e.c, e.x, e.y});
        EXPECT_EQ(r.certificate->blocked, want);
        EXPECT_EQ(r.certificate->source, CertificateSource::claw_rotation);
        EXPECT_TRUE(never_tokens(g, r.moves.final_set(), want));

        auto s = solve(inst);
        EXPECT_EQ(s.yes(), brute_ts_reachable(g, inst.source, inst.target));
        for (auto & c : s.stats.certificates)
            EXPECT_TRUE(never_tokens(c.graph, c.at, c.certificate.blocked));
    }
}

TEST(RotateClaw, RejectsBadTokens)
{
    auto g = expansion_graph(1);
    auto e = detect_claw_expansion(g, PatternEmbedding{PatternKind::claw, 0, {1, 2, 3}});
    EXPECT_THROW(rotate_claw(g, {1}, e, 1, 3), GraphError);
    EXPECT_THROW(rotate_claw(g, {1, 2}, e, 2, 2), GraphError);
}

TEST(AugmentingPath, Examples)
{
    auto p = find_augmenting_path(path_graph(3), {1});
    ASSERT_TRUE(p);
    EXPECT_EQ(*p, (std::vector<Vertex>{0, 1, 2}));

    EXPECT_FALSE(find_augmenting_path(path_graph(5), {0, 2, 4}));

    auto g = path_graph(6);
    EXPECT_TRUE(is_maximal_independent(g, {1, 4}));
    auto q = find_augmenting_path(g, {1, 4});
    ASSERT_TRUE(q);
    TokenSet bigger = set_minus({1, 4}, *q);
    for (std::size_t k = 0; k < q->size(); k += 2)
        bigger.push_back((*q)[k]);
    bigger = normalized(bigger);
    EXPECT_EQ(bigger.size(), 3u);
    EXPECT_TRUE(is_independent(g, bigger));
}

TEST(AugmentingPath, SwapsToLargerSets)
{
    std::mt19937_64 rng(41);
    int found = 0;
    for (int round = 0; round < 300; ++round) {
        auto g = random_forkfree(4 + round % 7, rng, 0.4).graph;
        int a = alpha(g);
        int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(a));
        auto i = random_independent_set(g, k, rng);
        if (! i)
            continue;
        auto p = find_augmenting_path(g, *i);
        if (k == a) {
            EXPECT_FALSE(p);
            continue;
        }
        if (! p)
            continue;
        ++found;
        ASSERT_EQ(p->size() % 2, 1u);
        TokenSet out = *i;
        for (std::size_t m = 1; m < p->size(); m += 2) {
            EXPECT_TRUE(contains(*i, (*p)[m]));
            out = without(out, (*p)[m]);
        }
        for (std::size_t m = 0; m < p->size(); m += 2) {
            EXPECT_FALSE(contains(*i, (*p)[m]));
            out = with(out, (*p)[m]);
        }
        EXPECT_EQ(out.size(), i->size() + 1);
        EXPECT_TRUE(is_independent(g, out));
    }
    EXPECT_GT(found, 20);
}

TEST(FreeingChain, SlidesLeaveEndFree)
{
    std::mt19937_64 rng(43);
    int found = 0;
    for (int round = 0; round < 300; ++round) {
        auto g = random_forkfree(4 + round % 7, rng, 0.4).graph;
        int a = alpha(g);
        if (a < 2)
            continue;
        auto i = random_independent_set(g, a - 1, rng);
        if (! i)
            continue;
        auto p = find_freeing_chain(g, *i);
        if (! p)
            continue;
        ++found;
        auto cur = *i;
        SlideSequence seq{cur, {}};
        for (std::size_t k = 1; k < p->size(); k += 2)
            ASSERT_TRUE(detail::try_slide(g, cur, seq, (*p)[k], (*p)[k - 1]));
        EXPECT_TRUE(validate_sequence(g, seq, cur, Rule::ts));
        EXPECT_TRUE(is_free(g, cur, p->back()));
    }
    EXPECT_GT(found, 20);
}

TEST(ResolveCycle, ReplacesCycleTokens)
{
    int done = 0, blocked = 0;
    for (int n = 4; n <= 7; ++n)
        for (auto & g : connected_forkfree_graphs(n)) {
            if (! is_prime(g))
                continue;
            int a = alpha(g);
            for (int k = 2; k < a; ++k) {
                auto sets = independent_sets(g, k);
                for (auto & i : sets)
                    for (auto & j : sets) {
                        auto diff = symmetric_difference(i, j);
                        if (diff.size() < 4)
                            continue;
                        auto h = g.induced(diff);
                        bool cycle = is_connected(h);
                        for (Vertex v = 0; v < h.size(); ++v)
                            cycle = cycle && h.degree(v) == 2;
                        if (! cycle)
                            continue;
                        if (rule_A(make_instance(g, i, j)).fired())
                            continue;
                        auto r = resolve_cycle(g, i, j, diff);
                        if (r.done()) {
                            ++done;
                            EXPECT_TRUE(validate_sequence(g, r.moves, j, Rule::ts)) << describe(g, i, j);
                        }
                        else if (r.status == StepStatus::blocked) {
                            ++blocked;
                            EXPECT_TRUE(never_tokens(g, r.moves.final_set(), r.certificate->blocked));
                        }
                        else {
                            EXPECT_TRUE(validate_sequence(g, r.moves, r.moves.final_set(), Rule::ts));
                        }
                    }
            }
        }
    EXPECT_GT(done, 100);
    EXPECT_GT(blocked, 0);
}

TEST(Solve, DifferenceShapesAfterReduction)
{
    for (int n = 3; n <= 6; ++n)
        for (auto & g : connected_forkfree_graphs(n))
            for (int k = 1; k <= std::min(3, alpha(g)); ++k) {
                auto sets = independent_sets(g, k);
                for (auto & i : sets)
                    for (auto & j : sets) {
                        auto red = reduce_to_prime(make_instance(g, i, j));
                        if (red.no_instance)
                            continue;
                        for (auto & p : red.parts)
                            for (auto & c : detail::difference_components(p.graph, p.source, p.target))
                                EXPECT_NE(c.shape, detail::DiffComponent::other) << describe(g, i, j);
                    }
            }
}

TEST(Solve, AgreesWithBruteForceUpToSix)
{
    int yes = 0, no = 0;
    for (int n = 1; n <= 6; ++n)
        for (auto & g : connected_forkfree_graphs(n))
            for (int k = 1; k <= std::min(3, alpha(g)); ++k) {
                auto classes = brute_ts_classes(g, k);
                for (auto & [i, ci] : classes)
                    for (auto & [j, cj] : classes) {
                        auto r = solve(make_instance(g, i, j), no_fallback());
                        ASSERT_NE(r.verdict, Verdict::unknown) << describe(g, i, j) << ": " << r.reason;
                        EXPECT_EQ(r.yes(), ci == cj) << describe(g, i, j);
                        (r.yes() ? yes : no) += 1;
                        for (auto & c : r.stats.certificates)
                            EXPECT_TRUE(never_tokens(c.graph, c.at, c.certificate.blocked)) << describe(g, i, j);
                    }
            }
    EXPECT_GT(yes, 1000);
    EXPECT_GT(no, 1000);
}

TEST(Solve, RandomLargerInstances)
{
    std::mt19937_64 rng(47);
    int decided = 0;
    for (int round = 0; round < 300; ++round) {
        auto g = random_forkfree(8 + round % 3, rng, 0.4).graph;
        int k = 1 + round % 3;
        auto i = random_independent_set(g, k, rng), j = random_independent_set(g, k, rng);
        if (! i || ! j)
            continue;
        auto r = solve(make_instance(g, *i, *j));
        ASSERT_NE(r.verdict, Verdict::unknown);
        EXPECT_EQ(r.yes(), brute_ts_reachable(g, *i, *j)) << describe(g, *i, *j);
        ++decided;
    }
    EXPECT_GT(decided, 250);
}
