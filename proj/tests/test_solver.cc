#include "helpers.hh"
#include "oracles.hh"

#include <dpdi/error.hh>
#include <dpdi/solver.hh>

#include <doctest.h>

using namespace testing;

namespace
{
    auto all_connected(int max_n) -> std::vector<Digraph>
    {
        std::vector<Digraph> out;
        for (int n = 1; n <= max_n; ++n)
            for (auto & d : enumerate_connected_digraphs(n))
                out.push_back(d);
        return out;
    }

    auto is_dag(const Digraph & d) -> bool { return ! has_directed_cycle(d); }
}

TEST_SUITE("solver")
{
    TEST_CASE("find_acyclic_transversal examples")
    {
        CHECK(find_acyclic_transversal(c_config(3)).outcome == Outcome::Uncolorable);
        for (auto & ca : color_arcs(c_config(3))) {
            auto r = find_acyclic_transversal(delete_h_arc(c_config(3), ca.arc, ca.pair));
            REQUIRE(r.outcome == Outcome::Colorable);
            CHECK(r.transversal->choice == std::vector<int>{0, 0, 0});
        }
        auto empty = make_configuration(bidirected_complete(4), Cover{{1, 2, 1, 3}, {}});
        CHECK(find_acyclic_transversal(empty).outcome == Outcome::Colorable);
        auto zero = make_configuration(directed_path(3), Cover{{1, 0, 1}, {}});
        CHECK(find_acyclic_transversal(zero).outcome == Outcome::Uncolorable);
    }

    TEST_CASE("transversal search agrees with brute force on random covers")
    {
        std::mt19937 rng(20240611);
        for (auto & d : all_connected(4))
            for (int round = 0; round < 6; ++round) {
                auto conf = random_configuration(d, 1, 3, 0.8, rng);
                auto r = find_acyclic_transversal(conf);
                CHECK(r.exhaustive);
                CHECK((r.outcome == Outcome::Colorable) == oracle::brute_colorable(conf));
                if (r.outcome == Outcome::Colorable) {
                    CHECK(oracle::chosen_is_acyclic(conf, r.transversal->choice));
                    CHECK(is_acyclic_transversal(conf, *r.transversal));
                }
            }
    }

    TEST_CASE("budget exhaustion is an outcome of its own")
    {
        Budget tiny;
        tiny.nodes = 2;
        auto r = find_acyclic_transversal(k_config(4), tiny);
        CHECK(r.outcome == Outcome::BudgetExceeded);
        CHECK_THROWS_AS(is_colorable(k_config(4), tiny), BudgetExceeded);
        Budget few_covers;
        few_covers.covers = 3;
        CHECK_THROWS_AS(dp_colorable_k(bidirected_complete(4), 4, few_covers), BudgetExceeded);
    }

    TEST_CASE("is_minimal_uncolorable")
    {
        for (int n = 1; n <= 4; ++n)
            CHECK(is_minimal_uncolorable(k_config(n)));
        CHECK(is_minimal_uncolorable(bc_config_even(4)));
        auto padded = c_config(3);
        padded.cover.sizes[0] = 2;
        CHECK_FALSE(is_minimal_uncolorable(padded));
        CHECK(is_colorable(padded));
        CHECK(is_minimal_uncolorable(merge(c_config(2), 0, c_config(2), 0)));
    }

    TEST_CASE("minimality agrees with brute force")
    {
        std::mt19937 rng(7);
        for (auto & d : all_connected(3))
            for (int round = 0; round < 8; ++round) {
                auto conf = random_configuration(d, 1, 2, 0.9, rng);
                CHECK(is_minimal_uncolorable(conf) == oracle::brute_minimal_uncolorable(conf));
            }
        CHECK(oracle::brute_minimal_uncolorable(bc_config_even(4)));
        CHECK(oracle::brute_minimal_uncolorable(k_config(3)));
    }

    TEST_CASE("monotonicity under color-arc deletion")
    {
        std::mt19937 rng(5);
        for (auto & d : all_connected(3))
            for (int round = 0; round < 4; ++round) {
                auto conf = random_configuration(d, 1, 2, 0.9, rng);
                if (! is_colorable(conf))
                    continue;
                for (auto & ca : color_arcs(conf))
                    CHECK(is_colorable(delete_h_arc(conf, ca.arc, ca.pair)));
            }
    }

    TEST_CASE("shift")
    {
        auto c3 = c_config(3);
        Transversal t{{-1, 0, 0}};
        auto out = shift(c3, 0, t, 0, ShiftDirection::Out);
        CHECK(out.vertex == 1);
        CHECK(out.transversal.choice == std::vector<int>{0, -1, 0});
        auto in = shift(c3, 0, t, 0, ShiftDirection::In);
        CHECK(in.vertex == 2);
        CHECK(in.transversal.choice == std::vector<int>{0, 0, -1});

        auto empty = make_configuration(directed_cycle(3), Cover{{1, 1, 1}, {}});
        try {
            shift(empty, 0, t, 0, ShiftDirection::Out);
            FAIL("expected a ShiftError");
        }
        catch (const ShiftError & e) {
            CHECK(e.kind() == ShiftFailure::Undefined);
        }

        auto k3 = k_config(3);
        Transversal both{{-1, 0, 0}};
        try {
            shift(k3, 0, both, 0, ShiftDirection::Out);
            FAIL("expected a ShiftError");
        }
        catch (const ShiftError & e) {
            CHECK(e.kind() == ShiftFailure::Ambiguous);
        }
        CHECK_THROWS_AS(shift(c3, 0, Transversal{{0, 0, 0}}, 0, ShiftDirection::Out), InvalidArgument);
    }

    TEST_CASE("shift round trip on bricks")
    {
        for (auto conf : {k_config(3), k_config(4), c_config(4), bc_config_odd(5), bc_config_even(4), bc_config_even(6)})
            for (Vertex v = 0; v < conf.digraph.order(); ++v)
                for (auto & t : acyclic_transversals_without(conf, v, 20))
                    for (int x = 0; x < conf.cover.sizes[v]; ++x) {
                        auto out = shift(conf, v, t, x, ShiftDirection::Out);
                        CHECK(is_acyclic_transversal(conf, out.transversal));
                        int back_color = t.choice[out.vertex];
                        auto back = shift(conf, out.vertex, out.transversal, back_color, ShiftDirection::In);
                        CHECK(back.vertex == v);
                        CHECK(back.transversal == t);
                    }
    }

    TEST_CASE("greedy_transversal")
    {
        for (auto & d : all_connected(3)) {
            auto p = degrees(d);
            ListAssignment l;
            for (auto & deg : p.per_vertex) {
                l.lists.emplace_back(deg.out + 1);
                std::iota(l.lists.back().begin(), l.lists.back().end(), 0);
            }
            auto conf = make_configuration(d, cover_from_lists(d, l));
            std::vector<Vertex> order(d.order());
            std::iota(order.begin(), order.end(), 0);
            do {
                auto r = greedy_transversal(conf, order);
                REQUIRE(r.outcome == Outcome::Colorable);
                CHECK(oracle::chosen_is_acyclic(conf, r.transversal->choice));
                CHECK_FALSE(r.exhaustive);
            } while (std::next_permutation(order.begin(), order.end()));
        }

        auto c2 = c_config(2);
        CHECK(greedy_transversal(c2, {0, 1}).outcome == Outcome::Uncolorable);
        CHECK(find_acyclic_transversal(c2).outcome == Outcome::Uncolorable);

        auto empty = make_configuration(directed_cycle(3), Cover{{2, 2, 2}, {}});
        auto r = greedy_transversal(empty, {2, 0, 1});
        REQUIRE(r.outcome == Outcome::Colorable);
        CHECK(r.transversal->choice == std::vector<int>{0, 0, 0});
        CHECK_THROWS_AS(greedy_transversal(empty, {0, 0, 1}), InvalidArgument);
    }

    TEST_CASE("dp_colorable_k")
    {
        auto one = dp_colorable_k(digon(), 1);
        CHECK_FALSE(one.colorable);
        REQUIRE(one.witness);
        CHECK(*one.witness == c_config(2));
        CHECK(dp_colorable_k(digon(), 2).colorable);
        CHECK(normalized_covers(digon(), {2, 2}).size() == 2);

        for (auto & d : all_connected(4))
            if (is_dag(d))
                for (int k = 1; k <= 2; ++k)
                    CHECK(dp_colorable_k(d, k).colorable);

        CHECK_FALSE(dp_colorable_k(directed_path(2), 0).colorable);
        CHECK_THROWS_AS(dp_colorable_k(digon(), -1), InvalidArgument);
    }

    TEST_CASE("reduced search agrees with the unreduced oracle on two vertices")
    {
        for (auto & d : all_connected(2))
            for (int k = 0; k <= 2; ++k)
                CHECK(dp_colorable_k(d, k).colorable == oracle::unreduced_dp_colorable(d, k));
    }

    TEST_CASE("normalized covers fix one matching per tree edge")
    {
        auto covers = normalized_covers(bidirected_complete(3), {2, 2, 2});
        // 6 arcs, 2 of them pinned by the spanning tree
        CHECK(covers.size() == 16);
        for (auto & c : covers)
            for (auto & [arc, m] : c.matchings)
                CHECK(m.size() == 2);
    }

    TEST_CASE("dp_degree_colorable_oracle")
    {
        CHECK(dp_degree_colorable_oracle(directed_path(2)).colorable);
        auto dg = dp_degree_colorable_oracle(digon());
        CHECK_FALSE(dg.colorable);
        REQUIRE(dg.witness);
        CHECK(*dg.witness == c_config(2));
        CHECK_FALSE(dp_degree_colorable_oracle(bidirected_complete(3)).colorable);
        CHECK_THROWS_AS(dp_degree_colorable_oracle(build_digraph(2, {})), InvalidArgument);
    }

    TEST_CASE("dichromatic_number")
    {
        for (auto & d : all_connected(4)) {
            CHECK(dichromatic_number(d) == oracle::brute_dichromatic(d));
            if (is_dag(d))
                CHECK(dichromatic_number(d) == 1);
        }
        CHECK(dichromatic_number(directed_cycle(3)) == 2);
        for (int n = 1; n <= 5; ++n)
            CHECK(dichromatic_number(bidirected_complete(n)) == n);
    }

    TEST_CASE("find_list_coloring")
    {
        auto same = find_list_coloring(digon(), ListAssignment{{{4}, {4}}});
        CHECK_FALSE(same);
        auto apart = find_list_coloring(digon(), ListAssignment{{{4}, {9}}});
        REQUIRE(apart);
        CHECK(*apart == std::vector<int>{4, 9});
        CHECK_THROWS_AS(find_list_coloring(digon(), ListAssignment{{{1}}}), InvalidArgument);
    }

    TEST_CASE("list_chromatic_number")
    {
        CHECK(list_chromatic_number(digon(), 3).value == 2);
        CHECK(list_chromatic_number(directed_cycle(3), 3).value == 2);
        for (auto & d : all_connected(4))
            if (is_dag(d))
                CHECK(list_chromatic_number(d, 2).value == 1);
        auto capped = list_chromatic_number(bidirected_complete(3), 2);
        CHECK(capped.lower_bound_only);
        CHECK(capped.value == 3);
    }

    TEST_CASE("list chromatic numbers agree with the list-system oracle")
    {
        // Every k-list system over n*k labels, without symmetry reduction.
        for (auto & d : all_connected(3)) {
            auto l = list_chromatic_number(d, greedy_bound(d));
            REQUIRE_FALSE(l.lower_bound_only);
            for (int k = 1; k < l.value; ++k)
                CHECK_FALSE(oracle::every_list_system_colorable(d, k, d.order() * k));
            if (l.value * d.order() <= 6)
                CHECK(oracle::every_list_system_colorable(d, l.value, d.order() * l.value));
        }
    }

    TEST_CASE("dp_chromatic_number")
    {
        for (int p = 2; p <= 6; ++p)
            CHECK(dp_chromatic_number(directed_cycle(p)) == 2);
        CHECK(dp_chromatic_number(bidirected_cycle(4)) == 3);
        CHECK(dp_chromatic_number(bidirected_complete(4)) == 4);
        CHECK(dp_chromatic_number(build_digraph(1, {})) == 1);
    }

    TEST_CASE("chromatic report")
    {
        auto r = chromatic_report(digon(), 3);
        CHECK(r.dichromatic == 2);
        REQUIRE(r.list);
        CHECK(r.list->value == 2);
        CHECK(r.dp == 2);
        CHECK(r.greedy_bound == 2);
        auto arc = chromatic_report(directed_path(2), 3);
        CHECK(arc.dichromatic == 1);
        CHECK(arc.list->value == 1);
        CHECK(arc.dp == 1);
        CHECK(arc.greedy_bound == 2);
        CHECK_FALSE(chromatic_report(digon(), 0).list);
    }

    TEST_CASE("transversals of brick minus a vertex")
    {
        // Deleting any vertex of an uncolorable degree-feasible
        // configuration leaves colorable components; every color at the
        // deleted vertex then has one out- and one in-neighbor in T.
        for (auto conf : {k_config(3), k_config(4), c_config(3), bc_config_odd(5), bc_config_even(4),
                 merge(k_config(3), 1, c_config(2), 0)})
            for (Vertex v = 0; v < conf.digraph.order(); ++v) {
                for (auto & part : delete_vertex(conf, v))
                    CHECK(is_colorable(part.configuration));
                auto ts = acyclic_transversals_without(conf, v, 50);
                CHECK_FALSE(ts.empty());
                for (auto & t : ts)
                    for (int x = 0; x < conf.cover.sizes[v]; ++x) {
                        int outs = 0, ins = 0;
                        for (auto & [arc, m] : conf.cover.matchings)
                            for (auto [i, j] : m) {
                                outs += arc.tail == v && i == x && t.choice[arc.head] == j;
                                ins += arc.head == v && j == x && t.choice[arc.tail] == i;
                            }
                        CHECK(outs == 1);
                        CHECK(ins == 1);
                    }
            }
    }
}
