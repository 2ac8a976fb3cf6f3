#include "helpers.hh"
#include "oracles.hh"

#include <dpdi/error.hh>
#include <dpdi/recognizer.hh>
#include <dpdi/solver.hh>

#include <doctest.h>

using namespace testing;

TEST_SUITE("recognizer")
{
    TEST_CASE("is_dp_degree_colorable")
    {
        auto path = is_dp_degree_colorable(directed_path(3));
        CHECK(path.colorable);
        CHECK(path.non_brick_blocks == std::vector<int>{0, 1});
        CHECK_FALSE(path.bad_cover);

        auto dd = is_dp_degree_colorable(two_digons());
        CHECK_FALSE(dd.colorable);
        REQUIRE(dd.bad_cover);
        CHECK(*dd.bad_cover == merge(c_config(2), 1, c_config(2), 0));

        CHECK_FALSE(is_dp_degree_colorable(bidirected_complete(4)).colorable);
        CHECK_FALSE(is_dp_degree_colorable(build_digraph(1, {})).colorable);
        CHECK_THROWS_AS(is_dp_degree_colorable(build_digraph(2, {})), InvalidDigraph);
    }

    TEST_CASE("agreement with the exhaustive oracle")
    {
        for (int n = 1; n <= 4; ++n)
            for (auto & d : enumerate_connected_digraphs(n)) {
                auto verdict = is_dp_degree_colorable(d);
                CHECK(verdict.colorable == dp_degree_colorable_oracle(d).colorable);
                CHECK(verdict.colorable == ! verdict.non_brick_blocks.empty());
                CHECK(verdict.colorable == ! verdict.bad_cover.has_value());
                if (verdict.bad_cover) {
                    CHECK(is_degree_feasible(*verdict.bad_cover));
                    CHECK(is_minimal_uncolorable(*verdict.bad_cover));
                    auto rec = recognize_constructible(*verdict.bad_cover);
                    REQUIRE(rec);
                    for (std::size_t b = 0; b < rec.decomposition->blocks.size(); ++b)
                        CHECK(rec.decomposition->blocks[b].brick == verdict.block_tags[b]);
                }
            }
    }

    TEST_CASE("build_bad_cover")
    {
        CHECK(build_bad_cover(digon()) == c_config(2));
        CHECK(build_bad_cover(bidirected_cycle(4)) == bc_config_even(4));
        CHECK(build_bad_cover(bidirected_cycle(3)) == k_config(3));
        CHECK(build_bad_cover(bidirected_cycle(5)) == bc_config_odd(5));
        CHECK(build_bad_cover(bidirected_cycle(6)) == bc_config_even(6));
        CHECK(build_bad_cover(directed_cycle(5)) == c_config(5));
        CHECK(build_bad_cover(bidirected_complete(4)) == k_config(4));
        CHECK(build_bad_cover(build_digraph(1, {})) == k_config(1));
        CHECK_THROWS_AS(build_bad_cover(directed_path(3)), InvalidArgument);

        auto kc = build_bad_cover(merge(k_config(3), 0, c_config(3), 0).digraph);
        CHECK(kc.cover.sizes[0] == 3);
        CHECK(is_minimal_uncolorable(kc));
    }

    TEST_CASE("recognize_constructible accepts the basic families")
    {
        auto k4 = recognize_constructible(k_config(4));
        REQUIRE(k4);
        REQUIRE(k4.decomposition->blocks.size() == 1);
        auto & block = k4.decomposition->blocks[0];
        CHECK(block.kind == BlockConfigurationKind::K);
        CHECK(block.layers == std::vector<std::vector<int>>{{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}});

        auto dd = recognize_constructible(merge(c_config(2), 0, c_config(2), 0));
        REQUIRE(dd);
        REQUIRE(dd.decomposition->blocks.size() == 2);
        for (auto & b : dd.decomposition->blocks)
            CHECK(b.kind == BlockConfigurationKind::C);

        auto even = recognize_constructible(bc_config_even(4));
        REQUIRE(even);
        CHECK(even.decomposition->blocks[0].kind == BlockConfigurationKind::BCEven);
        CHECK(even.decomposition->blocks[0].twist.has_value());

        auto odd = recognize_constructible(bc_config_odd(7));
        REQUIRE(odd);
        CHECK(odd.decomposition->blocks[0].kind == BlockConfigurationKind::BCOdd);
        CHECK(recognize_constructible(k_config(1)));
        CHECK(recognize_constructible(c_config(6)));
    }

    TEST_CASE("recognize_constructible survives color relabeling")
    {
        // Swap the two colors at vertex 2 of an odd BC-configuration.
        auto conf = bc_config_odd(5);
        for (auto & [arc, m] : conf.cover.matchings) {
            for (auto & [i, j] : m) {
                if (arc.tail == 2)
                    i = 1 - i;
                if (arc.head == 2)
                    j = 1 - j;
            }
            std::sort(m.begin(), m.end());
        }
        CHECK(recognize_constructible(conf));
    }

    TEST_CASE("recognize_constructible rejections")
    {
        auto broken = c_config(3);
        broken.cover.matchings[{0, 1}] = {};
        auto r = recognize_constructible(broken);
        CHECK_FALSE(r);
        CHECK(r.reason == RejectReason::LayerNotComplete);

        auto path = make_configuration(directed_path(3), Cover{{1, 1, 1}, {{{0, 1}, {{0, 0}}}, {{1, 2}, {{0, 0}}}}});
        CHECK(recognize_constructible(path).reason == RejectReason::NonBrickBlock);

        auto flat = bc_config_even(4);
        flat.cover.matchings[{0, 1}] = {{0, 0}, {1, 1}};
        flat.cover.matchings[{1, 0}] = {{0, 0}, {1, 1}};
        CHECK(recognize_constructible(flat).reason == RejectReason::TwistCountNotOne);

        auto twisted = bc_config_odd(5);
        twisted.cover.matchings[{0, 1}] = {{0, 1}, {1, 0}};
        twisted.cover.matchings[{1, 0}] = {{0, 1}, {1, 0}};
        CHECK(recognize_constructible(twisted).reason == RejectReason::ComponentCountWrong);

        auto lopsided = bc_config_odd(5);
        lopsided.cover.matchings[{1, 0}] = {{0, 1}, {1, 0}};
        CHECK(recognize_constructible(lopsided).reason == RejectReason::LayerNotComplete);

        auto k3 = k_config(3);
        k3.cover.matchings[{0, 1}] = {{0, 1}, {1, 0}};
        CHECK(recognize_constructible(k3).reason == RejectReason::LayerNotComplete);

        auto big = c_config(3);
        big.cover.sizes[0] = 2;
        CHECK(recognize_constructible(big).reason == RejectReason::SizeMismatch);

        auto lonely = make_configuration(build_digraph(1, {}), Cover{{1}, {}});
        CHECK(recognize_constructible(lonely).reason == RejectReason::SizeMismatch);
    }

    TEST_CASE("minimal uncolorable equals constructible on small Eulerian digraphs")
    {
        for (int n = 1; n <= 3; ++n)
            for (auto & d : enumerate_connected_digraphs(n)) {
                if (! is_eulerian(d))
                    continue;
                std::vector<int> sizes;
                for (auto deg : degrees(d).per_vertex)
                    sizes.push_back(deg.out);
                for (auto & c : normalized_covers(d, sizes)) {
                    auto conf = make_configuration(d, c);
                    bool minimal = is_minimal_uncolorable(conf);
                    CHECK(minimal == oracle::brute_minimal_uncolorable(conf));
                    CHECK(minimal == static_cast<bool>(recognize_constructible(conf)));
                }
            }
    }

    TEST_CASE("brooks_gap")
    {
        CHECK(brooks_gap(directed_cycle(5)) == BrooksGap::AtBound);
        CHECK(brooks_gap(directed_path(3)) == BrooksGap::BelowBound);
        CHECK(brooks_gap(bidirected_complete(3)) == BrooksGap::AtBound);
        CHECK(brooks_gap(two_digons()) == BrooksGap::BelowBound);
        for (int n = 1; n <= 3; ++n)
            for (auto & d : enumerate_connected_digraphs(n))
                CHECK((brooks_gap(d) == BrooksGap::AtBound) == (dp_chromatic_number(d) == greedy_bound(d)));
    }

    TEST_CASE("names")
    {
        CHECK(to_string(RejectReason::TwistCountNotOne) == "TwistCountNotOne");
        CHECK(to_string(BlockConfigurationKind::BCEven) == "BC-even");
        CHECK(to_string(BrooksGap::AtBound) == "AtBound");
    }
}
