#include <dpdi/error.hh>
#include <dpdi/recognizer.hh>

#include <algorithm>
#include <numeric>

using std::string;
using std::vector;

namespace dpdi
{
    namespace
    {
        auto block_brick(const Digraph & d, const Block & b) -> BrickClass
        {
            return classify_brick(induced_subdigraph(d, b.vertices));
        }

        /// Vertices of a cycle brick in cyclic order, starting at the
        /// smallest. Directed cycles follow their arcs; bidirected ones step
        /// to the smaller neighbor first.
        auto cycle_order(const Digraph & d, const Block & b, BrickKind kind) -> vector<Vertex>
        {
            auto in_block = [&](Vertex w) { return std::binary_search(b.vertices.begin(), b.vertices.end(), w); };
            vector<Vertex> order{b.vertices.front()};
            Vertex previous = -1;
            while (order.size() < b.vertices.size()) {
                Vertex here = order.back(), next = -1;
                for (auto w : d.out_neighbors(here))
                    if (in_block(w) && w != previous && (kind == BrickKind::DirectedCycle || next < 0))
                        next = w;
                previous = here;
                order.push_back(next);
            }
            return order;
        }

        auto position_in(const vector<Vertex> & vs, Vertex v) -> int
        {
            return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        }

        auto reject(RejectReason reason, string detail) -> Recognition
        {
            Recognition r;
            r.reason = reason;
            r.detail = std::move(detail);
            return r;
        }

        auto contains(const Matching & m, int i, int j) -> bool
        {
            return std::binary_search(m.begin(), m.end(), ColorPair{i, j});
        }
    }

    auto to_string(BlockConfigurationKind k) -> string
    {
        switch (k) {
        case BlockConfigurationKind::K: return "K";
        case BlockConfigurationKind::C: return "C";
        case BlockConfigurationKind::BCOdd: return "BC-odd";
        case BlockConfigurationKind::BCEven: return "BC-even";
        }
        return "?";
    }

    auto to_string(RejectReason r) -> string
    {
        switch (r) {
        case RejectReason::None: return "None";
        case RejectReason::NonBrickBlock: return "NonBrickBlock";
        case RejectReason::SizeMismatch: return "SizeMismatch";
        case RejectReason::LayerNotComplete: return "LayerNotComplete";
        case RejectReason::TwistCountNotOne: return "TwistCountNotOne";
        case RejectReason::ComponentCountWrong: return "ComponentCountWrong";
        }
        return "?";
    }

    auto to_string(BrooksGap g) -> string { return g == BrooksGap::AtBound ? "AtBound" : "BelowBound"; }

    auto configuration_kind(const BrickClass & brick) -> BlockConfigurationKind
    {
        switch (brick.kind) {
        case BrickKind::DirectedCycle: return BlockConfigurationKind::C;
        case BrickKind::BidirectedComplete: return BlockConfigurationKind::K;
        case BrickKind::BidirectedCycle:
            return brick.size % 2 ? BlockConfigurationKind::BCOdd : BlockConfigurationKind::BCEven;
        case BrickKind::NotBrick: break;
        }
        throw InvalidArgument("a non-brick block carries no basic configuration");
    }

    auto is_dp_degree_colorable(const Digraph & d) -> DegreeColorabilityVerdict
    {
        DegreeColorabilityVerdict verdict;
        verdict.decomposition = blocks(d);
        for (int b = 0; b < static_cast<int>(verdict.decomposition.blocks.size()); ++b) {
            auto tag = block_brick(d, verdict.decomposition.blocks[b]);
            verdict.block_tags.push_back(tag);
            if (tag.kind == BrickKind::NotBrick)
                verdict.non_brick_blocks.push_back(b);
        }
        verdict.colorable = ! verdict.non_brick_blocks.empty();
        if (! verdict.colorable)
            verdict.bad_cover = build_bad_cover(d);
        return verdict;
    }

    auto build_bad_cover(const Digraph & d) -> Configuration
    {
        auto decomposition = blocks(d);
        Cover c;
        c.sizes.assign(d.order(), 0);

        for (auto & b : decomposition.blocks) {
            auto brick = block_brick(d, b);
            auto kind = configuration_kind(brick);
            int share = kind == BlockConfigurationKind::K ? brick.size - 1
                : kind == BlockConfigurationKind::C      ? 1
                                                         : 2;

            // This block's colors at v start where earlier blocks stopped.
            vector<int> base = c.sizes;
            for (auto v : b.vertices)
                c.sizes[v] += share;

            std::optional<std::pair<Vertex, Vertex>> twist;
            if (kind == BlockConfigurationKind::BCEven) {
                auto order = cycle_order(d, b, brick.kind);
                twist = std::pair{order[0], order[1]};
            }

            for (auto & a : b.arcs) {
                Matching m;
                bool crossed = twist && ((a.tail == twist->first && a.head == twist->second) ||
                                            (a.tail == twist->second && a.head == twist->first));
                for (int i = 0; i < share; ++i)
                    m.emplace_back(base[a.tail] + i, base[a.head] + (crossed ? 1 - i : i));
                c.matchings.emplace(a, std::move(m));
            }
        }
        return make_configuration(d, std::move(c));
    }

    auto recognize_constructible(const Configuration & conf) -> Recognition
    {
        auto & d = conf.digraph;
        auto & cover = conf.cover;
        auto decomposition = blocks(d);
        int n_blocks = static_cast<int>(decomposition.blocks.size());

        vector<BrickClass> bricks;
        for (int b = 0; b < n_blocks; ++b) {
            bricks.push_back(block_brick(d, decomposition.blocks[b]));
            if (bricks.back().kind == BrickKind::NotBrick)
                return reject(RejectReason::NonBrickBlock, "block " + std::to_string(b) + " is not a brick");
        }

        if (d.order() == 1) {
            if (cover.sizes[0] != 0)
                return reject(RejectReason::SizeMismatch, "a single vertex must have no colors");
            ConstructibleDecomposition result;
            result.blocks.push_back({BlockConfigurationKind::K, bricks[0], {0}, {}, std::nullopt});
            return Recognition{result, RejectReason::None, ""};
        }

        // Every color belongs to the one block whose matchings touch it.
        vector<int> arc_block(d.size(), -1);
        for (int b = 0; b < n_blocks; ++b)
            for (auto & a : decomposition.blocks[b].arcs)
                arc_block[d.arc_index(a.tail, a.head)] = b;

        vector<vector<int>> owner(d.order());
        for (Vertex v = 0; v < d.order(); ++v)
            owner[v].assign(cover.sizes[v], -1);
        auto claim = [&](Vertex v, int color, int b) {
            if (owner[v][color] >= 0 && owner[v][color] != b)
                return false;
            owner[v][color] = b;
            return true;
        };
        for (auto & [arc, m] : cover.matchings) {
            int b = arc_block[d.arc_index(arc.tail, arc.head)];
            for (auto [i, j] : m)
                if (! claim(arc.tail, i, b) || ! claim(arc.head, j, b))
                    return reject(RejectReason::SizeMismatch, "a color at arc (" + std::to_string(arc.tail) + "," +
                            std::to_string(arc.head) + ") is matched into two blocks");
        }
        for (Vertex v = 0; v < d.order(); ++v)
            for (int i = 0; i < cover.sizes[v]; ++i)
                if (owner[v][i] < 0)
                    return reject(RejectReason::SizeMismatch,
                        "color " + std::to_string(i) + " of vertex " + std::to_string(v) + " is unmatched");

        ConstructibleDecomposition result;
        for (int b = 0; b < n_blocks; ++b) {
            auto & block = decomposition.blocks[b];
            auto & brick = bricks[b];
            auto kind = configuration_kind(brick);
            int k = static_cast<int>(block.vertices.size());
            string name = "block " + std::to_string(b);

            // local[p] = colors of block vertex p that this block owns
            vector<vector<int>> local(k);
            for (int p = 0; p < k; ++p)
                for (int i = 0; i < cover.sizes[block.vertices[p]]; ++i)
                    if (owner[block.vertices[p]][i] == b)
                        local[p].push_back(i);

            int share = kind == BlockConfigurationKind::K ? k - 1 : kind == BlockConfigurationKind::C ? 1 : 2;
            for (int p = 0; p < k; ++p)
                if (static_cast<int>(local[p].size()) != share)
                    return reject(RejectReason::SizeMismatch, name + " owns " + std::to_string(local[p].size()) +
                            " colors at vertex " + std::to_string(block.vertices[p]) + ", expected " +
                            std::to_string(share));

            for (auto & a : block.arcs)
                if (static_cast<int>(cover.matching(a).size()) != share)
                    return reject(RejectReason::LayerNotComplete, name + " arc (" + std::to_string(a.tail) + "," +
                            std::to_string(a.head) + ") carries " + std::to_string(cover.matching(a).size()) +
                            " color-arcs, expected " + std::to_string(share));

            BlockLabeling labeling{kind, brick, block.vertices, {}, std::nullopt};

            if (kind == BlockConfigurationKind::C) {
                labeling.layers.push_back({});
                for (int p = 0; p < k; ++p)
                    labeling.layers[0].push_back(local[p][0]);
            }
            else if (kind == BlockConfigurationKind::K) {
                // Layer of color local[0][i]: its partner at every other
                // vertex along the arcs out of the block's first vertex.
                Vertex first = block.vertices[0];
                for (int i = 0; i < share; ++i) {
                    vector<int> layer{local[0][i]};
                    for (int p = 1; p < k; ++p) {
                        auto & m = cover.matching({first, block.vertices[p]});
                        auto it = std::find_if(
                            m.begin(), m.end(), [&](const ColorPair & pr) { return pr.first == local[0][i]; });
                        layer.push_back(it->second);
                    }
                    for (int p = 0; p < k; ++p)
                        for (int q = 0; q < k; ++q)
                            if (p != q &&
                                ! contains(cover.matching({block.vertices[p], block.vertices[q]}), layer[p], layer[q]))
                                return reject(RejectReason::LayerNotComplete,
                                    name + " layer " + std::to_string(i) + " is not a complete digraph");
                    labeling.layers.push_back(std::move(layer));
                }
            }
            else {
                for (auto & a : block.arcs)
                    if (cover.matching(a) != transpose(cover.matching({a.head, a.tail})))
                        return reject(RejectReason::LayerNotComplete, name + " digon at (" + std::to_string(a.tail) +
                                "," + std::to_string(a.head) + ") is not bidirected in H");

                auto order = cycle_order(d, block, brick.kind);
                auto follow = [&](Vertex u, Vertex v, int color) {
                    auto & m = cover.matching({u, v});
                    return std::find_if(m.begin(), m.end(), [&](const ColorPair & pr) { return pr.first == color; })
                        ->second;
                };
                vector<vector<int>> walked(2, vector<int>(k));
                for (int layer = 0; layer < 2; ++layer) {
                    int color = local[position_in(block.vertices, order[0])][layer];
                    walked[layer][position_in(block.vertices, order[0])] = color;
                    for (int s = 1; s < k; ++s) {
                        color = follow(order[s - 1], order[s], color);
                        walked[layer][position_in(block.vertices, order[s])] = color;
                    }
                }
                int start0 = walked[0][position_in(block.vertices, order[0])];
                bool two_components = follow(order[k - 1], order[0], walked[0][position_in(block.vertices, order[k - 1])]) == start0;

                if (kind == BlockConfigurationKind::BCOdd && ! two_components)
                    return reject(RejectReason::ComponentCountWrong, name + " forms one bidirected cycle in H, not two");
                if (kind == BlockConfigurationKind::BCEven && two_components)
                    return reject(RejectReason::TwistCountNotOne, name + " has an even number of crossed digons");
                labeling.layers = std::move(walked);
                if (kind == BlockConfigurationKind::BCEven)
                    labeling.twist = Arc{order[k - 1], order[0]};
            }
            result.blocks.push_back(std::move(labeling));
        }
        return Recognition{result, RejectReason::None, ""};
    }

    auto brooks_gap(const Digraph & d) -> BrooksGap
    {
        auto decomposition = blocks(d);
        if (decomposition.blocks.size() == 1 && classify_brick(d).kind != BrickKind::NotBrick)
            return BrooksGap::AtBound;
        return BrooksGap::BelowBound;
    }
}
