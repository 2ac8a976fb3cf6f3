#ifndef DPDI_SRC_SOLVER_FLAT_COVER_HH
#define DPDI_SRC_SOLVER_FLAT_COVER_HH

#include <dpdi/config.hh>
#include <dpdi/solver.hh>

#include <bit>
#include <cstdint>
#include <vector>

namespace dpdi::innards
{
    /// Array form of a cover for the search loops: forward[a][i] is the head
    /// color matched to tail color i on arc a, or -1. Arc indices follow
    /// Digraph::arcs().
    struct FlatCover
    {
        const Digraph * digraph = nullptr;
        std::vector<int> sizes;
        std::vector<std::vector<int>> forward;

        FlatCover() = default;
        FlatCover(const Digraph & d, const std::vector<int> & s);
        explicit FlatCover(const Configuration & conf);

        auto to_cover() const -> Cover;
    };

    /// Backtracking search for acyclic transversals over the vertices not in
    /// `deleted`. The implicit H[T] lives in `h_out`, one bit row per vertex.
    class TransversalSearch
    {
    public:
        TransversalSearch(const FlatCover & cover, std::uint64_t deleted, std::uint64_t node_limit);

        /// Calls visit(choice) on each acyclic transversal until it returns
        /// true. Returns Colorable if visit stopped the search, Uncolorable
        /// when the space is exhausted, BudgetExceeded past the node limit.
        template <typename Visit>
        auto run(Visit && visit) -> Outcome;

        auto nodes() const -> std::uint64_t { return _nodes; }
        auto choice() const -> const std::vector<int> & { return _choice; }

    private:
        template <typename Visit>
        auto descend(std::size_t depth, Visit & visit) -> int;

        const FlatCover & _cover;
        const Digraph & _d;
        std::uint64_t _node_limit;
        std::uint64_t _nodes = 0;
        std::vector<Vertex> _order;
        std::vector<int> _choice;
        std::vector<std::uint64_t> _h_out;
        std::uint64_t _chosen = 0;
        bool _empty_color_set = false;
    };

    // 1: stop requested, 0: exhausted, -1: budget
    template <typename Visit>
    auto TransversalSearch::descend(std::size_t depth, Visit & visit) -> int
    {
        if (depth == _order.size())
            return visit(_choice) ? 1 : 0;

        Vertex v = _order[depth];
        std::uint64_t v_bit = std::uint64_t{1} << v;
        for (int c = 0; c < _cover.sizes[v]; ++c) {
            if (++_nodes > _node_limit)
                return -1;

            std::uint64_t out = 0, in = 0;
            for (auto m = _d.out_mask(v) & _chosen; m; m &= m - 1) {
                Vertex w = std::countr_zero(m);
                if (_cover.forward[_d.arc_index(v, w)][c] == _choice[w])
                    out |= std::uint64_t{1} << w;
            }
            for (auto m = _d.in_mask(v) & _chosen; m; m &= m - 1) {
                Vertex w = std::countr_zero(m);
                if (_cover.forward[_d.arc_index(w, v)][_choice[w]] == c)
                    in |= std::uint64_t{1} << w;
            }

            if (out && in) {
                // A cycle through v exists iff something v points at reaches
                // something pointing at v.
                std::uint64_t seen = out, frontier = out;
                bool cycle = (seen & in) != 0;
                while (frontier && ! cycle) {
                    std::uint64_t next = 0;
                    for (auto f = frontier; f; f &= f - 1)
                        next |= _h_out[std::countr_zero(f)];
                    next &= ~seen;
                    seen |= next;
                    frontier = next;
                    cycle = (seen & in) != 0;
                }
                if (cycle)
                    continue;
            }

            _choice[v] = c;
            _chosen |= v_bit;
            _h_out[v] = out;
            for (auto m = in; m; m &= m - 1)
                _h_out[std::countr_zero(m)] |= v_bit;

            int r = descend(depth + 1, visit);

            for (auto m = in; m; m &= m - 1)
                _h_out[std::countr_zero(m)] &= ~v_bit;
            _h_out[v] = 0;
            _chosen &= ~v_bit;
            _choice[v] = -1;

            if (r != 0)
                return r;
        }
        return 0;
    }

    template <typename Visit>
    auto TransversalSearch::run(Visit && visit) -> Outcome
    {
        if (_empty_color_set)
            return Outcome::Uncolorable;
        switch (descend(0, visit)) {
        case 1: return Outcome::Colorable;
        case -1: return Outcome::BudgetExceeded;
        default: return Outcome::Uncolorable;
        }
    }

    /// Options for one arc: every maximum matching between the two color
    /// sets as a forward array, in lexicographic order.
    auto maximum_matchings(int tail_size, int head_size) -> std::vector<std::vector<int>>;

    /// Spanning-tree normalization: for each tree edge one designated arc
    /// whose matching is fixed up to the relabeling of the child's colors.
    /// Returns per arc whether it is designated, and whether the child is
    /// its head.
    struct TreeArc
    {
        bool designated = false;
        bool child_is_head = false;
    };

    auto spanning_tree_arcs(const Digraph &) -> std::vector<TreeArc>;

    /// Drops options a designated arc may not take under normalization.
    auto normalized_options(const std::vector<std::vector<int>> & options, const TreeArc & tree_arc, int head_size)
        -> std::vector<std::vector<int>>;

    /// Odometer over all normalized maximum-matching covers with the given
    /// sizes. visit(const FlatCover &) returns true to stop. Returns the
    /// number of covers visited; throws BudgetExceeded past the cover limit.
    template <typename Visit>
    auto for_each_normalized_cover(const Digraph & d, const std::vector<int> & sizes, std::uint64_t cover_limit,
        Visit && visit) -> std::uint64_t;

    template <typename Visit>
    auto for_each_normalized_cover(const Digraph & d, const std::vector<int> & sizes, std::uint64_t cover_limit,
        Visit && visit) -> std::uint64_t
    {
        FlatCover cover(d, sizes);
        auto tree = spanning_tree_arcs(d);
        std::vector<std::vector<std::vector<int>>> options;
        for (int a = 0; a < d.size(); ++a) {
            auto [u, v] = d.arcs()[a];
            options.push_back(normalized_options(maximum_matchings(sizes[u], sizes[v]), tree[a], sizes[v]));
        }

        std::vector<std::size_t> at(d.size(), 0);
        for (int a = 0; a < d.size(); ++a)
            cover.forward[a] = options[a][0];

        std::uint64_t visited = 0;
        while (true) {
            if (++visited > cover_limit)
                throw BudgetExceeded("cover enumeration exceeded " + std::to_string(cover_limit) + " covers");
            if (visit(static_cast<const FlatCover &>(cover)))
                return visited;

            // Last arc turns fastest, so the first stop is the
            // lexicographically smallest cover with the property.
            int a = d.size() - 1;
            while (a >= 0 && at[a] + 1 == options[a].size()) {
                at[a] = 0;
                cover.forward[a] = options[a][0];
                --a;
            }
            if (a < 0)
                return visited;
            cover.forward[a] = options[a][++at[a]];
        }
    }

    /// 1 when the vertex `v` closes a directed cycle inside `members`
    /// (v itself not in members), over the arcs of d.
    inline auto closes_cycle(const Digraph & d, std::uint64_t members, Vertex v) -> bool
    {
        std::uint64_t targets = d.in_mask(v) & members;
        std::uint64_t seen = d.out_mask(v) & members, frontier = seen;
        if (! targets || ! seen)
            return false;
        while (frontier) {
            if (seen & targets)
                return true;
            std::uint64_t next = 0;
            for (auto f = frontier; f; f &= f - 1)
                next |= d.out_mask(std::countr_zero(f));
            next &= members & ~seen;
            seen |= next;
            frontier = next;
        }
        return (seen & targets) != 0;
    }
}

#endif
