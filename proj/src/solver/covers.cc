#include "flat_cover.hh"

#include <algorithm>

using std::uint64_t;
using std::vector;

namespace dpdi
{
    namespace innards
    {
        namespace
        {
            void extend(int i, int tail_size, int head_size, int remaining, vector<int> & row, vector<bool> & used,
                vector<vector<int>> & out)
            {
                if (i == tail_size) {
                    if (remaining == 0)
                        out.push_back(row);
                    return;
                }
                // Not enough tail colors left to place the remaining pairs.
                if (tail_size - i < remaining)
                    return;
                for (int j = 0; j < head_size; ++j) {
                    if (used[j] || remaining == 0)
                        continue;
                    used[j] = true;
                    row[i] = j;
                    extend(i + 1, tail_size, head_size, remaining - 1, row, used, out);
                    used[j] = false;
                }
                row[i] = -1;
                extend(i + 1, tail_size, head_size, remaining, row, used, out);
            }
        }

        auto maximum_matchings(int tail_size, int head_size) -> vector<vector<int>>
        {
            vector<vector<int>> out;
            vector<int> row(tail_size, -1);
            vector<bool> used(head_size, false);
            extend(0, tail_size, head_size, std::min(tail_size, head_size), row, used, out);
            return out;
        }

        auto spanning_tree_arcs(const Digraph & d) -> vector<TreeArc>
        {
            vector<TreeArc> result(d.size());
            uint64_t seen = 0;
            for (Vertex root = 0; root < d.order(); ++root) {
                if (seen >> root & 1)
                    continue;
                seen |= uint64_t{1} << root;
                vector<Vertex> queue{root};
                for (std::size_t q = 0; q < queue.size(); ++q) {
                    Vertex p = queue[q];
                    for (auto m = d.neighbor_mask(p) & ~seen; m; m &= m - 1) {
                        Vertex c = std::countr_zero(m);
                        seen |= uint64_t{1} << c;
                        queue.push_back(c);
                        if (d.has_arc(p, c))
                            result[d.arc_index(p, c)] = {true, true};
                        else
                            result[d.arc_index(c, p)] = {true, false};
                    }
                }
            }
            return result;
        }

        auto normalized_options(const vector<vector<int>> & options, const TreeArc & tree_arc, int head_size)
            -> vector<vector<int>>
        {
            if (! tree_arc.designated)
                return options;

            // The child's colors may be relabeled freely, so only the
            // matching in which the child's matched colors appear as
            // 0, 1, 2, ... in the parent's color order survives.
            vector<vector<int>> kept;
            for (auto & row : options) {
                vector<int> child_sequence;
                if (tree_arc.child_is_head) {
                    for (auto j : row)
                        if (j >= 0)
                            child_sequence.push_back(j);
                }
                else {
                    vector<int> inverse(head_size, -1);
                    for (int i = 0; i < static_cast<int>(row.size()); ++i)
                        if (row[i] >= 0)
                            inverse[row[i]] = i;
                    for (auto i : inverse)
                        if (i >= 0)
                            child_sequence.push_back(i);
                }
                bool canonical = true;
                for (int k = 0; k < static_cast<int>(child_sequence.size()); ++k)
                    if (child_sequence[k] != k)
                        canonical = false;
                if (canonical)
                    kept.push_back(row);
            }
            return kept;
        }
    }

    using innards::FlatCover;
    using innards::TransversalSearch;

    namespace
    {
        auto search_covers(const Digraph & d, const vector<int> & sizes, const Budget & budget) -> CoverSearch
        {
            CoverSearch result;
            result.covers_checked = innards::for_each_normalized_cover(d, sizes, budget.covers,
                [&](const FlatCover & cover) {
                    TransversalSearch search(cover, 0, budget.nodes);
                    auto outcome = search.run([](const vector<int> &) { return true; });
                    if (outcome == Outcome::BudgetExceeded)
                        throw BudgetExceeded("transversal search exceeded the node budget");
                    if (outcome == Outcome::Uncolorable) {
                        result.colorable = false;
                        result.witness = Configuration{d, cover.to_cover()};
                        return true;
                    }
                    return false;
                });
            return result;
        }
    }

    auto dp_colorable_k(const Digraph & d, int k, const Budget & budget) -> CoverSearch
    {
        if (k < 0)
            throw InvalidArgument("k must be non-negative");
        return search_covers(d, vector<int>(d.order(), k), budget);
    }

    auto dp_degree_colorable_oracle(const Digraph & d, const Budget & budget) -> CoverSearch
    {
        if (! underlying_is_connected(d))
            throw InvalidArgument("degree-colorability is decided for connected digraphs");
        // An uncolorable degree-feasible cover forces |X_v| = d⁺(v) = d⁻(v).
        if (! is_eulerian(d))
            return CoverSearch{};
        auto p = degrees(d);
        vector<int> sizes;
        for (auto & deg : p.per_vertex)
            sizes.push_back(deg.out);
        return search_covers(d, sizes, budget);
    }

    auto normalized_covers(const Digraph & d, const vector<int> & sizes, const Budget & budget) -> vector<Cover>
    {
        if (static_cast<int>(sizes.size()) != d.order())
            throw InvalidArgument("one size per vertex expected");
        vector<Cover> result;
        innards::for_each_normalized_cover(d, sizes, budget.covers, [&](const FlatCover & cover) {
            result.push_back(cover.to_cover());
            return false;
        });
        return result;
    }
}
