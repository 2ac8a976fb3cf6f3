#include "flat_cover.hh"

#include <algorithm>
#include <map>
#include <numeric>

using std::optional;
using std::uint64_t;
using std::vector;

namespace dpdi
{
    using innards::closes_cycle;

    namespace
    {
        auto bit(Vertex v) -> uint64_t { return uint64_t{1} << v; }

        struct PartitionSearch
        {
            const Digraph & d;
            int classes;
            uint64_t node_limit;
            uint64_t nodes = 0;
            vector<uint64_t> members;

            auto assign(Vertex v, int used) -> bool
            {
                if (v == d.order())
                    return true;
                // Classes are interchangeable: v opens at most one new class.
                for (int k = 0; k < std::min(used + 1, classes); ++k) {
                    if (++nodes > node_limit)
                        throw BudgetExceeded("partition search exceeded the node budget");
                    if (closes_cycle(d, members[k], v))
                        continue;
                    members[k] |= bit(v);
                    if (assign(v + 1, std::max(used, k + 1)))
                        return true;
                    members[k] &= ~bit(v);
                }
                return false;
            }
        };

        struct ListSearch
        {
            const Digraph & d;
            const vector<vector<int>> & lists; // dense label ids
            uint64_t node_limit;
            uint64_t nodes = 0;
            vector<uint64_t> members;
            vector<int> chosen;

            auto assign(Vertex v) -> bool
            {
                if (v == d.order())
                    return true;
                for (auto label : lists[v]) {
                    if (++nodes > node_limit)
                        throw BudgetExceeded("list coloring search exceeded the node budget");
                    if (closes_cycle(d, members[label], v))
                        continue;
                    members[label] |= bit(v);
                    chosen[v] = label;
                    if (assign(v + 1))
                        return true;
                    members[label] &= ~bit(v);
                }
                return false;
            }
        };

        // Every list system with |L(v)| = k up to renaming labels: the labels
        // new at a vertex are always the next unused ones.
        struct ListSystems
        {
            int n, k;
            vector<vector<int>> lists;

            template <typename Visit>
            auto extend(Vertex v, int used, Visit & visit) -> bool
            {
                if (v == n)
                    return visit(static_cast<const vector<vector<int>> &>(lists));
                for (int old = std::min(k, used); old >= 0; --old) {
                    vector<int> pick(old);
                    // Subsets of [0, used) of size `old` in lexicographic order.
                    std::iota(pick.begin(), pick.end(), 0);
                    while (true) {
                        auto & list = lists[v];
                        list = pick;
                        for (int f = 0; f < k - old; ++f)
                            list.push_back(used + f);
                        if (extend(v + 1, used + k - old, visit))
                            return true;
                        int i = old - 1;
                        while (i >= 0 && pick[i] == used - old + i)
                            --i;
                        if (i < 0)
                            break;
                        ++pick[i];
                        for (int j = i + 1; j < old; ++j)
                            pick[j] = pick[j - 1] + 1;
                    }
                }
                return false;
            }
        };
    }

    auto dichromatic_number(const Digraph & d, const Budget & budget) -> int
    {
        for (int k = 1; k <= d.order(); ++k) {
            PartitionSearch search{d, k, budget.nodes, 0, vector<uint64_t>(k, 0)};
            if (search.assign(0, 0))
                return k;
        }
        return 0;
    }

    auto find_list_coloring(const Digraph & d, const ListAssignment & l, const Budget & budget) -> optional<vector<int>>
    {
        if (static_cast<int>(l.lists.size()) != d.order())
            throw InvalidArgument("list assignment does not match the digraph order");

        std::map<int, int> dense;
        for (auto & list : l.lists)
            for (auto label : list)
                dense.emplace(label, 0);
        vector<int> labels;
        for (auto & [label, id] : dense) {
            id = static_cast<int>(labels.size());
            labels.push_back(label);
        }

        vector<vector<int>> lists;
        for (auto & list : l.lists) {
            vector<int> ids;
            for (auto label : list)
                ids.push_back(dense[label]);
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            lists.push_back(std::move(ids));
        }

        ListSearch search{d, lists, budget.nodes, 0, vector<uint64_t>(labels.size(), 0), vector<int>(d.order(), -1)};
        if (! search.assign(0))
            return std::nullopt;
        vector<int> result;
        for (auto id : search.chosen)
            result.push_back(labels[id]);
        return result;
    }

    auto list_chromatic_number(const Digraph & d, int max_k, const Budget & budget) -> ListChromatic
    {
        if (d.order() == 0)
            return {0, false};
        for (int k = 1; k <= max_k; ++k) {
            ListSystems systems{d.order(), k, vector<vector<int>>(d.order())};
            auto uncolorable = [&](const vector<vector<int>> & lists) {
                return ! find_list_coloring(d, ListAssignment{lists}, budget).has_value();
            };
            if (! systems.extend(0, 0, uncolorable))
                return {k, false};
        }
        return {max_k + 1, true};
    }

    auto dp_chromatic_number(const Digraph & d, const Budget & budget) -> int
    {
        if (d.order() == 0)
            return 0;
        int bound = greedy_bound(d);
        // χ ≤ χ_DP, and greedy coloring always succeeds at the bound.
        for (int k = dichromatic_number(d, budget); k < bound; ++k)
            if (dp_colorable_k(d, k, budget).colorable)
                return k;
        return bound;
    }

    auto chromatic_report(const Digraph & d, int list_max_k, const Budget & budget) -> ChromaticReport
    {
        ChromaticReport r;
        r.dichromatic = dichromatic_number(d, budget);
        if (list_max_k > 0)
            r.list = list_chromatic_number(d, list_max_k, budget);
        r.dp = dp_chromatic_number(d, budget);
        r.greedy_bound = greedy_bound(d);
        return r;
    }
}
