#include <dpdi/error.hh>
#include <dpdi/harness.hh>

#include <algorithm>
#include <numeric>

using std::vector;

namespace dpdi
{
    namespace
    {
        // perm[e][i]: color of edge e's second end matched to color i of its
        // first end. The cover is symmetric, so one table serves both arcs.
        struct IndependentSearch
        {
            int n, k;
            const vector<Edge> & edges;
            const vector<vector<int>> & perm;
            std::uint64_t node_limit;
            std::uint64_t & nodes;
            vector<int> choice;

            auto assign(int v) -> bool
            {
                if (v == n)
                    return true;
                for (int c = 0; c < k; ++c) {
                    if (++nodes > node_limit)
                        throw BudgetExceeded("undirected transversal search exceeded the node budget");
                    bool clash = false;
                    for (std::size_t e = 0; e < edges.size() && ! clash; ++e) {
                        auto [a, b] = edges[e];
                        if (a == v && b < v && perm[e][c] == choice[b])
                            clash = true;
                        if (b == v && a < v && perm[e][choice[a]] == c)
                            clash = true;
                    }
                    if (clash)
                        continue;
                    choice[v] = c;
                    if (assign(v + 1))
                        return true;
                    choice[v] = -1;
                }
                return false;
            }
        };
    }

    auto graph_dp_colorable(int n, const vector<Edge> & edges, int k, const Budget & budget) -> bool
    {
        if (k <= 0)
            return n == 0;

        // Colors at the child of a spanning-forest edge may be renamed, so
        // forest edges carry the identity.
        vector<bool> fixed(edges.size(), false);
        vector<int> root(n);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x)
                x = root[x] = root[root[x]];
            return x;
        };
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto a = find(edges[e].first), b = find(edges[e].second);
            if (a != b) {
                root[a] = b;
                fixed[e] = true;
            }
        }

        vector<vector<int>> permutations;
        vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        do
            permutations.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));

        vector<std::size_t> free;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (! fixed[e])
                free.push_back(e);

        vector<std::size_t> index(edges.size(), 0);
        vector<vector<int>> perm(edges.size(), permutations[0]);
        std::uint64_t covers = 0, nodes = 0;
        while (true) {
            if (++covers > budget.covers)
                throw BudgetExceeded("undirected cover enumeration exceeded the cover budget");
            nodes = 0;
            IndependentSearch search{n, k, edges, perm, budget.nodes, nodes, vector<int>(n, -1)};
            if (! search.assign(0))
                return false;

            auto pos = free.size();
            for (; pos > 0; --pos) {
                auto e = free[pos - 1];
                if (++index[e] < permutations.size()) {
                    perm[e] = permutations[index[e]];
                    break;
                }
                index[e] = 0;
                perm[e] = permutations[0];
            }
            if (pos == 0)
                return true;
        }
    }

    auto graph_dp_chromatic_number(int n, const vector<Edge> & edges, const Budget & budget) -> int
    {
        for (int k = 1;; ++k)
            if (graph_dp_colorable(n, edges, k, budget))
                return k;
    }
}
