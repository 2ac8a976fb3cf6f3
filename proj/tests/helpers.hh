#ifndef DPDI_TESTS_HELPERS_HH
#define DPDI_TESTS_HELPERS_HH

#include <dpdi/config.hh>
#include <dpdi/digraph.hh>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testing
{
    using namespace dpdi;

    inline auto digraph(int n, std::vector<Arc> arcs) -> Digraph { return build_digraph(n, std::span<const Arc>(arcs)); }

    inline auto directed_cycle(int p) -> Digraph
    {
        std::vector<Arc> arcs;
        for (int i = 0; i < p; ++i)
            arcs.push_back({i, (i + 1) % p});
        return digraph(p, arcs);
    }

    inline auto directed_path(int n) -> Digraph
    {
        std::vector<Arc> arcs;
        for (int i = 0; i + 1 < n; ++i)
            arcs.push_back({i, i + 1});
        return digraph(n, arcs);
    }

    inline auto bidirected_cycle(int p) -> Digraph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < p; ++i)
            edges.emplace_back(i, (i + 1) % p);
        return bidirect(p, edges);
    }

    inline auto bidirected_complete(int n) -> Digraph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        return bidirect(n, edges);
    }

    inline auto digon() -> Digraph { return digraph(2, {{0, 1}, {1, 0}}); }

    /// Two digons 0-1 and 1-2 sharing vertex 1.
    inline auto two_digons() -> Digraph { return digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}); }

    /// Random partial matching between [0,s) and [0,t); each tail color is
    /// matched with probability density.
    inline auto random_matching(int s, int t, double density, std::mt19937 & rng) -> Matching
    {
        std::vector<int> heads(t);
        std::iota(heads.begin(), heads.end(), 0);
        std::shuffle(heads.begin(), heads.end(), rng);
        std::bernoulli_distribution keep(density);
        Matching m;
        for (int i = 0, used = 0; i < s && used < t; ++i)
            if (keep(rng))
                m.emplace_back(i, heads[used++]);
        std::sort(m.begin(), m.end());
        return m;
    }

    inline auto random_configuration(const Digraph & d, int min_size, int max_size, double density, std::mt19937 & rng)
        -> Configuration
    {
        std::uniform_int_distribution<int> size(min_size, max_size);
        Cover c;
        for (int v = 0; v < d.order(); ++v)
            c.sizes.push_back(size(rng));
        for (auto & a : d.arcs())
            c.matchings[a] = random_matching(c.sizes[a.tail], c.sizes[a.head], density, rng);
        return make_configuration(d, std::move(c));
    }
}

#endif
