#include <dpdi/config.hh>
#include <dpdi/error.hh>

using std::vector;

namespace dpdi
{
    namespace
    {
        auto identity_matching(int size) -> Matching
        {
            Matching m;
            for (int i = 0; i < size; ++i)
                m.emplace_back(i, i);
            return m;
        }

        auto bidirected_cycle(int length) -> Digraph
        {
            vector<Edge> edges;
            for (int i = 0; i < length; ++i)
                edges.emplace_back(i, (i + 1) % length);
            return bidirect(length, edges);
        }

        auto uniform_cover(const Digraph & d, int size) -> Cover
        {
            Cover c;
            c.sizes.assign(d.order(), size);
            for (auto & a : d.arcs())
                c.matchings.emplace(a, identity_matching(size));
            return c;
        }
    }

    auto k_config(int order) -> Configuration
    {
        if (order < 1)
            throw InvalidArgument("K-configuration needs order >= 1");
        vector<Arc> arcs;
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = 0; v < order; ++v)
                if (u != v)
                    arcs.push_back({u, v});
        auto d = build_digraph(order, arcs);
        auto c = uniform_cover(d, order - 1);
        return make_configuration(std::move(d), std::move(c));
    }

    auto c_config(int length) -> Configuration
    {
        if (length < 2)
            throw InvalidArgument("C-configuration needs a cycle of length >= 2");
        vector<Arc> arcs;
        for (Vertex v = 0; v < length; ++v)
            arcs.push_back({v, (v + 1) % length});
        auto d = build_digraph(length, arcs);
        auto c = uniform_cover(d, 1);
        return make_configuration(std::move(d), std::move(c));
    }

    auto bc_config_odd(int length) -> Configuration
    {
        if (length < 5 || length % 2 == 0)
            throw InvalidArgument("odd BC-configuration needs an odd length >= 5");
        auto d = bidirected_cycle(length);
        auto c = uniform_cover(d, 2);
        return make_configuration(std::move(d), std::move(c));
    }

    auto bc_config_even(int length) -> Configuration
    {
        if (length < 4 || length % 2 != 0)
            throw InvalidArgument("even BC-configuration needs an even length >= 4");
        auto d = bidirected_cycle(length);
        auto c = uniform_cover(d, 2);
        Matching crossed{{0, 1}, {1, 0}};
        c.matchings[{0, 1}] = crossed;
        c.matchings[{1, 0}] = crossed;
        return make_configuration(std::move(d), std::move(c));
    }

    auto merged_label(int order_a, Vertex va, Vertex vb, Vertex w) -> Vertex
    {
        if (w == vb)
            return va;
        return order_a + (w < vb ? w : w - 1);
    }

    auto merge(const Configuration & a, Vertex va, const Configuration & b, Vertex vb) -> Configuration
    {
        int na = a.digraph.order(), nb = b.digraph.order();
        if (va < 0 || va >= na || vb < 0 || vb >= nb)
            throw InvalidArgument("merge vertex out of range");

        auto label = [&](Vertex w) { return merged_label(na, va, vb, w); };
        int shift = a.cover.sizes[va];
        auto color = [&](Vertex w, int i) { return w == vb ? i + shift : i; };

        vector<Arc> arcs = a.digraph.arcs();
        for (auto [u, w] : b.digraph.arcs())
            arcs.push_back({label(u), label(w)});
        auto d = build_digraph(na + nb - 1, arcs);

        Cover c;
        c.sizes = a.cover.sizes;
        c.sizes.resize(na + nb - 1);
        c.sizes[va] += b.cover.sizes[vb];
        for (Vertex w = 0; w < nb; ++w)
            if (w != vb)
                c.sizes[label(w)] = b.cover.sizes[w];

        c.matchings = a.cover.matchings;
        for (auto & [arc, m] : b.cover.matchings) {
            Matching moved;
            for (auto [i, j] : m)
                moved.emplace_back(color(arc.tail, i), color(arc.head, j));
            c.matchings.emplace(Arc{label(arc.tail), label(arc.head)}, std::move(moved));
        }
        return make_configuration(std::move(d), std::move(c));
    }
}
