#include <dpdi/digraph.hh>
#include <dpdi/error.hh>

#include <algorithm>
#include <bit>

using std::vector;

namespace dpdi
{
    namespace
    {
        // Hopcroft-Tarjan low-point search over the underlying graph. Each
        // underlying edge is pushed once; a block is popped whenever a child's
        // low point does not climb above its parent.
        struct LowPoint
        {
            const Digraph & d;
            vector<int> discovered, low;
            vector<Edge> stack;
            vector<vector<Edge>> components;
            int time = 0;

            explicit LowPoint(const Digraph & g) :
                d(g),
                discovered(g.order(), -1),
                low(g.order(), 0)
            {
            }

            void visit(Vertex v, Vertex parent)
            {
                discovered[v] = low[v] = time++;
                for (auto m = d.neighbor_mask(v); m; m &= m - 1) {
                    Vertex w = std::countr_zero(m);
                    if (w == parent)
                        continue;
                    if (discovered[w] < 0) {
                        stack.emplace_back(v, w);
                        visit(w, v);
                        low[v] = std::min(low[v], low[w]);
                        if (low[w] >= discovered[v]) {
                            vector<Edge> component;
                            Edge e;
                            do {
                                e = stack.back();
                                stack.pop_back();
                                component.push_back(e);
                            } while (e != Edge{v, w});
                            components.push_back(std::move(component));
                        }
                    }
                    else if (discovered[w] < discovered[v]) {
                        stack.emplace_back(v, w);
                        low[v] = std::min(low[v], discovered[w]);
                    }
                }
            }
        };
    }

    auto blocks(const Digraph & d) -> BlockDecomposition
    {
        if (! underlying_is_connected(d))
            throw InvalidDigraph("block decomposition needs a connected digraph");

        BlockDecomposition result;
        if (d.order() == 1) {
            result.blocks.push_back({{0}, {}});
            return result;
        }

        LowPoint search(d);
        search.visit(0, -1);

        for (auto & component : search.components) {
            std::uint64_t members = 0;
            for (auto [u, v] : component)
                members |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            Block b;
            for (auto m = members; m; m &= m - 1)
                b.vertices.push_back(std::countr_zero(m));
            for (auto & a : d.arcs())
                if ((members >> a.tail & 1) && (members >> a.head & 1))
                    b.arcs.push_back(a);
            result.blocks.push_back(std::move(b));
        }

        // Deterministic order: by smallest vertex, then by the vertex list.
        std::sort(result.blocks.begin(), result.blocks.end(),
            [](const Block & a, const Block & b) { return a.vertices < b.vertices; });

        vector<int> membership(d.order(), 0);
        for (auto & b : result.blocks)
            for (auto v : b.vertices)
                ++membership[v];
        for (Vertex v = 0; v < d.order(); ++v)
            if (membership[v] >= 2)
                result.cut_vertices.push_back(v);
        return result;
    }
}
