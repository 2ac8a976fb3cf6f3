#include <dpdi/digraph.hh>
#include <dpdi/error.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using std::string;
using std::uint64_t;
using std::vector;

namespace dpdi
{
    namespace
    {
        auto bit(Vertex v) -> uint64_t { return uint64_t{1} << v; }

        auto all_vertices(int n) -> uint64_t { return n >= 64 ? ~uint64_t{0} : bit(n) - 1; }

        auto reachable_underlying(const Digraph & d, Vertex start, uint64_t allowed) -> uint64_t
        {
            uint64_t seen = bit(start), frontier = bit(start);
            while (frontier) {
                uint64_t next = 0;
                for (auto f = frontier; f; f &= f - 1)
                    next |= d.neighbor_mask(std::countr_zero(f));
                next &= allowed & ~seen;
                seen |= next;
                frontier = next;
            }
            return seen;
        }
    }

    auto Digraph::arc_index(Vertex u, Vertex v) const -> int
    {
        if (u < 0 || v < 0 || u >= _order || v >= _order)
            return -1;
        return _index[u * _order + v];
    }

    auto to_string(const BrickClass & b) -> string
    {
        switch (b.kind) {
        case BrickKind::DirectedCycle: return "DirectedCycle(" + std::to_string(b.size) + ")";
        case BrickKind::BidirectedCycle: return "BidirectedCycle(" + std::to_string(b.size) + ")";
        case BrickKind::BidirectedComplete: return "BidirectedComplete(" + std::to_string(b.size) + ")";
        case BrickKind::NotBrick: return "NotBrick";
        }
        return "NotBrick";
    }

    auto build_digraph(int n, std::span<const Arc> arcs) -> Digraph
    {
        if (n < 0 || n > max_order)
            throw InvalidDigraph("order " + std::to_string(n) + " outside [0, " + std::to_string(max_order) + "]");

        Digraph d;
        d._order = n;
        for (auto & a : arcs) {
            if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
                throw InvalidDigraph("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                    ") has an endpoint out of range");
            if (a.tail == a.head)
                throw InvalidDigraph("loop at vertex " + std::to_string(a.tail));
            d._arcs.push_back(a);
        }
        std::sort(d._arcs.begin(), d._arcs.end());
        d._arcs.erase(std::unique(d._arcs.begin(), d._arcs.end()), d._arcs.end());

        d._out.assign(n, {});
        d._in.assign(n, {});
        d._out_mask.assign(n, 0);
        d._in_mask.assign(n, 0);
        d._index.assign(n * n, -1);
        for (int i = 0; i < d.size(); ++i) {
            auto [u, v] = d._arcs[i];
            d._out[u].push_back(v);
            d._in[v].push_back(u);
            d._out_mask[u] |= bit(v);
            d._in_mask[v] |= bit(u);
            d._index[u * n + v] = i;
        }
        for (auto & in : d._in)
            std::sort(in.begin(), in.end());
        return d;
    }

    auto build_digraph(int n, std::initializer_list<Arc> arcs) -> Digraph
    {
        return build_digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
    }

    auto degrees(const Digraph & d) -> DegreeProfile
    {
        DegreeProfile result;
        result.per_vertex.resize(d.order());
        for (Vertex v = 0; v < d.order(); ++v) {
            auto & deg = result.per_vertex[v];
            deg.out = static_cast<int>(d.out_neighbors(v).size());
            deg.in = static_cast<int>(d.in_neighbors(v).size());
            result.max_out = std::max(result.max_out, deg.out);
            result.max_in = std::max(result.max_in, deg.in);
        }
        return result;
    }

    auto is_eulerian(const Digraph & d) -> bool
    {
        for (Vertex v = 0; v < d.order(); ++v)
            if (std::popcount(d.out_mask(v)) != std::popcount(d.in_mask(v)))
                return false;
        return true;
    }

    auto is_bidirected(const Digraph & d) -> bool
    {
        for (Vertex v = 0; v < d.order(); ++v)
            if (d.out_mask(v) != d.in_mask(v))
                return false;
        return true;
    }

    auto underlying_is_connected(const Digraph & d) -> bool
    {
        if (d.order() == 0)
            return false;
        return reachable_underlying(d, 0, all_vertices(d.order())) == all_vertices(d.order());
    }

    auto has_directed_cycle(const Digraph & d) -> bool
    {
        // Kahn: a cycle exists iff some vertex never reaches in-degree zero.
        vector<int> in(d.order());
        for (Vertex v = 0; v < d.order(); ++v)
            in[v] = static_cast<int>(d.in_neighbors(v).size());
        vector<Vertex> ready;
        for (Vertex v = 0; v < d.order(); ++v)
            if (in[v] == 0)
                ready.push_back(v);
        int removed = 0;
        while (! ready.empty()) {
            auto v = ready.back();
            ready.pop_back();
            ++removed;
            for (auto w : d.out_neighbors(v))
                if (--in[w] == 0)
                    ready.push_back(w);
        }
        return removed != d.order();
    }

    auto greedy_bound(const Digraph & d) -> int
    {
        auto p = degrees(d);
        return std::max(p.max_out, p.max_in) + 1;
    }

    auto is_complete_digraph(const Digraph & d) -> bool
    {
        return d.size() == d.order() * (d.order() - 1);
    }

    auto classify_brick(const Digraph & d) -> BrickClass
    {
        if (! underlying_is_connected(d))
            throw InvalidDigraph("classify_brick needs a connected digraph");

        int n = d.order();
        if (n == 1)
            return {BrickKind::BidirectedComplete, 1};

        bool unit_degrees = true;
        for (Vertex v = 0; v < n; ++v)
            if (std::popcount(d.out_mask(v)) != 1 || std::popcount(d.in_mask(v)) != 1)
                unit_degrees = false;
        // Connected and 1-in 1-out everywhere means a single directed cycle.
        if (unit_degrees)
            return {BrickKind::DirectedCycle, n};

        if (! is_bidirected(d))
            return {BrickKind::NotBrick, 0};
        if (is_complete_digraph(d))
            return {BrickKind::BidirectedComplete, n};

        for (Vertex v = 0; v < n; ++v)
            if (std::popcount(d.out_mask(v)) != 2)
                return {BrickKind::NotBrick, 0};
        return {BrickKind::BidirectedCycle, n};
    }

    auto bidirect(int n, std::span<const Edge> edges) -> Digraph
    {
        vector<Arc> arcs;
        for (auto [u, v] : edges) {
            if (u == v)
                throw InvalidDigraph("loop at vertex " + std::to_string(u));
            arcs.push_back({u, v});
            arcs.push_back({v, u});
        }
        return build_digraph(n, arcs);
    }

    auto induced_subdigraph(const Digraph & d, std::span<const Vertex> vertices) -> Digraph
    {
        vector<int> position(d.order(), -1);
        for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
            position[vertices[i]] = i;
        vector<Arc> arcs;
        for (auto [u, v] : d.arcs())
            if (position[u] >= 0 && position[v] >= 0)
                arcs.push_back({position[u], position[v]});
        return build_digraph(static_cast<int>(vertices.size()), arcs);
    }

    auto components_without(const Digraph & d, Vertex removed) -> vector<vector<Vertex>>
    {
        vector<vector<Vertex>> result;
        uint64_t remaining = all_vertices(d.order()) & ~bit(removed);
        while (remaining) {
            auto start = std::countr_zero(remaining);
            auto comp = reachable_underlying(d, start, remaining);
            remaining &= ~comp;
            vector<Vertex> members;
            for (auto c = comp; c; c &= c - 1)
                members.push_back(std::countr_zero(c));
            result.push_back(std::move(members));
        }
        return result;
    }
}
