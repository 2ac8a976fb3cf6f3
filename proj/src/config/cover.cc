#include <dpdi/config.hh>
#include <dpdi/error.hh>

#include <algorithm>

using std::optional;
using std::string;
using std::vector;

namespace dpdi
{
    auto Cover::matching(const Arc & a) const -> const Matching &
    {
        static const Matching empty;
        auto it = matchings.find(a);
        return it == matchings.end() ? empty : it->second;
    }

    auto cover_problem(const Digraph & d, const Cover & c) -> optional<string>
    {
        if (static_cast<int>(c.sizes.size()) != d.order())
            return "cover has " + std::to_string(c.sizes.size()) + " sizes for " + std::to_string(d.order()) +
                " vertices";
        for (Vertex v = 0; v < d.order(); ++v)
            if (c.sizes[v] < 0)
                return "negative size at vertex " + std::to_string(v);

        for (auto & [arc, m] : c.matchings) {
            auto name = "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")";
            if (! d.has_arc(arc.tail, arc.head))
                return "matching attached to non-arc " + name;
            vector<bool> tail_used(c.sizes[arc.tail]), head_used(c.sizes[arc.head]);
            for (auto [i, j] : m) {
                if (i < 0 || i >= c.sizes[arc.tail] || j < 0 || j >= c.sizes[arc.head])
                    return "pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range on " + name;
                if (tail_used[i] || head_used[j])
                    return "matching on " + name + " is not injective";
                tail_used[i] = head_used[j] = true;
            }
        }
        return std::nullopt;
    }

    auto validate_cover(const Digraph & d, const Cover & c) -> bool { return ! cover_problem(d, c); }

    auto make_configuration(Digraph d, Cover c) -> Configuration
    {
        if (! underlying_is_connected(d))
            throw InvalidCover("configuration digraph is not connected");
        if (auto problem = cover_problem(d, c))
            throw InvalidCover(*problem);
        for (auto & a : d.arcs())
            c.matchings.try_emplace(a);
        for (auto & [_, m] : c.matchings)
            std::sort(m.begin(), m.end());
        return Configuration{std::move(d), std::move(c)};
    }

    auto is_degree_feasible(const Configuration & conf) -> bool
    {
        auto p = degrees(conf.digraph);
        for (Vertex v = 0; v < conf.digraph.order(); ++v)
            if (conf.cover.sizes[v] < std::max(p.per_vertex[v].out, p.per_vertex[v].in))
                return false;
        return true;
    }

    auto color_arcs(const Configuration & conf) -> vector<ColorArc>
    {
        vector<ColorArc> result;
        for (auto & [arc, m] : conf.cover.matchings)
            for (auto & p : m)
                result.push_back({arc, p});
        return result;
    }

    auto is_acyclic_transversal(const Configuration & conf, const Transversal & t) -> bool
    {
        int n = conf.digraph.order();
        if (static_cast<int>(t.choice.size()) != n)
            return false;
        for (Vertex v = 0; v < n; ++v)
            if (t.choice[v] < -1 || t.choice[v] >= conf.cover.sizes[v])
                return false;

        vector<vector<Vertex>> out(n);
        vector<int> in_degree(n, 0);
        for (auto & [arc, m] : conf.cover.matchings) {
            auto ci = t.choice[arc.tail], cj = t.choice[arc.head];
            if (ci < 0 || cj < 0)
                continue;
            if (std::find(m.begin(), m.end(), ColorPair{ci, cj}) != m.end()) {
                out[arc.tail].push_back(arc.head);
                ++in_degree[arc.head];
            }
        }

        vector<Vertex> ready;
        int live = 0;
        for (Vertex v = 0; v < n; ++v)
            if (t.choice[v] >= 0) {
                ++live;
                if (in_degree[v] == 0)
                    ready.push_back(v);
            }
        int removed = 0;
        while (! ready.empty()) {
            auto v = ready.back();
            ready.pop_back();
            ++removed;
            for (auto w : out[v])
                if (--in_degree[w] == 0)
                    ready.push_back(w);
        }
        return removed == live;
    }

    auto cover_from_lists(const Digraph & d, const ListAssignment & l) -> Cover
    {
        if (static_cast<int>(l.lists.size()) != d.order())
            throw InvalidArgument("list assignment does not match the digraph order");

        vector<vector<int>> sorted(l.lists);
        for (auto & list : sorted) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }

        Cover c;
        for (auto & list : sorted)
            c.sizes.push_back(static_cast<int>(list.size()));
        for (auto & a : d.arcs()) {
            Matching m;
            auto & from = sorted[a.tail];
            auto & to = sorted[a.head];
            for (int i = 0; i < static_cast<int>(from.size()); ++i) {
                auto it = std::lower_bound(to.begin(), to.end(), from[i]);
                if (it != to.end() && *it == from[i])
                    m.emplace_back(i, static_cast<int>(it - to.begin()));
            }
            c.matchings.emplace(a, std::move(m));
        }
        return c;
    }

    auto delete_h_arc(const Configuration & conf, const Arc & arc, const ColorPair & pair) -> Configuration
    {
        auto result = conf;
        auto it = result.cover.matchings.find(arc);
        if (it == result.cover.matchings.end())
            throw InvalidArgument("no matching on the given arc");
        auto & m = it->second;
        auto p = std::find(m.begin(), m.end(), pair);
        if (p == m.end())
            throw InvalidArgument("color-arc (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                ") is not present");
        m.erase(p);
        return result;
    }

    auto delete_vertex(const Configuration & conf, Vertex v) -> vector<ComponentConfiguration>
    {
        auto & d = conf.digraph;
        if (v < 0 || v >= d.order())
            throw InvalidArgument("vertex out of range");
        if (d.order() < 2)
            throw InvalidArgument("cannot delete the only vertex of a configuration");

        vector<ComponentConfiguration> result;
        for (auto & members : components_without(d, v)) {
            vector<int> position(d.order(), -1);
            for (int i = 0; i < static_cast<int>(members.size()); ++i)
                position[members[i]] = i;

            Cover c;
            for (auto w : members)
                c.sizes.push_back(conf.cover.sizes[w]);
            for (auto & [arc, m] : conf.cover.matchings)
                if (position[arc.tail] >= 0 && position[arc.head] >= 0)
                    c.matchings.emplace(Arc{position[arc.tail], position[arc.head]}, m);

            result.push_back({make_configuration(induced_subdigraph(d, members), std::move(c)), members});
        }
        return result;
    }

    auto transpose(const Matching & m) -> Matching
    {
        Matching t;
        for (auto [i, j] : m)
            t.emplace_back(j, i);
        std::sort(t.begin(), t.end());
        return t;
    }
}
