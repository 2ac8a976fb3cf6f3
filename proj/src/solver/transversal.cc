#include "flat_cover.hh"

#include <algorithm>
#include <cstdlib>

using std::uint64_t;
using std::vector;

namespace dpdi
{
    namespace innards
    {
        FlatCover::FlatCover(const Digraph & d, const vector<int> & s) :
            digraph(&d),
            sizes(s)
        {
            for (auto & a : d.arcs())
                forward.emplace_back(sizes[a.tail], -1);
        }

        FlatCover::FlatCover(const Configuration & conf) :
            FlatCover(conf.digraph, conf.cover.sizes)
        {
            for (auto & [arc, m] : conf.cover.matchings) {
                auto & row = forward[conf.digraph.arc_index(arc.tail, arc.head)];
                for (auto [i, j] : m)
                    row[i] = j;
            }
        }

        auto FlatCover::to_cover() const -> Cover
        {
            Cover c;
            c.sizes = sizes;
            for (int a = 0; a < digraph->size(); ++a) {
                Matching m;
                for (int i = 0; i < static_cast<int>(forward[a].size()); ++i)
                    if (forward[a][i] >= 0)
                        m.emplace_back(i, forward[a][i]);
                c.matchings.emplace(digraph->arcs()[a], std::move(m));
            }
            return c;
        }

        TransversalSearch::TransversalSearch(const FlatCover & cover, uint64_t deleted, uint64_t node_limit) :
            _cover(cover),
            _d(*cover.digraph),
            _node_limit(node_limit),
            _choice(_d.order(), -1),
            _h_out(_d.order(), 0)
        {
            auto p = degrees(_d);
            for (Vertex v = 0; v < _d.order(); ++v)
                if (! (deleted >> v & 1)) {
                    _order.push_back(v);
                    if (cover.sizes[v] == 0)
                        _empty_color_set = true;
                }
            auto weight = [&](Vertex v) { return std::max(p.per_vertex[v].out, p.per_vertex[v].in); };
            std::stable_sort(_order.begin(), _order.end(), [&](Vertex a, Vertex b) { return weight(a) > weight(b); });
        }
    }

    using innards::FlatCover;
    using innards::TransversalSearch;

    auto default_budget() -> Budget
    {
        Budget b;
        if (auto env = std::getenv("DPDI_BUDGET_NODES")) {
            char * end = nullptr;
            auto value = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && value > 0)
                b.nodes = value;
        }
        return b;
    }

    auto find_acyclic_transversal(const Configuration & conf, const Budget & budget) -> SolveResult
    {
        FlatCover cover(conf);
        TransversalSearch search(cover, 0, budget.nodes);
        SolveResult result;
        result.outcome = search.run([&](const vector<int> & choice) {
            result.transversal = Transversal{choice};
            return true;
        });
        result.nodes_expanded = search.nodes();
        return result;
    }

    auto acyclic_transversals_without(const Configuration & conf, Vertex v, std::size_t limit, const Budget & budget)
        -> vector<Transversal>
    {
        if (v < 0 || v >= conf.digraph.order())
            throw InvalidArgument("vertex out of range");
        FlatCover cover(conf);
        TransversalSearch search(cover, uint64_t{1} << v, budget.nodes);
        vector<Transversal> found;
        auto outcome = search.run([&](const vector<int> & choice) {
            found.push_back(Transversal{choice});
            return found.size() >= limit;
        });
        if (outcome == Outcome::BudgetExceeded)
            throw BudgetExceeded("transversal enumeration exceeded the node budget");
        return found;
    }

    auto is_colorable(const Configuration & conf, const Budget & budget) -> bool
    {
        auto r = find_acyclic_transversal(conf, budget);
        if (r.outcome == Outcome::BudgetExceeded)
            throw BudgetExceeded("transversal search exceeded the node budget");
        return r.outcome == Outcome::Colorable;
    }

    auto is_minimal_uncolorable(const Configuration & conf, const Budget & budget) -> bool
    {
        FlatCover cover(conf);
        auto solve = [&] {
            TransversalSearch search(cover, 0, budget.nodes);
            auto outcome = search.run([](const vector<int> &) { return true; });
            if (outcome == Outcome::BudgetExceeded)
                throw BudgetExceeded("transversal search exceeded the node budget");
            return outcome == Outcome::Colorable;
        };

        if (solve())
            return false;
        for (std::size_t a = 0; a < cover.forward.size(); ++a)
            for (auto & target : cover.forward[a]) {
                if (target < 0)
                    continue;
                auto saved = target;
                target = -1;
                bool colorable = solve();
                target = saved;
                if (! colorable)
                    return false;
            }
        return true;
    }

    auto shift(const Configuration & conf, Vertex v, const Transversal & t, int color, ShiftDirection direction)
        -> ShiftResult
    {
        auto & d = conf.digraph;
        if (v < 0 || v >= d.order() || static_cast<int>(t.choice.size()) != d.order() || t.choice[v] != -1)
            throw InvalidArgument("shift needs a transversal of the configuration minus v");
        if (color < 0 || color >= conf.cover.sizes[v])
            throw InvalidArgument("shift color out of range");

        vector<Vertex> candidates;
        if (direction == ShiftDirection::Out) {
            for (auto u : d.out_neighbors(v)) {
                auto & m = conf.cover.matching({v, u});
                if (t.choice[u] >= 0 && std::find(m.begin(), m.end(), ColorPair{color, t.choice[u]}) != m.end())
                    candidates.push_back(u);
            }
        }
        else {
            for (auto u : d.in_neighbors(v)) {
                auto & m = conf.cover.matching({u, v});
                if (t.choice[u] >= 0 && std::find(m.begin(), m.end(), ColorPair{t.choice[u], color}) != m.end())
                    candidates.push_back(u);
            }
        }

        if (candidates.empty())
            throw ShiftError(ShiftFailure::Undefined, "color has no neighbor in the transversal");
        if (candidates.size() > 1)
            throw ShiftError(ShiftFailure::Ambiguous, "color has several neighbors in the transversal");

        ShiftResult result{candidates.front(), t};
        result.transversal.choice[v] = color;
        result.transversal.choice[result.vertex] = -1;
        return result;
    }

    auto greedy_transversal(const Configuration & conf, const vector<Vertex> & order) -> SolveResult
    {
        auto & d = conf.digraph;
        vector<Vertex> sorted(order);
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
            if (sorted[i] != i || static_cast<int>(sorted.size()) != d.order())
                throw InvalidArgument("greedy order is not a permutation of the vertices");

        FlatCover cover(conf);
        SolveResult result;
        result.exhaustive = false;
        vector<int> choice(d.order(), -1);
        for (auto v : order) {
            for (int c = 0; c < cover.sizes[v] && choice[v] < 0; ++c) {
                ++result.nodes_expanded;
                bool blocked = false;
                for (auto w : d.out_neighbors(v))
                    if (choice[w] >= 0 && cover.forward[d.arc_index(v, w)][c] == choice[w])
                        blocked = true;
                if (! blocked)
                    choice[v] = c;
            }
            if (choice[v] < 0) {
                result.outcome = Outcome::Uncolorable;
                return result;
            }
        }
        result.outcome = Outcome::Colorable;
        result.transversal = Transversal{choice};
        return result;
    }
}
