#include <dpdi/digraph.hh>
#include <dpdi/error.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using std::string;
using std::uint32_t;
using std::vector;

namespace dpdi
{
    namespace
    {
        constexpr int max_canonical_order = 8;

        // Ordered pairs (i,j), i != j, in row-major order. Pair k of the
        // bit-string sits at position k; as an integer code pair k is bit
        // (L - 1 - k), so numeric order equals string order.
        auto pair_position(int n, Vertex i, Vertex j) -> int { return i * (n - 1) + (j < i ? j : j - 1); }

        auto pair_count(int n) -> int { return n * (n - 1); }

        struct PermutationTables
        {
            int n;
            // table[p][k] = bit index that bit k moves to under permutation p
            vector<vector<int>> table;

            explicit PermutationTables(int order) :
                n(order)
            {
                int len = pair_count(n);
                vector<Vertex> p(n);
                std::iota(p.begin(), p.end(), 0);
                do {
                    vector<int> row(len);
                    for (Vertex i = 0; i < n; ++i)
                        for (Vertex j = 0; j < n; ++j)
                            if (i != j)
                                row[len - 1 - pair_position(n, i, j)] = len - 1 - pair_position(n, p[i], p[j]);
                    table.push_back(std::move(row));
                } while (std::next_permutation(p.begin(), p.end()));
            }

            auto apply(std::size_t perm, uint32_t code) const -> uint32_t
            {
                uint32_t out = 0;
                auto & row = table[perm];
                for (auto c = code; c; c &= c - 1)
                    out |= uint32_t{1} << row[std::countr_zero(c)];
                return out;
            }
        };

        auto decode(int n, uint32_t code) -> Digraph
        {
            int len = pair_count(n);
            vector<Arc> arcs;
            for (Vertex i = 0; i < n; ++i)
                for (Vertex j = 0; j < n; ++j)
                    if (i != j && (code >> (len - 1 - pair_position(n, i, j)) & 1))
                        arcs.push_back({i, j});
            return build_digraph(n, arcs);
        }

        auto connected_code(int n, uint32_t code) -> bool
        {
            int len = pair_count(n);
            uint32_t seen = 1, frontier = 1;
            while (frontier) {
                uint32_t next = 0;
                for (auto f = frontier; f; f &= f - 1) {
                    Vertex i = std::countr_zero(f);
                    for (Vertex j = 0; j < n; ++j) {
                        if (i == j)
                            continue;
                        if ((code >> (len - 1 - pair_position(n, i, j)) & 1) ||
                            (code >> (len - 1 - pair_position(n, j, i)) & 1))
                            next |= uint32_t{1} << j;
                    }
                }
                next &= ~seen;
                seen |= next;
                frontier = next;
            }
            return seen == (uint32_t{1} << n) - 1;
        }
    }

    auto adjacency_string(const Digraph & d) -> string
    {
        int n = d.order();
        string s(pair_count(n), '0');
        for (auto [u, v] : d.arcs())
            s[pair_position(n, u, v)] = '1';
        return s;
    }

    auto canonical_string(const Digraph & d) -> string
    {
        int n = d.order();
        if (n > max_canonical_order)
            throw InvalidArgument("canonical form is only computed for order <= " + std::to_string(max_canonical_order));

        string best = adjacency_string(d);
        vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), 0);
        string candidate(best.size(), '0');
        while (std::next_permutation(p.begin(), p.end())) {
            std::fill(candidate.begin(), candidate.end(), '0');
            for (auto [u, v] : d.arcs())
                candidate[pair_position(n, p[u], p[v])] = '1';
            if (candidate < best)
                best = candidate;
        }
        return best;
    }

    auto instance_id(const Digraph & d) -> string
    {
        auto bits = d.order() <= max_canonical_order ? canonical_string(d) : adjacency_string(d);
        return std::to_string(d.order()) + ":" + bits;
    }

    auto digraph_from_instance_id(const string & id) -> Digraph
    {
        auto colon = id.find(':');
        if (colon == string::npos)
            throw InvalidArgument("instance id '" + id + "' lacks ':'");
        auto head = id.substr(0, colon);
        auto bits = id.substr(colon + 1);
        if (head.empty() || head.size() > 2 || head.find_first_not_of("0123456789") != string::npos ||
            bits.find_first_not_of("01") != string::npos)
            throw InvalidArgument("instance id '" + id + "' is malformed");
        int n = std::stoi(head);
        if (n > max_order || static_cast<int>(bits.size()) != pair_count(n))
            throw InvalidArgument("instance id '" + id + "' has the wrong length");
        vector<Arc> arcs;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j)
                if (i != j && bits[pair_position(n, i, j)] == '1')
                    arcs.push_back({i, j});
        return build_digraph(n, arcs);
    }

    auto enumerate_connected_digraphs(int n) -> vector<Digraph>
    {
        if (n < 1 || n > max_enumeration_order)
            throw InvalidArgument("enumeration order must lie in [1, " + std::to_string(max_enumeration_order) + "]");

        vector<Digraph> result;
        if (n == 1) {
            result.push_back(build_digraph(1, {}));
            return result;
        }

        PermutationTables perms(n);
        uint32_t limit = uint32_t{1} << pair_count(n);
        for (uint32_t code = 0; code < limit; ++code) {
            if (! connected_code(n, code))
                continue;
            bool minimal = true;
            // Permutation 0 is the identity.
            for (std::size_t p = 1; p < perms.table.size() && minimal; ++p)
                if (perms.apply(p, code) < code)
                    minimal = false;
            if (minimal)
                result.push_back(decode(n, code));
        }
        return result;
    }

    auto enumerate_connected_graphs(int n) -> vector<vector<Edge>>
    {
        vector<vector<Edge>> result;
        for (auto & d : enumerate_connected_digraphs(n)) {
            if (! is_bidirected(d))
                continue;
            vector<Edge> edges;
            for (auto [u, v] : d.arcs())
                if (u < v)
                    edges.emplace_back(u, v);
            result.push_back(std::move(edges));
        }
        return result;
    }
}
