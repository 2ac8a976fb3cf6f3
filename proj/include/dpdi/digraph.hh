#ifndef DPDI_DIGRAPH_HH
#define DPDI_DIGRAPH_HH

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dpdi
{
    using Vertex = int;

    /// Largest order any digraph may have; adjacency rows are 64-bit masks.
    inline constexpr int max_order = 64;

    struct Arc
    {
        Vertex tail = 0;
        Vertex head = 0;

        auto operator<=>(const Arc &) const = default;
    };

    using Edge = std::pair<Vertex, Vertex>;

    /// Loop-free digraph without parallel arcs on vertices 0..n-1. Opposite
    /// arcs are allowed. Immutable once built.
    class Digraph
    {
    public:
        Digraph() = default;

        auto order() const -> int { return _order; }
        auto size() const -> int { return static_cast<int>(_arcs.size()); }

        /// Arcs in ascending (tail, head) order.
        auto arcs() const -> const std::vector<Arc> & { return _arcs; }

        auto has_arc(Vertex u, Vertex v) const -> bool { return arc_index(u, v) >= 0; }

        /// Position of (u,v) in arcs(), or -1.
        auto arc_index(Vertex u, Vertex v) const -> int;

        auto out_neighbors(Vertex v) const -> const std::vector<Vertex> & { return _out[v]; }
        auto in_neighbors(Vertex v) const -> const std::vector<Vertex> & { return _in[v]; }

        auto out_mask(Vertex v) const -> std::uint64_t { return _out_mask[v]; }
        auto in_mask(Vertex v) const -> std::uint64_t { return _in_mask[v]; }

        /// Union of in- and out-neighbors, i.e. the underlying graph.
        auto neighbor_mask(Vertex v) const -> std::uint64_t { return _out_mask[v] | _in_mask[v]; }

        auto operator==(const Digraph & other) const -> bool
        {
            return _order == other._order && _arcs == other._arcs;
        }

    private:
        friend auto build_digraph(int n, std::span<const Arc> arcs) -> Digraph;

        int _order = 0;
        std::vector<Arc> _arcs;
        std::vector<std::vector<Vertex>> _out, _in;
        std::vector<std::uint64_t> _out_mask, _in_mask;
        std::vector<int> _index;
    };

    struct Degrees
    {
        int out = 0;
        int in = 0;

        auto operator<=>(const Degrees &) const = default;
    };

    struct DegreeProfile
    {
        std::vector<Degrees> per_vertex;
        int max_out = 0;
        int max_in = 0;
    };

    struct Block
    {
        std::vector<Vertex> vertices; // ascending
        std::vector<Arc> arcs;        // ascending, in the host's labels
    };

    struct BlockDecomposition
    {
        std::vector<Block> blocks;
        std::vector<Vertex> cut_vertices;
    };

    enum class BrickKind
    {
        DirectedCycle,
        BidirectedCycle,
        BidirectedComplete,
        NotBrick
    };

    struct BrickClass
    {
        BrickKind kind = BrickKind::NotBrick;
        int size = 0; // cycle length or complete order; 0 for NotBrick

        auto operator==(const BrickClass &) const -> bool = default;
    };

    auto to_string(const BrickClass &) -> std::string;

    /// Throws InvalidDigraph on a loop, an out-of-range endpoint, or n outside
    /// [0, max_order]. Duplicate arcs collapse.
    auto build_digraph(int n, std::span<const Arc> arcs) -> Digraph;
    auto build_digraph(int n, std::initializer_list<Arc> arcs) -> Digraph;

    auto degrees(const Digraph &) -> DegreeProfile;
    auto is_eulerian(const Digraph &) -> bool;
    auto is_bidirected(const Digraph &) -> bool;
    auto underlying_is_connected(const Digraph &) -> bool;
    auto has_directed_cycle(const Digraph &) -> bool;

    /// max{Δ⁺, Δ⁻} + 1, the bound reached by greedy coloring.
    auto greedy_bound(const Digraph &) -> int;

    /// Blocks of the underlying graph, each carrying all arcs between its
    /// vertices. Throws InvalidDigraph when D is not connected.
    auto blocks(const Digraph &) -> BlockDecomposition;

    /// Throws InvalidDigraph when D is not connected. A digon is reported as
    /// DirectedCycle(2).
    auto classify_brick(const Digraph &) -> BrickClass;
    auto is_complete_digraph(const Digraph &) -> bool;

    auto bidirect(int n, std::span<const Edge> edges) -> Digraph;

    /// D[vertices], relabeled so that vertices[i] becomes i.
    auto induced_subdigraph(const Digraph &, std::span<const Vertex> vertices) -> Digraph;

    /// Vertex sets of the weakly connected components of D - removed, each
    /// ascending, ordered by smallest member.
    auto components_without(const Digraph &, Vertex removed) -> std::vector<std::vector<Vertex>>;

    /// Adjacency bit-string over ordered pairs (i,j), i != j, row-major.
    auto adjacency_string(const Digraph &) -> std::string;

    /// Minimum adjacency bit-string over all relabelings (order <= 8).
    auto canonical_string(const Digraph &) -> std::string;

    /// "n:bits" with the canonical bit-string; used as a replayable instance id.
    auto instance_id(const Digraph &) -> std::string;

    /// Parses an instance id back into the digraph it names.
    auto digraph_from_instance_id(const std::string &) -> Digraph;

    inline constexpr int max_enumeration_order = 5;

    /// One representative per isomorphism class of connected digraphs on n
    /// vertices, in ascending canonical-string order. The representative is
    /// the canonical labeling.
    auto enumerate_connected_digraphs(int n) -> std::vector<Digraph>;

    /// All connected simple undirected graphs on n <= 5 vertices up to
    /// isomorphism, as edge lists.
    auto enumerate_connected_graphs(int n) -> std::vector<std::vector<Edge>>;
}

#endif
