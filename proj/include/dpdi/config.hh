#ifndef DPDI_CONFIG_HH
#define DPDI_CONFIG_HH

#include <dpdi/digraph.hh>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpdi
{
    /// (i, j): color i of the tail is matched to color j of the head.
    using ColorPair = std::pair<int, int>;

    /// Sorted list of pairs. A valid matching is injective in both coordinates.
    using Matching = std::vector<ColorPair>;

    /// Color-set sizes plus one matching per arc. Color (v, i) for
    /// i < sizes[v] is distinct from every other color by construction, so
    /// the auxiliary digraph H is never stored: it has a color-arc
    /// (u,i) -> (v,j) exactly when (i,j) is in matchings[(u,v)].
    struct Cover
    {
        std::vector<int> sizes;
        std::map<Arc, Matching> matchings;

        auto operator==(const Cover &) const -> bool = default;

        /// The matching of arc a, or an empty one.
        auto matching(const Arc & a) const -> const Matching &;
    };

    /// A connected digraph with a cover that validates against it.
    struct Configuration
    {
        Digraph digraph;
        Cover cover;

        auto operator==(const Configuration &) const -> bool = default;
    };

    /// Chosen color index per vertex; -1 marks a vertex that has been
    /// deleted (transversals of a configuration minus some vertices).
    struct Transversal
    {
        std::vector<int> choice;

        auto operator==(const Transversal &) const -> bool = default;
    };

    struct ListAssignment
    {
        std::vector<std::vector<int>> lists;
    };

    struct ColorArc
    {
        Arc arc;
        ColorPair pair;

        auto operator<=>(const ColorArc &) const = default;
    };

    /// Why a cover does not fit its digraph, or nothing if it does.
    auto cover_problem(const Digraph &, const Cover &) -> std::optional<std::string>;
    auto validate_cover(const Digraph &, const Cover &) -> bool;

    /// Throws InvalidCover unless D is connected and the cover validates.
    /// Matchings are normalized: pairs sorted and every arc given an entry.
    auto make_configuration(Digraph, Cover) -> Configuration;

    auto is_degree_feasible(const Configuration &) -> bool;

    /// All color-arcs of H in (arc, pair) order.
    auto color_arcs(const Configuration &) -> std::vector<ColorArc>;

    /// Definitional check of acyclicity: builds H[T] over the non-deleted
    /// vertices and runs a topological sort. Slow, used for certification.
    auto is_acyclic_transversal(const Configuration &, const Transversal &) -> bool;

    /// Color (v,i) stands for the i-th smallest label of L(v); arc (u,v)
    /// pairs colors carrying the same label.
    auto cover_from_lists(const Digraph &, const ListAssignment &) -> Cover;

    auto k_config(int order) -> Configuration;
    auto c_config(int length) -> Configuration;
    auto bc_config_odd(int length) -> Configuration;

    /// Bidirected even cycle; the digon between vertices 0 and 1 carries
    /// the crossed pairing in both directions.
    auto bc_config_even(int length) -> Configuration;

    /// Identifies vb of b with va of a. a keeps its labels; the other
    /// vertices of b follow in their original order. The merged vertex owns
    /// a's colors first, then b's.
    auto merge(const Configuration & a, Vertex va, const Configuration & b, Vertex vb) -> Configuration;

    /// Label of b's vertex w after merge(a, va, b, vb).
    auto merged_label(int order_a, Vertex va, Vertex vb, Vertex w) -> Vertex;

    auto delete_h_arc(const Configuration &, const Arc &, const ColorPair &) -> Configuration;

    struct ComponentConfiguration
    {
        Configuration configuration;
        std::vector<Vertex> vertices; // original label of each new vertex
    };

    /// (X,H)/v split into the weakly connected components of D - v.
    auto delete_vertex(const Configuration &, Vertex) -> std::vector<ComponentConfiguration>;

    auto is_symmetric(const Configuration &) -> bool;
    auto is_locally_symmetric(const Configuration &, Vertex) -> bool;

    /// One ascending sweep: around each vertex that is not yet locally
    /// symmetric, every incoming matching is replaced by the transpose of the
    /// matching in the other direction. Uncolorable inputs stay uncolorable.
    auto symmetrize(const Configuration &) -> Configuration;

    auto transpose(const Matching &) -> Matching;
}

#endif
