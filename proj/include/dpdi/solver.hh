#ifndef DPDI_SOLVER_HH
#define DPDI_SOLVER_HH

#include <dpdi/config.hh>
#include <dpdi/error.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace dpdi
{
    struct Budget
    {
        std::uint64_t nodes = 100'000'000;  // search nodes per solve
        std::uint64_t covers = 10'000'000;  // covers per enumeration
    };

    /// Default budget, with DPDI_BUDGET_NODES overriding the node limit.
    auto default_budget() -> Budget;

    class BudgetExceeded : public Error
    {
    public:
        using Error::Error;
    };

    enum class Outcome
    {
        Colorable,
        Uncolorable,
        BudgetExceeded
    };

    struct SolveResult
    {
        Outcome outcome = Outcome::Uncolorable;
        std::optional<Transversal> transversal;
        std::uint64_t nodes_expanded = 0;
        // false for greedy runs: an Uncolorable verdict then proves nothing
        bool exhaustive = true;
    };

    /// Complete backtracking search; an Uncolorable result is a proof.
    auto find_acyclic_transversal(const Configuration &, const Budget & = default_budget()) -> SolveResult;

    /// Every acyclic transversal of (X,H)/v, at most `limit` of them, with
    /// choice[v] = -1. Throws BudgetExceeded.
    auto acyclic_transversals_without(const Configuration &, Vertex v, std::size_t limit,
        const Budget & = default_budget()) -> std::vector<Transversal>;

    /// Throws BudgetExceeded.
    auto is_colorable(const Configuration &, const Budget & = default_budget()) -> bool;

    /// Uncolorable, and colorable after deleting any single color-arc.
    /// Throws BudgetExceeded.
    auto is_minimal_uncolorable(const Configuration &, const Budget & = default_budget()) -> bool;

    enum class ShiftDirection
    {
        Out,
        In
    };

    struct ShiftResult
    {
        Vertex vertex;
        Transversal transversal;
    };

    /// t is a transversal of (X,H)/v (t.choice[v] == -1). Moves the unique
    /// out- (or in-) neighbor of color x in t onto x. Throws ShiftError when
    /// x has no such neighbor or several.
    auto shift(const Configuration &, Vertex v, const Transversal & t, int color, ShiftDirection) -> ShiftResult;

    /// Sequential coloring: each vertex in `order` takes its smallest color
    /// with no color-arc into an already chosen color. Succeeds whenever
    /// |X_v| > d⁺(v) everywhere. Not exhaustive.
    auto greedy_transversal(const Configuration &, const std::vector<Vertex> & order) -> SolveResult;

    struct CoverSearch
    {
        bool colorable = true;
        std::optional<Configuration> witness; // an uncolorable cover when !colorable
        std::uint64_t covers_checked = 0;
    };

    /// Every k-cover of D has an acyclic transversal. Only covers with
    /// |X_v| = k and maximum matchings on every arc are enumerated, with the
    /// matching on one arc per spanning-tree edge normalized. The witness is
    /// the first uncolorable cover in enumeration order. Throws
    /// BudgetExceeded.
    auto dp_colorable_k(const Digraph &, int k, const Budget & = default_budget()) -> CoverSearch;

    /// Brute-force DP-degree-colorability: non-Eulerian digraphs are
    /// colorable outright, otherwise covers with |X_v| = d⁺(v) = d⁻(v) are
    /// enumerated as in dp_colorable_k.
    auto dp_degree_colorable_oracle(const Digraph &, const Budget & = default_budget()) -> CoverSearch;

    /// All normalized maximum-matching covers of D with the given sizes, in
    /// enumeration order. Throws BudgetExceeded past budget.covers.
    auto normalized_covers(const Digraph &, const std::vector<int> & sizes, const Budget & = default_budget())
        -> std::vector<Cover>;

    auto dichromatic_number(const Digraph &, const Budget & = default_budget()) -> int;

    /// An L-coloring (one label per vertex, no monochromatic directed
    /// cycle), or nothing.
    auto find_list_coloring(const Digraph &, const ListAssignment &, const Budget & = default_budget())
        -> std::optional<std::vector<int>>;

    struct ListChromatic
    {
        int value = 0;
        bool lower_bound_only = false; // value = max_k + 1 and still unresolved
    };

    auto list_chromatic_number(const Digraph &, int max_k, const Budget & = default_budget()) -> ListChromatic;

    auto dp_chromatic_number(const Digraph &, const Budget & = default_budget()) -> int;

    struct ChromaticReport
    {
        int dichromatic = 0;
        std::optional<ListChromatic> list;
        int dp = 0;
        int greedy_bound = 0;
    };

    /// list_max_k == 0 skips the list-chromatic number.
    auto chromatic_report(const Digraph &, int list_max_k, const Budget & = default_budget()) -> ChromaticReport;
}

#endif
