#ifndef DPDI_HARNESS_HH
#define DPDI_HARNESS_HH

#include <dpdi/config.hh>
#include <dpdi/digraph.hh>
#include <dpdi/solver.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpdi
{
    struct Disagreement
    {
        std::string instance;
        std::string expected;
        std::string got;

        auto operator<=>(const Disagreement &) const = default;
    };

    struct VerificationReport
    {
        std::string suite;
        std::uint64_t instances_checked = 0;
        std::uint64_t agreements = 0;
        std::vector<Disagreement> disagreements; // sorted by instance
        double elapsed_seconds = 0.0;
        std::uint64_t budget_hits = 0;

        auto counts_add_up() const -> bool
        {
            return agreements + disagreements.size() + budget_hits == instances_checked;
        }
    };

    struct SuiteOptions
    {
        Budget budget = default_budget();
        unsigned threads = 0; // 0: one per hardware thread
    };

    /// One unit of work: returns nothing when the instance agrees, or the
    /// (expected, got) pair otherwise. Throwing BudgetExceeded counts as a
    /// budget hit.
    struct Check
    {
        std::string instance;
        std::function<std::optional<std::pair<std::string, std::string>>()> run;
    };

    /// Runs the checks on a worker pool and aggregates in instance order.
    auto run_checks(const std::string & suite, std::vector<Check> checks, unsigned threads) -> VerificationReport;

    auto verify_bricks(int max_order, int max_length, const SuiteOptions & = {}) -> VerificationReport;

    /// Connected digraphs on 2..max_n vertices.
    auto verify_characterization(int max_n, const SuiteOptions & = {}) -> VerificationReport;

    auto verify_bidirected_equivalence(int max_n, int k_max, const SuiteOptions & = {}) -> VerificationReport;

    /// Connected digraphs on 1..max_n vertices; the list chromatic number is
    /// part of the chain only up to list_max_n vertices.
    auto verify_chain(int max_n, int list_max_n = 3, const SuiteOptions & = {}) -> VerificationReport;

    /// All ordered pairs from the first max_pieces bricks of the pool
    /// K2, K3, C2, C3, C4, BC-even(4), at every pair of merge vertices.
    auto verify_merge(int max_pieces, const SuiteOptions & = {}) -> VerificationReport;

    /// Pool used by verify_merge, with display names.
    auto merge_pool() -> std::vector<std::pair<std::string, Configuration>>;

    /// DP-k-colorability of an undirected graph: every symmetric k-cover of
    /// its bidirected digraph must have an independent transversal.
    auto graph_dp_colorable(int n, const std::vector<Edge> & edges, int k, const Budget & = default_budget()) -> bool;
    auto graph_dp_chromatic_number(int n, const std::vector<Edge> & edges, const Budget & = default_budget()) -> int;

    auto format_report_text(const VerificationReport &) -> std::string;
    auto format_report_structured(const VerificationReport &) -> std::string;
}

#endif
