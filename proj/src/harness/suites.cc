#include <dpdi/error.hh>
#include <dpdi/harness.hh>
#include <dpdi/recognizer.hh>

#include <sstream>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace dpdi
{
    namespace
    {
        using Mismatch = optional<pair<string, string>>;

        auto yes_no(bool b, const char * yes, const char * no) -> string { return b ? yes : no; }

        auto brick_check(string name, Configuration conf, const Budget & budget) -> Check
        {
            return {name, [conf = std::move(conf), budget]() -> Mismatch {
                        if (! is_degree_feasible(conf))
                            return pair{"degree-feasible", "not degree-feasible"};
                        if (! is_minimal_uncolorable(conf, budget))
                            return pair{"minimal uncolorable",
                                is_colorable(conf, budget) ? "colorable" : "uncolorable, not minimal"};
                        return std::nullopt;
                    }};
        }

        auto name_of(const string & family, int n) -> string { return family + "(" + std::to_string(n) + ")"; }

        /// Size-degree equality and an Eulerian host, required of every
        /// uncolorable degree-feasible configuration.
        auto tight_sizes(const Configuration & conf) -> bool
        {
            auto p = degrees(conf.digraph);
            for (Vertex v = 0; v < conf.digraph.order(); ++v)
                if (conf.cover.sizes[v] != p.per_vertex[v].out || conf.cover.sizes[v] != p.per_vertex[v].in)
                    return false;
            return is_eulerian(conf.digraph);
        }

        auto chain_string(int chi, optional<int> list, int dp, int bound) -> string
        {
            std::ostringstream s;
            s << '(' << chi << ',';
            if (list)
                s << *list;
            else
                s << '-';
            s << ',' << dp << ',' << bound << ')';
            return s.str();
        }
    }

    auto verify_bricks(int max_order, int max_length, const SuiteOptions & options) -> VerificationReport
    {
        vector<Check> checks;
        for (int n = 1; n <= max_order; ++n)
            checks.push_back(brick_check(name_of("k_config", n), k_config(n), options.budget));
        for (int p = 2; p <= max_length; ++p)
            checks.push_back(brick_check(name_of("c_config", p), c_config(p), options.budget));
        for (int p = 5; p <= max_length; p += 2)
            checks.push_back(brick_check(name_of("bc_config_odd", p), bc_config_odd(p), options.budget));
        for (int p = 4; p <= max_length; p += 2)
            checks.push_back(brick_check(name_of("bc_config_even", p), bc_config_even(p), options.budget));
        if (max_order >= 2 && max_length >= 2)
            checks.push_back({"k_config(2)=c_config(2)", []() -> Mismatch {
                                  if (k_config(2) != c_config(2))
                                      return pair{"identical digon configurations", "different covers"};
                                  return std::nullopt;
                              }});
        return run_checks("bricks", std::move(checks), options.threads);
    }

    auto verify_characterization(int max_n, const SuiteOptions & options) -> VerificationReport
    {
        if (max_n > 4)
            throw InvalidArgument("characterization suite supports at most 4 vertices");
        vector<Check> checks;
        for (int n = 2; n <= max_n; ++n)
            for (auto & d : enumerate_connected_digraphs(n))
                checks.push_back({instance_id(d), [d, budget = options.budget]() -> Mismatch {
                                      auto verdict = is_dp_degree_colorable(d);
                                      auto oracle = dp_degree_colorable_oracle(d, budget);
                                      if (verdict.colorable != oracle.colorable)
                                          return pair{yes_no(oracle.colorable, "colorable", "not colorable"),
                                              yes_no(verdict.colorable, "colorable", "not colorable")};
                                      if (oracle.witness && ! tight_sizes(*oracle.witness))
                                          return pair{"witness with |X_v| = d+(v) = d-(v)", "loose witness"};
                                      if (verdict.bad_cover) {
                                          auto & bad = *verdict.bad_cover;
                                          if (! is_degree_feasible(bad) || ! tight_sizes(bad))
                                              return pair{"tight bad cover", "sizes off"};
                                          if (! is_minimal_uncolorable(bad, budget))
                                              return pair{"minimal uncolorable bad cover", "not minimal uncolorable"};
                                          if (! recognize_constructible(bad))
                                              return pair{"constructible bad cover", "not recognized"};
                                      }
                                      return std::nullopt;
                                  }});
        return run_checks("characterization", std::move(checks), options.threads);
    }

    auto verify_bidirected_equivalence(int max_n, int k_max, const SuiteOptions & options) -> VerificationReport
    {
        if (max_n > 4 || k_max > 2)
            throw InvalidArgument("bidirected suite supports at most 4 vertices and k <= 2");
        vector<Check> checks;
        for (int n = 1; n <= max_n; ++n)
            for (auto & edges : enumerate_connected_graphs(n)) {
                auto d = bidirect(n, edges);
                auto id = instance_id(d);
                for (int k = 1; k <= k_max; ++k)
                    checks.push_back({id + "/k=" + std::to_string(k), [=, budget = options.budget]() -> Mismatch {
                                          bool graph = graph_dp_colorable(n, edges, k, budget);
                                          bool digraph = dp_colorable_k(d, k, budget).colorable;
                                          if (graph != digraph)
                                              return pair{yes_no(graph, "colorable", "not colorable"),
                                                  yes_no(digraph, "colorable", "not colorable")};
                                          return std::nullopt;
                                      }});
                checks.push_back({id + "/chi", [=, budget = options.budget]() -> Mismatch {
                                      int graph = graph_dp_chromatic_number(n, edges, budget);
                                      int digraph = dp_chromatic_number(d, budget);
                                      if (graph != digraph)
                                          return pair{std::to_string(graph), std::to_string(digraph)};
                                      return std::nullopt;
                                  }});
            }
        return run_checks("bidirected", std::move(checks), options.threads);
    }

    auto verify_chain(int max_n, int list_max_n, const SuiteOptions & options) -> VerificationReport
    {
        if (max_n > 4 || list_max_n > 3)
            throw InvalidArgument("chain suite supports at most 4 vertices, list coloring at most 3");
        vector<Check> checks;
        for (int n = 1; n <= max_n; ++n)
            for (auto & d : enumerate_connected_digraphs(n))
                checks.push_back({instance_id(d), [d, n, list_max_n, budget = options.budget]() -> Mismatch {
                                      int chi = dichromatic_number(d, budget);
                                      int dp = dp_chromatic_number(d, budget);
                                      int bound = greedy_bound(d);
                                      optional<int> list;
                                      bool ok = chi <= dp && dp <= bound;
                                      if (n <= list_max_n) {
                                          auto l = list_chromatic_number(d, bound, budget);
                                          list = l.value;
                                          ok = ok && ! l.lower_bound_only && chi <= l.value && l.value <= dp;
                                      }
                                      if (! ok)
                                          return pair{"chi <= chi_l <= chi_dp <= bound", chain_string(chi, list, dp, bound)};
                                      return std::nullopt;
                                  }});
        return run_checks("chain", std::move(checks), options.threads);
    }

    auto merge_pool() -> vector<pair<string, Configuration>>
    {
        return {{"k_config(2)", k_config(2)}, {"k_config(3)", k_config(3)}, {"c_config(2)", c_config(2)},
            {"c_config(3)", c_config(3)}, {"c_config(4)", c_config(4)}, {"bc_config_even(4)", bc_config_even(4)}};
    }

    auto verify_merge(int max_pieces, const SuiteOptions & options) -> VerificationReport
    {
        auto pool = merge_pool();
        if (max_pieces < static_cast<int>(pool.size()))
            pool.resize(std::max(0, max_pieces));

        vector<Check> checks;
        for (auto & [name_a, a] : pool)
            for (auto & [name_b, b] : pool)
                for (Vertex va = 0; va < a.digraph.order(); ++va)
                    for (Vertex vb = 0; vb < b.digraph.order(); ++vb) {
                        std::ostringstream id;
                        id << "merge(" << name_a << ',' << va << ',' << name_b << ',' << vb << ')';
                        checks.push_back({id.str(), [a, va, b, vb, budget = options.budget]() -> Mismatch {
                                              auto merged = merge(a, va, b, vb);
                                              if (! is_minimal_uncolorable(merged, budget))
                                                  return pair{"minimal uncolorable", "not minimal uncolorable"};
                                              auto first = color_arcs(a).front();
                                              auto weakened = merge(delete_h_arc(a, first.arc, first.pair), va, b, vb);
                                              if (! is_colorable(weakened, budget))
                                                  return pair{"colorable after deleting a color-arc", "uncolorable"};
                                              return std::nullopt;
                                          }});
                    }
        return run_checks("merge", std::move(checks), options.threads);
    }
}
