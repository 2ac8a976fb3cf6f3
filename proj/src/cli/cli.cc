#include <dpdi/cli.hh>
#include <dpdi/error.hh>
#include <dpdi/harness.hh>
#include <dpdi/io.hh>
#include <dpdi/recognizer.hh>

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

using std::string;
using std::vector;

namespace dpdi
{
    namespace
    {
        struct Settings
        {
            std::uint64_t nodes = 0, covers = 0;
            unsigned threads = 0;

            auto budget() const -> Budget
            {
                auto b = default_budget();
                if (nodes)
                    b.nodes = nodes;
                if (covers)
                    b.covers = covers;
                return b;
            }
        };

        auto load_digraph(const string & path) -> Digraph
        {
            try {
                return parse_digraph(read_file(path));
            }
            catch (const FormatError & e) {
                throw Error(path + ": " + e.what());
            }
        }

        auto load_configuration(const Digraph & d, const string & path) -> Configuration
        {
            Cover c;
            try {
                c = parse_cover(read_file(path));
            }
            catch (const FormatError & e) {
                throw Error(path + ": " + e.what());
            }
            return make_configuration(d, std::move(c));
        }

        void emit(const string & text, const string & output, std::ostream & out)
        {
            if (output.empty())
                out << text;
            else
                write_file(output, text);
        }

        auto analyze(const string & path, std::ostream & out) -> int
        {
            auto d = load_digraph(path);
            auto p = degrees(d);
            out << "order " << d.order() << " arcs " << d.size() << '\n';
            for (Vertex v = 0; v < d.order(); ++v)
                out << "vertex " << v << " out " << p.per_vertex[v].out << " in " << p.per_vertex[v].in << '\n';
            out << "eulerian " << (is_eulerian(d) ? "yes" : "no") << '\n';

            auto verdict = is_dp_degree_colorable(d);
            auto & bs = verdict.decomposition.blocks;
            for (std::size_t b = 0; b < bs.size(); ++b) {
                out << "block " << b << ": " << to_string(verdict.block_tags[b]) << " vertices";
                for (auto v : bs[b].vertices)
                    out << ' ' << v;
                out << '\n';
            }

            std::ostringstream summary;
            if (verdict.colorable) {
                summary << "DP-degree-colorable";
                for (auto b : verdict.non_brick_blocks)
                    summary << "; block " << b << ": " << to_string(verdict.block_tags[b]);
            }
            else {
                summary << "not DP-degree-colorable";
                for (std::size_t b = 0; b < bs.size(); ++b)
                    summary << "; block " << b << ": " << to_string(verdict.block_tags[b]);
            }
            out << summary.str() << '\n';
            out << "brooks " << to_string(brooks_gap(d)) << '\n';
            return exit_code::ok;
        }

        auto chromatic(const string & path, const string & kind, const Settings & s, std::ostream & out) -> int
        {
            auto d = load_digraph(path);
            auto budget = s.budget();
            bool all = kind == "all";
            if (all || kind == "dichromatic")
                out << "dichromatic " << dichromatic_number(d, budget) << '\n';
            if (all || kind == "list") {
                auto l = list_chromatic_number(d, greedy_bound(d), budget);
                out << "list " << (l.lower_bound_only ? ">= " : "") << l.value << '\n';
            }
            if (all || kind == "dp")
                out << "dp " << dp_chromatic_number(d, budget) << '\n';
            if (all)
                out << "bound " << greedy_bound(d) << '\n';
            return exit_code::ok;
        }

        auto certify(const string & path, const string & cover_path, const string & output, const Settings & s,
            std::ostream & out) -> int
        {
            auto d = load_digraph(path);
            auto verdict = is_dp_degree_colorable(d);
            if (! verdict.colorable) {
                emit(format_cover(verdict.bad_cover->cover), output, out);
                return exit_code::ok;
            }

            Configuration conf;
            if (! cover_path.empty()) {
                conf = load_configuration(d, cover_path);
                if (! is_degree_feasible(conf))
                    throw InvalidCover("the cover is not degree-feasible");
            }
            else {
                auto p = degrees(d);
                ListAssignment lists;
                for (auto & deg : p.per_vertex) {
                    lists.lists.emplace_back();
                    for (int i = 0; i < std::max(deg.out, deg.in); ++i)
                        lists.lists.back().push_back(i);
                }
                conf = make_configuration(d, cover_from_lists(d, lists));
            }
            auto r = find_acyclic_transversal(conf, s.budget());
            if (r.outcome == Outcome::BudgetExceeded)
                throw BudgetExceeded("transversal search exceeded the node budget");
            if (r.outcome != Outcome::Colorable)
                throw Error("no acyclic transversal of a degree-feasible cover on a colorable digraph");
            emit(format_transversal(*r.transversal), output, out);
            return exit_code::ok;
        }

        auto solve(const string & path, const string & cover_path, const string & output, const Settings & s,
            std::ostream & out) -> int
        {
            auto d = load_digraph(path);
            auto conf = load_configuration(d, cover_path);
            auto r = find_acyclic_transversal(conf, s.budget());
            switch (r.outcome) {
            case Outcome::Colorable:
                out << "Colorable\n";
                emit(format_transversal(*r.transversal), output, out);
                return exit_code::ok;
            case Outcome::Uncolorable: out << "Uncolorable\n"; return exit_code::ok;
            case Outcome::BudgetExceeded: out << "BudgetExceeded\n"; return exit_code::budget;
            }
            return exit_code::ok;
        }

        auto verify(const string & suite, int max_n, int max_length, int k_max, const string & format,
            const Settings & s, std::ostream & out) -> int
        {
            SuiteOptions options{s.budget(), s.threads};
            VerificationReport report;
            if (suite == "bricks")
                report = verify_bricks(max_n < 0 ? 4 : max_n, max_length, options);
            else if (suite == "characterization")
                report = verify_characterization(max_n < 0 ? 3 : max_n, options);
            else if (suite == "bidirected")
                report = verify_bidirected_equivalence(max_n < 0 ? 4 : max_n, k_max, options);
            else if (suite == "chain")
                report = verify_chain(max_n < 0 ? 3 : max_n, 3, options);
            else
                report = verify_merge(max_n < 0 ? static_cast<int>(merge_pool().size()) : max_n, options);

            out << (format == "structured" ? format_report_structured(report) : format_report_text(report));
            if (! report.disagreements.empty())
                return exit_code::disagreement;
            if (report.budget_hits > 0)
                return exit_code::budget;
            return exit_code::ok;
        }
    }

    auto cli_main(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"DP-coloring of digraphs: analysis, certificates and verification suites", "dpdi"};
        app.require_subcommand(1);
        Settings s;
        app.add_option("--budget-nodes", s.nodes, "search nodes per solve (default 1e8)");
        app.add_option("--budget-covers", s.covers, "covers per enumeration (default 1e7)");
        app.add_option("--threads", s.threads, "worker threads for verify (0: all cores)");

        string digraph_path, cover_path, output, kind = "all", suite, format = "text";
        int max_n = -1, max_length = 6, k_max = 2;

        auto analyze_cmd = app.add_subcommand("analyze", "degrees, blocks, degree-colorability, Brooks gap");
        analyze_cmd->add_option("digraph", digraph_path)->required();

        auto chromatic_cmd = app.add_subcommand("chromatic", "chromatic numbers");
        chromatic_cmd->add_option("digraph", digraph_path)->required();
        chromatic_cmd->add_option("--kind", kind)->check(CLI::IsMember({"dichromatic", "list", "dp", "all"}));

        auto certify_cmd = app.add_subcommand("certify", "bad cover, or a transversal when degree-colorable");
        certify_cmd->add_option("digraph", digraph_path)->required();
        certify_cmd->add_option("--cover", cover_path, "degree-feasible cover to color");
        certify_cmd->add_option("--output", output, "write the certificate here instead of stdout");

        auto solve_cmd = app.add_subcommand("solve", "search for an acyclic transversal");
        solve_cmd->add_option("digraph", digraph_path)->required();
        solve_cmd->add_option("cover", cover_path)->required();
        solve_cmd->add_option("--output", output, "write the transversal here instead of stdout");

        auto verify_cmd = app.add_subcommand("verify", "run a verification suite");
        verify_cmd->add_option("--suite", suite)
            ->required()
            ->check(CLI::IsMember({"bricks", "characterization", "bidirected", "chain", "merge"}));
        verify_cmd->add_option("--max-n", max_n, "order bound (pieces for merge)");
        verify_cmd->add_option("--max-length", max_length, "cycle length bound for bricks");
        verify_cmd->add_option("--k-max", k_max, "largest k for bidirected");
        verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_code::ok : exit_code::usage;
        }

        try {
            if (analyze_cmd->parsed())
                return analyze(digraph_path, out);
            if (chromatic_cmd->parsed())
                return chromatic(digraph_path, kind, s, out);
            if (certify_cmd->parsed())
                return certify(digraph_path, cover_path, output, s, out);
            if (solve_cmd->parsed())
                return solve(digraph_path, cover_path, output, s, out);
            return verify(suite, max_n, max_length, k_max, format, s, out);
        }
        catch (const BudgetExceeded & e) {
            err << "budget exceeded: " << e.what() << '\n';
            return exit_code::budget;
        }
        catch (const Error & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::usage;
        }
    }
}
