#include "helpers.hh"

#include <dpdi/cli.hh>
#include <dpdi/io.hh>
#include <dpdi/solver.hh>

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace testing;

namespace
{
    namespace fs = std::filesystem;

    struct Run
    {
        int status;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int status = cli_main(args, out, err);
        return {status, out.str(), err.str()};
    }

    struct Scratch
    {
        fs::path dir;

        Scratch()
        {
            dir = fs::temp_directory_path() / ("dpdi-cli-" + std::to_string(std::random_device{}()));
            fs::create_directories(dir);
        }
        ~Scratch() { fs::remove_all(dir); }

        auto file(const std::string & name, const std::string & text) const -> std::string
        {
            auto path = (dir / name).string();
            write_file(path, text);
            return path;
        }

        auto path(const std::string & name) const -> std::string { return (dir / name).string(); }
    };
}

TEST_SUITE("cli")
{
    TEST_CASE("analyze")
    {
        Scratch s;
        auto r = run({"analyze", s.file("digon.txt", format_digraph(digon()))});
        CHECK(r.status == exit_code::ok);
        CHECK(r.out.find("not DP-degree-colorable; block 0: DirectedCycle(2)\n") != std::string::npos);
        CHECK(r.out.find("eulerian yes") != std::string::npos);
        CHECK(r.out.find("brooks AtBound") != std::string::npos);

        auto path = run({"analyze", s.file("path.txt", format_digraph(directed_path(3)))});
        CHECK(path.out.find("DP-degree-colorable; block 0: NotBrick; block 1: NotBrick\n") != std::string::npos);
        CHECK(path.out.find("brooks BelowBound") != std::string::npos);
    }

    TEST_CASE("malformed input exits 2 with the line")
    {
        Scratch s;
        auto r = run({"analyze", s.file("bad.txt", "2 2\n0 1\n0 1\n")});
        CHECK(r.status == exit_code::usage);
        CHECK(r.err.find("line 3") != std::string::npos);

        auto missing = run({"analyze", s.path("nope.txt")});
        CHECK(missing.status == exit_code::usage);

        auto disconnected = run({"analyze", s.file("two.txt", "2 0\n")});
        CHECK(disconnected.status == exit_code::usage);

        auto cover = run({"solve", s.file("d.txt", format_digraph(digon())), s.file("c.json", "{\"sizes\": [1,\n")});
        CHECK(cover.status == exit_code::usage);
        CHECK(cover.err.find("line 2") != std::string::npos);
    }

    TEST_CASE("usage errors exit 2")
    {
        CHECK(run({}).status == exit_code::usage);
        CHECK(run({"frobnicate"}).status == exit_code::usage);
        CHECK(run({"verify", "--suite", "nothing"}).status == exit_code::usage);
        CHECK(run({"chromatic", "x.txt", "--kind", "odd"}).status == exit_code::usage);
        CHECK(run({"--help"}).status == exit_code::ok);
    }

    TEST_CASE("solve")
    {
        Scratch s;
        auto d = s.file("c3.txt", format_digraph(directed_cycle(3)));
        auto r = run({"solve", d, s.file("c3.json", format_cover(c_config(3).cover))});
        CHECK(r.status == exit_code::ok);
        CHECK(r.out == "Uncolorable\n");

        auto loose = c_config(3);
        loose.cover.matchings[{0, 1}] = {};
        auto ok = run({"solve", d, s.file("loose.json", format_cover(loose.cover)), "--output", s.path("t.txt")});
        CHECK(ok.out == "Colorable\n");
        auto t = parse_transversal(read_file(s.path("t.txt")), 3);
        CHECK(is_acyclic_transversal(loose, t));

        auto bad = c_config(3);
        bad.cover.matchings[{0, 2}] = {{0, 0}};
        CHECK(run({"solve", d, s.file("bad.json", format_cover(bad.cover))}).status == exit_code::usage);
    }

    TEST_CASE("budget exhaustion exits 3")
    {
        Scratch s;
        auto d = s.file("k4.txt", format_digraph(bidirected_complete(4)));
        auto c = s.file("k4.json", format_cover(k_config(4).cover));
        auto r = run({"--budget-nodes", "2", "solve", d, c});
        CHECK(r.status == exit_code::budget);
        CHECK(r.out == "BudgetExceeded\n");
        CHECK(run({"--budget-nodes", "2", "chromatic", d, "--kind", "dp"}).status == exit_code::budget);
    }

    TEST_CASE("certify round trip")
    {
        Scratch s;
        auto d = two_digons();
        auto dpath = s.file("dd.txt", format_digraph(d));
        auto r = run({"certify", dpath, "--output", s.path("bad.json")});
        CHECK(r.status == exit_code::ok);
        auto again = run({"solve", dpath, s.path("bad.json")});
        CHECK(again.out == "Uncolorable\n");
        auto conf = make_configuration(d, parse_cover(read_file(s.path("bad.json"))));
        CHECK(is_minimal_uncolorable(conf));

        auto p = s.file("p.txt", format_digraph(directed_path(3)));
        auto colored = run({"certify", p});
        CHECK(colored.status == exit_code::ok);
        auto t = parse_transversal(colored.out, 3);
        for (auto c : t.choice)
            CHECK(c >= 0);

        auto cover = s.file("pc.json", format_cover(Cover{{1, 1, 1}, {{{0, 1}, {{0, 0}}}, {{1, 2}, {{0, 0}}}}}));
        auto given = run({"certify", p, "--cover", cover});
        CHECK(given.status == exit_code::ok);
        CHECK(given.out == "0 0\n1 0\n2 0\n");
    }

    TEST_CASE("chromatic")
    {
        Scratch s;
        auto r = run({"chromatic", s.file("c3.txt", format_digraph(directed_cycle(3)))});
        CHECK(r.status == exit_code::ok);
        CHECK(r.out == "dichromatic 2\nlist 2\ndp 2\nbound 2\n");
        auto dp = run({"chromatic", s.file("k4.txt", format_digraph(bidirected_complete(4))), "--kind", "dp"});
        CHECK(dp.out == "dp 4\n");
    }

    TEST_CASE("verify")
    {
        auto r = run({"verify", "--suite", "bricks"});
        CHECK(r.status == exit_code::ok);
        CHECK(r.out.rfind("suite bricks\n", 0) == 0);
        CHECK(r.out.find("disagreements 0\n") != std::string::npos);

        auto structured = run({"verify", "--suite", "characterization", "--max-n", "2", "--format", "structured"});
        CHECK(structured.status == exit_code::ok);
        CHECK(structured.out.find("\"instancesChecked\": 2") != std::string::npos);

        CHECK(run({"verify", "--suite", "merge", "--max-n", "2"}).status == exit_code::ok);
        CHECK(run({"verify", "--suite", "chain", "--max-n", "2"}).status == exit_code::ok);
        CHECK(run({"verify", "--suite", "bidirected", "--max-n", "3"}).status == exit_code::ok);
        CHECK(run({"verify", "--suite", "characterization", "--max-n", "9"}).status == exit_code::usage);
    }
}
