#include <dpdi/error.hh>
#include <dpdi/io.hh>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using std::string;
using std::vector;

namespace dpdi
{
    namespace
    {
        struct Line
        {
            int number;
            string text;
        };

        auto content_lines(const string & text) -> vector<Line>
        {
            vector<Line> out;
            std::istringstream in(text);
            string line;
            for (int number = 1; std::getline(in, line); ++number) {
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                auto first = line.find_first_not_of(" \t");
                if (first == string::npos || line[first] == '#')
                    continue;
                out.push_back({number, line});
            }
            return out;
        }

        auto two_ints(const Line & line, const char * what) -> std::pair<long, long>
        {
            std::istringstream in(line.text);
            long a, b;
            string rest;
            if (! (in >> a >> b) || (in >> rest))
                throw FormatError(line.number, string("expected ") + what);
            return {a, b};
        }
    }

    auto parse_digraph(const string & text) -> Digraph
    {
        auto lines = content_lines(text);
        if (lines.empty())
            throw FormatError(1, "missing header \"n m\"");
        auto [n, m] = two_ints(lines[0], "header \"n m\"");
        if (n < 1 || n > max_order)
            throw FormatError(lines[0].number, "order must lie in [1, " + std::to_string(max_order) + "]");
        if (m < 0 || m > n * (n - 1))
            throw FormatError(lines[0].number, "arc count out of range");
        if (static_cast<long>(lines.size()) - 1 != m)
            throw FormatError(lines.back().number,
                "header announces " + std::to_string(m) + " arcs, found " + std::to_string(lines.size() - 1));

        vector<Arc> arcs;
        std::set<Arc> seen;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            auto [u, v] = two_ints(lines[k], "arc \"u v\"");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw FormatError(lines[k].number, "vertex out of range");
            if (u == v)
                throw FormatError(lines[k].number, "loops are not allowed");
            Arc a{static_cast<Vertex>(u), static_cast<Vertex>(v)};
            if (! seen.insert(a).second)
                throw FormatError(lines[k].number, "duplicate arc");
            arcs.push_back(a);
        }
        return build_digraph(static_cast<int>(n), arcs);
    }

    auto format_digraph(const Digraph & d) -> string
    {
        std::ostringstream out;
        out << d.order() << ' ' << d.size() << '\n';
        for (auto & a : d.arcs())
            out << a.tail << ' ' << a.head << '\n';
        return out.str();
    }

    auto parse_cover(const string & text) -> Cover
    {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            // Byte offset to line number.
            auto upto = std::min<std::size_t>(e.byte, text.size());
            int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
            throw FormatError(line, "malformed cover document");
        }

        // Line of the n-th occurrence of needle; records are usually one per line.
        auto locate = [&](const string & needle, std::size_t nth) {
            auto at = text.find(needle);
            for (; nth > 0 && at != string::npos; --nth)
                at = text.find(needle, at + 1);
            return at == string::npos ? 1 : 1 + static_cast<int>(std::count(text.begin(), text.begin() + at, '\n'));
        };

        Cover c;
        try {
            if (! doc.is_object() || ! doc.contains("sizes") || ! doc.contains("matchings"))
                throw FormatError(1, "cover needs \"sizes\" and \"matchings\"");
            c.sizes = doc.at("sizes").get<vector<int>>();
            std::size_t r = 0;
            for (auto & record : doc.at("matchings")) {
                auto arc = record.at("arc").get<vector<int>>();
                if (arc.size() != 2)
                    throw FormatError(locate("\"arc\"", r), "arc must be [u, v]");
                Matching m;
                for (auto & pair : record.at("pairs")) {
                    auto p = pair.get<vector<int>>();
                    if (p.size() != 2)
                        throw FormatError(locate("\"arc\"", r), "pair must be [i, j]");
                    m.emplace_back(p[0], p[1]);
                }
                std::sort(m.begin(), m.end());
                if (! c.matchings.emplace(Arc{arc[0], arc[1]}, std::move(m)).second)
                    throw FormatError(locate("\"arc\"", r), "arc listed twice");
                ++r;
            }
        }
        catch (const nlohmann::json::exception & e) {
            throw FormatError(locate("\"matchings\"", 0), string("bad cover field: ") + e.what());
        }
        return c;
    }

    auto format_cover(const Cover & c) -> string
    {
        // One record per line keeps certificates diffable.
        std::ostringstream out;
        out << "{\n \"sizes\": [";
        for (std::size_t v = 0; v < c.sizes.size(); ++v)
            out << (v ? ", " : "") << c.sizes[v];
        out << "],\n \"matchings\": [";
        bool first = true;
        for (auto & [arc, m] : c.matchings) {
            out << (first ? "\n" : ",\n") << "  {\"arc\": [" << arc.tail << ", " << arc.head << "], \"pairs\": [";
            for (std::size_t k = 0; k < m.size(); ++k)
                out << (k ? ", " : "") << '[' << m[k].first << ", " << m[k].second << ']';
            out << "]}";
            first = false;
        }
        out << (first ? "]\n}\n" : "\n ]\n}\n");
        return out.str();
    }

    auto parse_transversal(const string & text, int order) -> Transversal
    {
        Transversal t{vector<int>(order, -1)};
        for (auto & line : content_lines(text)) {
            auto [v, i] = two_ints(line, "\"v i\"");
            if (v < 0 || v >= order)
                throw FormatError(line.number, "vertex out of range");
            if (i < 0)
                throw FormatError(line.number, "negative color");
            if (t.choice[v] != -1)
                throw FormatError(line.number, "vertex listed twice");
            t.choice[v] = static_cast<int>(i);
        }
        return t;
    }

    auto format_transversal(const Transversal & t) -> string
    {
        std::ostringstream out;
        for (int v = 0; v < static_cast<int>(t.choice.size()); ++v)
            if (t.choice[v] >= 0)
                out << v << ' ' << t.choice[v] << '\n';
        return out.str();
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot open " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    void write_file(const string & path, const string & text)
    {
        std::ofstream out(path, std::ios::binary);
        if (! (out << text))
            throw Error("cannot write " + path);
    }
}
