#ifndef DPDI_IO_HH
#define DPDI_IO_HH

#include <dpdi/config.hh>
#include <dpdi/digraph.hh>

#include <string>

namespace dpdi
{
    /// "n m", then m lines "u v". Lines starting with '#' and blank lines
    /// are skipped. Throws FormatError carrying the offending line.
    auto parse_digraph(const std::string & text) -> Digraph;
    auto format_digraph(const Digraph &) -> std::string;

    /// JSON document {"sizes": [...], "matchings": [{"arc": [u,v], "pairs":
    /// [[i,j], ...]}, ...]}, arcs and pairs sorted.
    auto parse_cover(const std::string & text) -> Cover;
    auto format_cover(const Cover &) -> std::string;

    /// One "v i" line per non-deleted vertex.
    auto parse_transversal(const std::string & text, int order) -> Transversal;
    auto format_transversal(const Transversal &) -> std::string;

    /// Whole file as text; throws Error if it cannot be opened.
    auto read_file(const std::string & path) -> std::string;
    void write_file(const std::string & path, const std::string & text);
}

#endif
