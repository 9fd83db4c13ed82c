#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vclab/graph.hpp"

namespace vclab {

// Parse failure; the message names the source (file name or "<input>") and
// the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text format:
//   c <anything>          comment, ignored (allowed anywhere)
//   p edge <n> <m>        exactly one header line, before any edge line
//   e <u> <v>             1-based endpoints, u != v, no duplicate lines
// Trailing whitespace and CRLF line endings are accepted; blank lines are
// ignored.  The edge-line count must match the header's m.
Graph parse_graph(std::istream& in, const std::string& source_name = "<input>");
Graph parse_graph_string(const std::string& text, const std::string& source_name = "<input>");
Graph parse_graph_file(const std::string& path);

// Canonical form: "p edge n m" followed by the edges in (min, max)
// lexicographic order with 1-based endpoints, then any caller-supplied
// comment lines (each emitted verbatim on its own line).
void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& trailing_comments = {});
std::string graph_to_string(const Graph& g,
                            const std::vector<std::string>& trailing_comments = {});

}  // namespace vclab
