#include "vclab/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace vclab {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + msg);
}

// Strips CR and trailing blanks, then splits on runs of spaces/tabs.
std::vector<std::string> tokenize(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    std::vector<std::string> tokens;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = 0;
    if (tok[0] == '-') i = 1;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source_name) {
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> t = tokenize(line);
        if (t.empty()) continue;
        if (t[0] == "c") continue;
        if (t[0] == "p") {
            if (have_header) fail(source_name, lineno, "duplicate problem line");
            if (t.size() != 4 || t[1] != "edge")
                fail(source_name, lineno, "malformed problem line, expected 'p edge <n> <m>'");
            if (!parse_int(t[2], n) || !parse_int(t[3], m) || n < 0 || m < 0)
                fail(source_name, lineno, "problem line counts must be non-negative integers");
            have_header = true;
            continue;
        }
        if (t[0] == "e") {
            if (!have_header)
                fail(source_name, lineno, "edge line before problem line");
            long long u, v;
            if (t.size() != 3 || !parse_int(t[1], u) || !parse_int(t[2], v))
                fail(source_name, lineno, "malformed edge line, expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                fail(source_name, lineno, "edge endpoint out of range [1, " + std::to_string(n) + "]");
            if (u == v) fail(source_name, lineno, "self-loop rejected");
            Edge e{static_cast<Vertex>(std::min(u, v)) - 1, static_cast<Vertex>(std::max(u, v)) - 1};
            if (!seen.insert(e).second)
                fail(source_name, lineno, "duplicate edge line");
            edges.push_back(e);
            continue;
        }
        fail(source_name, lineno, "unrecognized line type '" + t[0] + "'");
    }
    if (!have_header) fail(source_name, lineno + 1, "missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        fail(source_name, lineno + 1,
             "edge count mismatch: header says " + std::to_string(m) + ", found " +
                 std::to_string(edges.size()));
    return make_graph(static_cast<int>(n), edges);
}

Graph parse_graph_string(const std::string& text, const std::string& source_name) {
    std::istringstream iss(text);
    return parse_graph(iss, source_name);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_graph(in, path);
}

void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& trailing_comments) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges())
        out << "e " << e.first + 1 << " " << e.second + 1 << "\n";
    for (const std::string& c : trailing_comments) out << c << "\n";
}

std::string graph_to_string(const Graph& g, const std::vector<std::string>& trailing_comments) {
    std::ostringstream oss;
    write_graph(oss, g, trailing_comments);
    return oss.str();
}

}  // namespace vclab
