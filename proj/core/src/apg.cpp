#include "proofleg/apg.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "proofleg/errors.hpp"

namespace proofleg {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next meaningful line split into tokens; empty vector at end of input.
    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens.front()[0] == '#') continue;
            return tokens;
        }
        return {};
    }
};

int parse_vertex(const std::string& tok, int line_no) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        fail(Errc::MalformedScript, "expected a vertex number, got \"" + tok + "\"", line_no);
    }
    if (used != tok.size() || value <= 0)
        fail(Errc::MalformedScript, "expected a positive vertex number, got \"" + tok + "\"", line_no);
    return value;
}

void expect_header(LineReader& r, const char* magic) {
    const auto tokens = r.next();
    if (tokens.size() != 2 || tokens[0] != magic || tokens[1] != "1")
        fail(Errc::MalformedScript, std::string("expected header \"") + magic + " 1\"", r.line_no);
}

int expect_nodes(LineReader& r) {
    const auto tokens = r.next();
    if (tokens.size() != 2 || tokens[0] != "nodes")
        fail(Errc::MalformedScript, "expected \"nodes N\"", r.line_no);
    return parse_vertex(tokens[1], r.line_no);
}

std::pair<int, int> expect_pair(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 3)
        fail(Errc::MalformedScript, "expected \"" + tokens[0] + " U V\"", line_no);
    return {parse_vertex(tokens[1], line_no), parse_vertex(tokens[2], line_no)};
}

} // namespace

ProofGraph parse_apg(std::istream& in) {
    LineReader r{in};
    expect_header(r, "apg");
    const int n = expect_nodes(r);
    std::vector<std::pair<int, int>> refs;
    std::vector<std::pair<int, int>> vars;
    for (auto tokens = r.next(); !tokens.empty(); tokens = r.next()) {
        if (tokens[0] == "ref")
            refs.push_back(expect_pair(tokens, r.line_no));
        else if (tokens[0] == "var")
            vars.push_back(expect_pair(tokens, r.line_no));
        else
            fail(Errc::MalformedScript, "unknown directive \"" + tokens[0] + "\"", r.line_no);
    }
    return build_graph(n, refs, vars);
}

ProofGraph parse_apg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoError, "cannot open " + path);
    return parse_apg(in);
}

std::string emit_apg(const ProofGraph& g) {
    std::ostringstream out;
    out << "apg 1\n";
    out << "nodes " << g.vertex_count() << "\n";
    for (const Arc& a : g.arcs())
        if (a.is_reference) out << "ref " << a.tail << ' ' << a.head << "\n";
    for (const Arc& a : g.arcs())
        if (a.is_variable) out << "var " << a.tail << ' ' << a.head << "\n";
    return out.str();
}

UndirectedGraph parse_ug(std::istream& in) {
    LineReader r{in};
    expect_header(r, "ug");
    const int n = expect_nodes(r);
    std::vector<std::pair<int, int>> edges;
    for (auto tokens = r.next(); !tokens.empty(); tokens = r.next()) {
        if (tokens[0] != "edge")
            fail(Errc::MalformedScript, "unknown directive \"" + tokens[0] + "\"", r.line_no);
        edges.push_back(expect_pair(tokens, r.line_no));
    }
    return build_undirected(n, edges);
}

UndirectedGraph parse_ug_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoError, "cannot open " + path);
    return parse_ug(in);
}

std::string emit_ug(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "ug 1\n";
    out << "nodes " << g.n << "\n";
    for (const auto& [u, v] : g.edges) out << "edge " << u << ' ' << v << "\n";
    return out.str();
}

Digraph parse_dg(std::istream& in) {
    LineReader r{in};
    expect_header(r, "dg");
    const int n = expect_nodes(r);
    std::vector<std::pair<int, int>> arcs;
    for (auto tokens = r.next(); !tokens.empty(); tokens = r.next()) {
        if (tokens[0] != "arc")
            fail(Errc::MalformedScript, "unknown directive \"" + tokens[0] + "\"", r.line_no);
        arcs.push_back(expect_pair(tokens, r.line_no));
    }
    return build_digraph(n, arcs);
}

Digraph parse_dg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoError, "cannot open " + path);
    return parse_dg(in);
}

std::string emit_dg(const Digraph& g) {
    std::ostringstream out;
    out << "dg 1\n";
    out << "nodes " << g.n << "\n";
    for (const auto& [u, v] : g.arcs) out << "arc " << u << ' ' << v << "\n";
    return out.str();
}

} // namespace proofleg
