#include "domedge/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "domedge/coloring.hpp"

namespace domedge {

namespace {

// Significant lines: comments ('#' or 'c') and blank lines are dropped.
std::vector<std::string> significant_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#' || line[pos] == 'c') continue;
        lines.push_back(line.substr(pos));
    }
    return lines;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, const std::string& what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("malformed " + what + ": '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("malformed " + what + ": '" + tok + "'");
    return value;
}

Graph finish(int n, int m, const std::vector<std::pair<int, int>>& edges) {
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) +
                         ", body has " + std::to_string(edges.size()));
    try {
        return Graph::build(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError("empty graph file");

    std::vector<std::pair<int, int>> edges;

    if (lines[0][0] == 'p') {
        // DIMACS-like: "p edge n m", then "e u v" with 1-based endpoints
        auto head = tokens(lines[0]);
        if (head.size() != 4 || head[0] != "p" || head[1] != "edge")
            throw ParseError("malformed header: expected 'p edge n m'");
        int n = parse_int(head[2], "vertex count");
        int m = parse_int(head[3], "edge count");
        for (size_t i = 1; i < lines.size(); ++i) {
            auto t = tokens(lines[i]);
            if (t.size() != 3 || t[0] != "e")
                throw ParseError("malformed edge line: '" + lines[i] + "'");
            edges.emplace_back(parse_int(t[1], "endpoint") - 1,
                               parse_int(t[2], "endpoint") - 1);
        }
        return finish(n, m, edges);
    }

    // simple: "n m", then "u v" with 0-based endpoints
    auto head = tokens(lines[0]);
    if (head.size() != 2) throw ParseError("malformed header: expected 'n m'");
    int n = parse_int(head[0], "vertex count");
    int m = parse_int(head[1], "edge count");
    for (size_t i = 1; i < lines.size(); ++i) {
        auto t = tokens(lines[i]);
        if (t.size() != 2) throw ParseError("malformed edge line: '" + lines[i] + "'");
        edges.emplace_back(parse_int(t[0], "endpoint"), parse_int(t[1], "endpoint"));
    }
    return finish(n, m, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write graph file: " + path);
    out << format_graph(g);
    if (!out) throw IoError("write failed: " + path);
}

ParsedColoring parse_coloring_text(const std::string& text) {
    for (const auto& line : significant_lines(text)) {
        auto t = tokens(line);
        if (t.empty() || t[0] != "colors") continue;
        std::vector<int> raw;
        for (size_t i = 1; i < t.size(); ++i) raw.push_back(parse_int(t[i], "color id"));
        try {
            auto normalized = normalize_colors(raw);
            return {normalized.coloring.colors, normalized.changed};
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("no 'colors ...' line found");
}

ParsedColoring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open coloring file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_coloring_text(buf.str());
}

std::string format_coloring(const std::vector<int>& colors) {
    std::ostringstream out;
    out << "colors";
    for (int c : colors) out << " " << c;
    out << "\n";
    return out.str();
}

}  // namespace domedge
