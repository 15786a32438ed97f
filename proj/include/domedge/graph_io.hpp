#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "domedge/graph.hpp"

namespace domedge {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepted graph syntaxes, auto-detected:
//   simple:      "n m" header, then m lines "u v" (0-based)
//   DIMACS-like: "p edge n m", then m lines "e u v" (1-based)
// Lines starting with '#' or 'c' are comments. Both normalize to the same
// canonical Graph. Throws ParseError on malformed input.
Graph parse_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);  // IoError if unreadable

// Simple format, canonical edge order; parse(format(g)) == g.
std::string format_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

// Coloring files carry one line "colors c_0 c_1 ... c_{m-1}" in canonical
// edge order. Non-contiguous ids are normalized (reported via .changed).
struct ParsedColoring {
    std::vector<int> colors;
    bool normalized = false;
};
ParsedColoring parse_coloring_text(const std::string& text);
ParsedColoring read_coloring_file(const std::string& path);
std::string format_coloring(const std::vector<int>& colors);

}  // namespace domedge
