#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domedge/graph.hpp"

namespace domedge {

// Per-edge color ids in canonical edge order; ids are contiguous and
// 0-based, every id below num_colors is used at least once.
struct EdgeColoring {
    std::vector<int> colors;
    int num_colors = 0;
};

// Renumbers arbitrary integer color ids to contiguous 0-based ids in order
// of first appearance. `changed` reports whether the input was already
// canonical. Throws std::invalid_argument on negative ids.
struct NormalizedColoring {
    EdgeColoring coloring;
    bool changed = false;
};
NormalizedColoring normalize_colors(const std::vector<int>& raw);

// witness[c] is an edge whose closed neighborhood contains color class c.
struct DominationCertificate {
    std::vector<int> witness;
};

enum class ViolationKind {
    improper_pair,      // a, b: adjacent edges sharing a color
    undominated_class,  // a: color id with no dominating edge
};

struct Violation {
    ViolationKind kind;
    int a = -1;
    int b = -1;
};

struct ValidationReport {
    bool proper = false;
    bool dominated = false;
    std::optional<DominationCertificate> certificate;  // present iff dominated
    std::vector<Violation> violations;

    bool valid() const { return proper && dominated; }
};

// True iff no two adjacent edges share a color; fills `violating` with all
// offending pairs when given. Throws std::invalid_argument on a length
// mismatch.
bool check_proper(const Graph& g, const EdgeColoring& col,
                  std::vector<std::pair<int, int>>* violating = nullptr);

// Least edge index whose closed neighborhood contains the whole class, or
// nullopt. Throws std::invalid_argument on an invalid color id.
std::optional<int> find_dominator(const Graph& g, const EdgeColoring& col, int color);

// Properness and domination are checked independently; the certificate
// uses least-index witnesses, so the report is deterministic.
ValidationReport validate(const Graph& g, const EdgeColoring& col);

}  // namespace domedge
