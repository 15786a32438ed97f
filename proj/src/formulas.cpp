#include "domedge/formulas.hpp"

#include <stdexcept>

namespace domedge {

int path_value_by_edges(int m) {
    if (m < 0) throw std::invalid_argument("negative edge count");
    if (m == 0) return 0;
    return m % 4 == 0 ? m / 2 : m / 2 + 1;
}

std::optional<int> printed_path_value(int n, std::string* rendered) {
    // Literal reading of the printed branch: keyed on the vertex count n.
    // When n % 4 == 0, n is even, so (n-1)/2 is never an integer.
    if (n % 4 == 0) {
        if (rendered)
            *rendered = "(" + std::to_string(n) + "-1)/2 = " + std::to_string(n - 1) +
                        "/2 (not an integer)";
        return std::nullopt;
    }
    int v = (n - 1) / 2 + 1;
    if (rendered)
        *rendered = "floor((" + std::to_string(n) + "-1)/2)+1 = " + std::to_string(v);
    return v;
}

namespace {

FormulaResult value_of(int v, std::string source, std::string note = "") {
    FormulaResult res;
    res.value = v;
    res.applicable = true;
    res.source = std::move(source);
    res.note = std::move(note);
    return res;
}

FormulaResult not_applicable(std::string note = "") {
    FormulaResult res;
    res.applicable = false;
    res.note = std::move(note);
    return res;
}

// Attached to path/cycle results whose value disagrees with the printed
// vertex-count branch; the m-keyed form is the one every directly
// verifiable value satisfies.
std::string divergence_note(int n_path_statement, int value) {
    std::string printed;
    auto pv = printed_path_value(n_path_statement, &printed);
    if (pv && *pv == value) return "";
    return "printed vertex-count branch gives " + printed + "; computed value is " +
           std::to_string(value);
}

}  // namespace

FormulaResult closed_form(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::path: {
            int m = p[0] - 1;
            if (m == 0) return value_of(0, "edgeless");
            int v = path_value_by_edges(m);
            // the printed statement covers n >= 5 only
            std::string note = p[0] >= 5 ? divergence_note(p[0], v) : "";
            return value_of(v, "path-cycle-m", note);
        }
        case FamilyKind::cycle: {
            int m = p[0];
            if (m == 3) return value_of(3, "triangle-special");
            int v = path_value_by_edges(m);
            // a cycle on m vertices matches the path statement at n = m+1
            std::string note = m + 1 >= 5 ? divergence_note(m + 1, v) : "";
            return value_of(v, "path-cycle-m", note);
        }
        case FamilyKind::complete: {
            int n = p[0];
            if (n == 1) return value_of(0, "edgeless");
            if (n == 3)
                return value_of(3, "triangle-special",
                                "printed formula gives 2; the three mutually adjacent "
                                "edges need three colors");
            return value_of((n * (n - 1) + 3) / 4, "complete");
        }
        case FamilyKind::complete_bipartite: {
            int r = p[0], s = p[1];
            if (r == 1 || s == 1) return value_of(std::max(r, s), "star");
            return value_of((r * s + 1) / 2, "complete-bipartite");
        }
        case FamilyKind::star:
            return value_of(p[0], "star");
        case FamilyKind::bistar:
            return not_applicable("no closed form is claimed for bi-stars");
        case FamilyKind::wheel:
            return value_of(p[0] - 1, "wheel");
        case FamilyKind::friendship: {
            int n = p[0];
            if (n == 1) return value_of(3, "triangle-special");
            return value_of(2 * n, "friendship");
        }
    }
    return not_applicable();
}

FormulaResult star_subdivision_form(int n, int k) {
    if (n < 3 || k < 3)
        return not_applicable("star subdivision form requires n >= 3 and k >= 3");
    // the k-subdivision turns each spoke into a path with k edges
    return value_of(n * path_value_by_edges(k), "star-subdivision");
}

}  // namespace domedge
