#include "domedge/coloring.hpp"

#include <map>
#include <stdexcept>

namespace domedge {

NormalizedColoring normalize_colors(const std::vector<int>& raw) {
    NormalizedColoring out;
    std::map<int, int> remap;  // original id -> contiguous id, by first appearance
    out.coloring.colors.reserve(raw.size());
    for (int c : raw) {
        if (c < 0) throw std::invalid_argument("negative color id");
        auto [it, inserted] = remap.try_emplace(c, static_cast<int>(remap.size()));
        out.coloring.colors.push_back(it->second);
        if (it->second != c) out.changed = true;
    }
    out.coloring.num_colors = static_cast<int>(remap.size());
    return out;
}

bool check_proper(const Graph& g, const EdgeColoring& col,
                  std::vector<std::pair<int, int>>* violating) {
    const int m = g.edge_count();
    if (static_cast<int>(col.colors.size()) != m)
        throw std::invalid_argument("coloring length does not match edge count");
    bool proper = true;
    for (int e = 0; e < m; ++e) {
        for (int f : g.edge_neighbors(e)) {
            if (f <= e) continue;  // each adjacent pair once
            if (col.colors[e] == col.colors[f]) {
                proper = false;
                if (violating)
                    violating->emplace_back(e, f);
                else
                    return false;
            }
        }
    }
    return proper;
}

std::optional<int> find_dominator(const Graph& g, const EdgeColoring& col, int color) {
    const int m = g.edge_count();
    if (static_cast<int>(col.colors.size()) != m)
        throw std::invalid_argument("coloring length does not match edge count");
    if (color < 0 || color >= col.num_colors)
        throw std::invalid_argument("color id out of range: " + std::to_string(color));

    std::vector<int> members;
    for (int e = 0; e < m; ++e)
        if (col.colors[e] == color) members.push_back(e);

    for (int e = 0; e < m; ++e) {
        bool covers = true;
        for (int f : members) {
            if (f != e && !g.edges_adjacent(e, f)) {
                covers = false;
                break;
            }
        }
        if (covers) return e;  // least index, N[e] = N(e) + {e}
    }
    return std::nullopt;
}

ValidationReport validate(const Graph& g, const EdgeColoring& col) {
    ValidationReport report;
    std::vector<std::pair<int, int>> improper;
    report.proper = check_proper(g, col, &improper);
    for (auto [e, f] : improper)
        report.violations.push_back({ViolationKind::improper_pair, e, f});

    DominationCertificate cert;
    cert.witness.assign(col.num_colors, -1);
    report.dominated = true;
    for (int c = 0; c < col.num_colors; ++c) {
        auto w = find_dominator(g, col, c);
        if (w) {
            cert.witness[c] = *w;
        } else {
            report.dominated = false;
            report.violations.push_back({ViolationKind::undominated_class, c, -1});
        }
    }
    if (report.dominated) report.certificate = std::move(cert);
    return report;
}

}  // namespace domedge
