#include <bit>
#include <cstdint>
#include <stdexcept>

#include "domedge/solver.hpp"

namespace domedge {

namespace {

// Exhaustive enumeration of every partition of the edge set into
// singletons and compatible pairs. Each class is decided when its lowest
// edge index comes up, so every partition is visited exactly once. No
// bounding is applied; this is the reference the branch-and-bound solver
// is checked against, so it shares nothing with it beyond the pair table.
struct Enumeration {
    const PairTable& pt;
    std::vector<std::pair<int, int>> stack;  // (edge, partner or -1)
    int best_classes = -1;
    int best_singletons = -1;
    std::vector<std::pair<int, int>> best_stack;

    explicit Enumeration(const PairTable& pt_) : pt(pt_) {}

    void visit(std::uint64_t unassigned, int classes, int singletons) {
        if (unassigned == 0) {
            if (best_classes < 0 || classes < best_classes ||
                (classes == best_classes && singletons < best_singletons)) {
                best_classes = classes;
                best_singletons = singletons;
                best_stack = stack;
            }
            return;
        }
        const int e = std::countr_zero(unassigned);
        const std::uint64_t without_e = unassigned & (unassigned - 1);

        stack.emplace_back(e, -1);
        visit(without_e, classes + 1, singletons + 1);
        stack.pop_back();

        for (std::uint64_t partners = pt.compatible_mask(e) & without_e; partners;) {
            const int f = std::countr_zero(partners);
            partners &= partners - 1;
            stack.emplace_back(e, f);
            visit(without_e & ~(1ull << f), classes + 1, singletons);
            stack.pop_back();
        }
    }

    EdgeColoring best_coloring() const {
        EdgeColoring col;
        col.colors.assign(pt.edge_count(), -1);
        col.num_colors = best_classes;
        int c = 0;
        for (auto [e, f] : best_stack) {
            col.colors[e] = c;
            if (f >= 0) col.colors[f] = c;
            ++c;
        }
        return col;
    }
};

OracleResult run_oracle(const Graph& g, int edge_cap) {
    const int m = g.edge_count();
    if (m > edge_cap)
        throw std::invalid_argument("oracle cap exceeded: " + std::to_string(m) + " > " +
                                    std::to_string(edge_cap));
    OracleResult res;
    if (m == 0) return res;

    PairTable pt(g);
    Enumeration en(pt);
    const std::uint64_t all = (1ull << m) - 1;
    en.visit(all, 0, 0);

    res.value = en.best_classes;
    res.min_singletons = en.best_singletons;
    res.coloring = en.best_coloring();

    ValidationReport check = validate(g, res.coloring);
    if (!check.valid())
        throw std::logic_error("oracle produced an invalid coloring");
    return res;
}

}  // namespace

int chi_dom_brute_oracle(const Graph& g, int edge_cap) {
    return run_oracle(g, edge_cap).value;
}

OracleResult chi_dom_oracle_detail(const Graph& g, int edge_cap) {
    return run_oracle(g, edge_cap);
}

}  // namespace domedge
