#include "domedge/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "domedge/formulas.hpp"

namespace domedge {

PairTable::PairTable(const Graph& g) : m_(g.edge_count()) {
    if (m_ > max_edges)
        throw std::invalid_argument("graph exceeds the solver's edge capacity (" +
                                    std::to_string(max_edges) + ")");
    adjacent_.assign(m_, 0);
    compatible_.assign(m_, 0);
    for (int e = 0; e < m_; ++e) {
        for (int f : g.edge_neighbors(e)) adjacent_[e] |= 1ull << f;
    }
    for (int e = 0; e < m_; ++e) {
        for (int f = e + 1; f < m_; ++f) {
            bool touch = (adjacent_[e] >> f) & 1u;
            if (!touch && (adjacent_[e] & adjacent_[f]) != 0) {
                compatible_[e] |= 1ull << f;
                compatible_[f] |= 1ull << e;
            }
        }
    }
}

namespace {

// Branching order: most-constrained edges first (descending open
// neighborhood size), ties by index. Shared by the greedy bound and the
// exact search so results stay deterministic.
std::vector<int> branching_order(const PairTable& pt) {
    std::vector<int> order(pt.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(pt.adjacent_mask(a)) > std::popcount(pt.adjacent_mask(b));
    });
    return order;
}

EdgeColoring coloring_from_classes(const std::vector<int>& class_of, int num_classes) {
    EdgeColoring col;
    col.colors = class_of;
    col.num_colors = num_classes;
    return col;
}

int count_singletons(const EdgeColoring& col) {
    std::vector<int> size(col.num_colors, 0);
    for (int c : col.colors) ++size[c];
    return static_cast<int>(std::count(size.begin(), size.end(), 1));
}

struct GreedyOutcome {
    std::vector<int> class_of;
    int num_classes = 0;
};

// Pair each edge with the first compatible open singleton, then try to
// break up pairs so that two leftover singletons merge into them: a
// matched pair {a,b} plus singletons {x},{y} rewrites to {x,a},{b,y}
// whenever compatible, saving one class.
GreedyOutcome greedy_classes(const PairTable& pt, const std::vector<int>& order) {
    const int m = pt.edge_count();
    GreedyOutcome out;
    out.class_of.assign(m, -1);
    std::vector<int> first;   // representative edge per class
    std::vector<int> second;  // -1 while the class is an open singleton

    for (int e : order) {
        int chosen = -1;
        for (int c = 0; c < static_cast<int>(first.size()); ++c) {
            if (second[c] < 0 && pt.compatible(first[c], e)) {
                chosen = c;
                break;
            }
        }
        if (chosen >= 0) {
            second[chosen] = e;
            out.class_of[e] = chosen;
        } else {
            out.class_of[e] = static_cast<int>(first.size());
            first.push_back(e);
            second.push_back(-1);
        }
    }

    bool improved = true;
    while (improved) {
        improved = false;
        for (int cx = 0; cx < static_cast<int>(first.size()) && !improved; ++cx) {
            if (second[cx] >= 0) continue;
            for (int cy = cx + 1; cy < static_cast<int>(first.size()) && !improved; ++cy) {
                if (second[cy] >= 0) continue;
                int x = first[cx], y = first[cy];
                for (int cp = 0; cp < static_cast<int>(first.size()); ++cp) {
                    if (second[cp] < 0) continue;
                    int a = first[cp], b = second[cp];
                    bool forward = pt.compatible(x, a) && pt.compatible(b, y);
                    bool swapped = pt.compatible(x, b) && pt.compatible(a, y);
                    if (!forward && !swapped) continue;
                    if (!forward) std::swap(a, b);
                    second[cp] = -2;  // retire; classes are compacted below
                    first[cx] = x;
                    second[cx] = a;
                    first[cy] = b;
                    second[cy] = y;
                    improved = true;
                    break;
                }
            }
        }
        if (improved) {
            // compact retired classes and rebuild the edge assignment
            std::vector<int> nf, ns;
            for (size_t c = 0; c < first.size(); ++c) {
                if (second[c] == -2) continue;
                nf.push_back(first[c]);
                ns.push_back(second[c]);
            }
            first = std::move(nf);
            second = std::move(ns);
            for (int c = 0; c < static_cast<int>(first.size()); ++c) {
                out.class_of[first[c]] = c;
                if (second[c] >= 0) out.class_of[second[c]] = c;
            }
        }
    }

    out.num_classes = static_cast<int>(first.size());
    return out;
}

}  // namespace

std::map<std::string, int> lower_bounds(const Graph& g, int induced_path_cap) {
    std::map<std::string, int> lb;
    const int m = g.edge_count();
    lb["half_m"] = (m + 1) / 2;
    lb["delta"] = g.max_degree();

    int induced = 0;
    if (induced_path_cap > 0 && m > 0) {
        StructureReport sr = structure_report(g, induced_path_cap);
        int p = sr.longest_induced_path_vertices;
        if (p >= 7) induced = g.max_degree() + path_value_by_edges(p - 5);
    }
    lb["induced_path"] = induced;
    lb["overall"] = std::max({lb["half_m"], lb["delta"], lb["induced_path"]});
    return lb;
}

std::pair<int, EdgeColoring> greedy_upper(const Graph& g) {
    PairTable pt(g);
    GreedyOutcome out = greedy_classes(pt, branching_order(pt));
    return {out.num_classes, coloring_from_classes(out.class_of, out.num_classes)};
}

namespace {

struct Search {
    const PairTable& pt;
    const std::vector<int>& order;
    long long node_cap;
    double time_limit_s;
    std::chrono::steady_clock::time_point start;
    int lb_overall;

    std::vector<int> class_first;
    std::vector<int> class_second;
    std::vector<int> class_of;
    int open_singletons = 0;

    std::vector<int> best_class_of;
    int best = 0;

    long long nodes = 0;
    bool out_of_nodes = false;
    bool out_of_time = false;
    bool proven = false;  // incumbent hit the root lower bound

    Search(const PairTable& pt_, const std::vector<int>& order_, long long cap,
           double tl, int lb)
        : pt(pt_), order(order_), node_cap(cap), time_limit_s(tl),
          start(std::chrono::steady_clock::now()), lb_overall(lb),
          class_of(pt_.edge_count(), -1) {}

    bool stopped() const { return out_of_nodes || out_of_time || proven; }

    bool budget_ok() {
        if (nodes >= node_cap) {
            out_of_nodes = true;
            return false;
        }
        if ((nodes & 0xfff) == 0) {
            auto elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            if (elapsed > time_limit_s) {
                out_of_time = true;
                return false;
            }
        }
        return true;
    }

    void record_incumbent() {
        best = static_cast<int>(class_first.size());
        best_class_of = class_of;
        if (best == lb_overall) proven = true;
    }

    // Completion bound: every open singleton can absorb at most one of the
    // r unassigned edges and any new class at most two, so at least
    // ceil((r - open)/2) classes must still be opened.
    int completion_lb(int remaining) const {
        int extra = remaining - open_singletons;
        return extra > 0 ? (extra + 1) / 2 : 0;
    }

    void dfs(int pos) {
        ++nodes;
        if (!budget_ok()) return;

        const int used = static_cast<int>(class_first.size());
        if (pos == static_cast<int>(order.size())) {
            if (best == 0 || used < best) record_incumbent();
            return;
        }
        if (best != 0 && used + completion_lb(static_cast<int>(order.size()) - pos) >= best)
            return;

        const int e = order[pos];

        for (int c = 0; c < used && !stopped(); ++c) {
            if (class_second[c] >= 0 || !pt.compatible(class_first[c], e)) continue;
            class_second[c] = e;
            class_of[e] = c;
            --open_singletons;
            dfs(pos + 1);
            ++open_singletons;
            class_of[e] = -1;
            class_second[c] = -1;
        }
        if (stopped()) return;

        class_first.push_back(e);
        class_second.push_back(-1);
        class_of[e] = used;
        ++open_singletons;
        dfs(pos + 1);
        --open_singletons;
        class_of[e] = -1;
        class_first.pop_back();
        class_second.pop_back();
    }
};

}  // namespace

SolveResult chi_dom_exact(const Graph& g, const SolveBudget& budget,
                          int induced_path_cap) {
    if (budget.node_cap <= 0 || budget.time_limit_s <= 0)
        throw std::invalid_argument("budget must be positive");

    SolveResult res;
    res.lower_bounds = lower_bounds(g, induced_path_cap);
    const auto t0 = std::chrono::steady_clock::now();

    if (g.edge_count() == 0) {
        res.value = 0;
        res.stats.status = SolveStatus::exact;
        return res;
    }

    PairTable pt(g);
    const std::vector<int> order = branching_order(pt);
    const int lb = res.lower_bounds.at("overall");

    auto [greedy_value, greedy_coloring] = greedy_upper(g);

    int value = greedy_value;
    EdgeColoring coloring = greedy_coloring;
    SolveStatus status = SolveStatus::exact;

    if (greedy_value > lb) {
        Search search(pt, order, budget.node_cap, budget.time_limit_s, lb);
        search.best = greedy_value;
        search.best_class_of = greedy_coloring.colors;
        search.dfs(0);

        value = search.best;
        coloring = coloring_from_classes(search.best_class_of, search.best);
        res.stats.nodes = search.nodes;
        res.stats.node_cap_hit = search.out_of_nodes;
        res.stats.time_cap_hit = search.out_of_time;
        if (search.out_of_nodes || search.out_of_time)
            status = SolveStatus::incomplete;
    }

    res.value = value;
    res.coloring = std::move(coloring);
    res.singleton_classes = count_singletons(res.coloring);
    res.stats.status = status;
    res.stats.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ValidationReport check = validate(g, res.coloring);
    if (!check.valid())
        throw std::logic_error("solver produced an invalid coloring");
    res.certificate = *check.certificate;
    return res;
}

DominationResult gamma_numbers(const Graph& g) {
    const int m = g.edge_count();
    if (m > PairTable::max_edges)
        throw std::invalid_argument("graph exceeds the solver's edge capacity");

    DominationResult res;
    if (m == 0) {
        res.gamma_t_prime = 0;
        return res;
    }

    PairTable pt(g);
    const std::uint64_t all = (m == 64) ? ~0ull : ((1ull << m) - 1);

    bool total_feasible = true;
    for (int e = 0; e < m; ++e)
        if (pt.adjacent_mask(e) == 0) total_feasible = false;

    // covered(F) = union of open neighborhoods of F's edges
    auto cover = [&](std::uint64_t set) {
        std::uint64_t c = 0;
        for (std::uint64_t s = set; s;) {
            int e = std::countr_zero(s);
            s &= s - 1;
            c |= pt.adjacent_mask(e);
        }
        return c;
    };

    auto to_list = [](std::uint64_t set) {
        std::vector<int> out;
        for (std::uint64_t s = set; s;) {
            out.push_back(std::countr_zero(s));
            s &= s - 1;
        }
        return out;
    };

    // lexicographically least minimum subset: sizes ascending, members
    // chosen in increasing index order
    std::uint64_t found = 0;
    auto search = [&](auto&& self, std::uint64_t chosen, int next, int left,
                      auto&& feasible) -> bool {
        if (left == 0) {
            if (feasible(chosen)) {
                found = chosen;
                return true;
            }
            return false;
        }
        for (int e = next; e + left <= m; ++e) {
            if (self(self, chosen | (1ull << e), e + 1, left - 1, feasible)) return true;
        }
        return false;
    };

    auto minimize = [&](auto&& feasible) -> std::pair<int, std::uint64_t> {
        for (int size = 0; size <= m; ++size) {
            if (search(search, 0, 0, size, feasible)) return {size, found};
        }
        return {m, all};
    };

    auto [gp, gp_set] = minimize([&](std::uint64_t set) {
        return (all & ~set & ~cover(set)) == 0;  // edges outside F are covered
    });
    res.gamma_prime = gp;
    res.gamma_witness = to_list(gp_set);

    if (total_feasible) {
        auto [gt, gt_set] = minimize([&](std::uint64_t set) {
            return (all & ~cover(set)) == 0;  // every edge is covered, D included
        });
        res.gamma_t_prime = gt;
        res.gamma_t_witness = to_list(gt_set);
    }
    return res;
}

}  // namespace domedge
