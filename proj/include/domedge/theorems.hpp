#pragma once

#include <map>
#include <string>
#include <vector>

#include "domedge/graph.hpp"
#include "domedge/solver.hpp"

namespace domedge {

enum class CheckStatus { exact, incomplete, hypotheses_not_met };

const char* to_string(CheckStatus s);

// One machine-checked inequality/equality instance. For sandwich bounds
// lhs/rhs are the outer bounds and the middle value sits in `witness`.
// `holds` is meaningful only when status == exact: an incomplete solve
// never decides a theorem either way.
struct TheoremReport {
    std::string theorem_id;
    std::string instance;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
    CheckStatus status = CheckStatus::exact;
    std::map<std::string, long long> witness;
    std::string detail;  // rendered relation, e.g. "1 <= 2 <= 5"
};

struct CheckOptions {
    SolveBudget budget;
    int induced_path_cap = 10;
    int oracle_cap = 12;  // for checks that enumerate optimal colorings
};

// Theorem ids and the shape of check they dispatch to:
//   single graph:       T-delta, T-halfm, T-gammat, T-indpath
//   graph + index:      T-delv (vertex), T-dele, T-contract (edge)
//   graph pair:         T-join, T-corona-lb, T-corona-ub, T-corona-eq, T-corona-t
//   graph + k:          T-sub-m, T-sub-sandwich, T-sub-mod0, T-sub-mod123,
//                       T-sub-mono (k vs k+1); T-sub-23 ignores k
//   two integers:       T-realize-a, T-realize-b (a, b); T-sub-star (n, k)
TheoremReport check_graph(const std::string& id, const Graph& g,
                          const CheckOptions& opt = {});
TheoremReport check_graph_index(const std::string& id, const Graph& g, int index,
                                const CheckOptions& opt = {});
TheoremReport check_pair(const std::string& id, const Graph& g, const Graph& h,
                         const CheckOptions& opt = {});
TheoremReport check_subdivision(const std::string& id, const Graph& g, int k,
                                const CheckOptions& opt = {});
TheoremReport check_params(const std::string& id, int a, int b,
                           const CheckOptions& opt = {});

bool known_theorem_id(const std::string& id);

struct SweepSpec {
    int edge_cap = 14;       // family and operator instances checked exactly
    int spot_edge_cap = 18;  // explicitly listed joins/coronas/subdivisions
    CheckOptions options;
    bool families = true;        // bound suite over all family instances
    bool operators = true;       // vertex/edge deletion and contraction
    std::vector<int> subdivision_k = {2, 3, 4};
    bool joins = true;           // all pairs of connected graphs with <= 3 edges
    bool coronas = true;         // G in {P2,P3,C3}, H in {K1,K2,P3}
    bool realizations = true;    // the realizability constructions
    bool printed_formula_scan = true;  // printed path/cycle branch vs computed
    bool gap_growth = true;      // wheel-hub deletion gap, d = 4..8
};

struct SweepSummary {
    int holds = 0;
    int fails = 0;
    int incomplete = 0;
    int hypotheses_not_met = 0;
};

struct SweepResult {
    std::vector<TheoremReport> reports;
    SweepSummary summary;
    // Exact reports that do not hold (refutation data, a first-class output).
    std::vector<TheoremReport> findings;
};

SweepResult sweep(const SweepSpec& spec = {});

}  // namespace domedge
