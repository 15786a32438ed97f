#pragma once

#include <string>

#include <json.hpp>

#include "domedge/coloring.hpp"
#include "domedge/formulas.hpp"
#include "domedge/graph.hpp"
#include "domedge/solver.hpp"
#include "domedge/theorems.hpp"

namespace domedge {

// All report objects use nlohmann's default (key-sorted) json so that
// serialized output is byte-stable across runs. Wall-clock time is
// deliberately kept out of the JSON for the same reason; it is reported
// on the text rendering path only.

nlohmann::json solve_report_json(const Graph& g, const SolveResult& res,
                                 const DominationResult& gamma,
                                 const SolveBudget& budget);

nlohmann::json validation_report_json(const EdgeColoring& col,
                                      const ValidationReport& report);

nlohmann::json formula_result_json(const FormulaResult& res);

nlohmann::json theorem_report_json(const TheoremReport& report);

nlohmann::json sweep_result_json(const SweepResult& result);

std::string dump_sorted(const nlohmann::json& j);  // 2-space indent + '\n'

}  // namespace domedge
