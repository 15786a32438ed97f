#pragma once

#include <optional>
#include <string>

#include "domedge/families.hpp"

namespace domedge {

struct FormulaResult {
    std::optional<int> value;  // present iff applicable
    bool applicable = false;
    std::string source;  // formula tag, e.g. "path-cycle-m", "complete"
    std::string note;    // discrepancy marker or special-case remark
};

// Closed form for paths and cycles keyed on edge count:
//   value(m) = m/2 if m % 4 == 0, else floor(m/2) + 1;  value(0) = 0.
// This is the form every verifiable point value satisfies; see
// closed_form's note field for where the printed vertex-count condition
// diverges.
int path_value_by_edges(int m);

// The literal branch arithmetic printed for paths, keyed on the vertex
// count n (valid per its own statement only for n >= 5):
//   (n-1)/2 if n % 4 == 0 (never an integer), floor((n-1)/2)+1 otherwise.
// Returns nullopt when the selected branch is not an integer; `rendered`
// receives the exact arithmetic either way.
std::optional<int> printed_path_value(int n, std::string* rendered = nullptr);

// Closed-form value for a family instance, or not-applicable when the
// instance falls outside every known formula's range.
FormulaResult closed_form(const FamilySpec& spec);

// n * value(P_{k+1}) for the k-subdivision of the star K_{1,n}; applicable
// for n >= 3 and k >= 3.
FormulaResult star_subdivision_form(int n, int k);

}  // namespace domedge
