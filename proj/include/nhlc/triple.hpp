#pragma once

#include <string>
#include <vector>

#include "nhlc/algebra.hpp"
#include "nhlc/report.hpp"
#include "nhlc/spaces.hpp"

namespace nhlc {

/// Alpha^k triple derivations of an arity-2 algebra, per candidate degree.
/// Throws ArityError unless n = 2.
GradedMapSpace triple_derivation_space(const ColorAlgebra& a2, int k);

/// Triple derivations of the double-derivation algebra map Inn into Inn, and one
/// vanishing on Inn is zero. Throws HypothesisError unless A is centerless and perfect
/// with nonzero Inn, TruncationError/ValidationError from the map algebra construction.
ValidationReport verify_tder_invariance(const ColorAlgebra& a, int k_max);

struct TderDimensionRow {
    int k;
    std::size_t der_dim;
    std::size_t tder_dim;
    bool der_contained;
    bool equal;
};

/// Der against TDer for k in [0, k_max]. Der not contained in TDer is always a
/// violation; strict containment is a violation only inside the theorem hypotheses,
/// otherwise it becomes a notice.
struct TderComparison {
    bool in_hypothesis = true;
    std::vector<TderDimensionRow> rows;
    ValidationReport report;
    std::vector<std::string> notices;
};
TderComparison verify_tder_equals_der(const ColorAlgebra& a2, int k_max, bool in_hypothesis);

}  // namespace nhlc
