#pragma once

#include <string>

#include "nhlc/algebra.hpp"

namespace nhlc {

/// Pointwise verdict; witness names the first failing check.
struct OracleVerdict {
    bool ok = true;
    std::string witness;

    explicit operator bool() const { return ok; }
};

enum class TupleOrder {
    nondecreasing,  // canonical test set
    ordered,        // every ordering, for enumeration-independence checks
};

/// Leibniz rule with alpha^k on the untouched slots, plus block structure and D alpha = alpha D.
OracleVerdict is_derivation(const ColorAlgebra& a, const HomMap& d, int k,
                            TupleOrder order = TupleOrder::nondecreasing);

/// Leibniz rule on nested brackets [x_1..x_{n-1}, [y_1..y_n]]. Throws ArityError for n < 3.
OracleVerdict is_double_derivation(const ColorAlgebra& a, const HomMap& d, int k,
                                   TupleOrder order = TupleOrder::nondecreasing);

/// Leibniz rule on [x, [y, z]] over all basis triples. Throws ArityError unless n = 2.
OracleVerdict is_triple_derivation(const ColorAlgebra& a, const HomMap& d, int k);

}  // namespace nhlc
