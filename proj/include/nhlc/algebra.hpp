#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nhlc/grading.hpp"
#include "nhlc/linalg.hpp"
#include "nhlc/report.hpp"

namespace nhlc {

using Tuple = std::vector<std::size_t>;

/// Non-decreasing tuples of length len over [0, m), lexicographic.
std::vector<Tuple> nondecreasing_tuples(std::size_t m, std::size_t len);
/// All ordered tuples of length len over [0, m), lexicographic.
std::vector<Tuple> ordered_tuples(std::size_t m, std::size_t len);

struct BasisElement {
    std::string name;
    GroupElement degree;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Homogeneous linear endomorphism of L; matrix columns are images of basis vectors.
struct HomMap {
    GroupElement degree;
    Matrix matrix;
};

/// Finite-dimensional n-ary Hom-Lie color algebra over Q given by structure constants.
///
/// Constants live on non-decreasing tuples only; any other order is reached through
/// normalize_tuple. Construction checks shapes, validate_algebra checks the axioms.
class ColorAlgebra {
public:
    ColorAlgebra(std::string name, std::size_t arity, Bicharacter eps, std::vector<BasisElement> basis,
                 Matrix alpha, std::map<Tuple, Vector> constants);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }
    std::size_t dim() const { return basis_.size(); }
    const GradingGroup& group() const { return eps_.group(); }
    const Bicharacter& bicharacter() const { return eps_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const GroupElement& degree(std::size_t i) const { return basis_[i].degree; }
    const Matrix& alpha() const { return alpha_; }
    /// Nonzero constants only.
    const std::map<Tuple, Vector>& constants() const { return constants_; }

    Scalar eps(const GroupElement& g, const GroupElement& h) const { return eps_(g, h); }
    /// Sum of the degrees of the listed basis elements.
    GroupElement degree_sum(const Tuple& indices) const;

    /// Sorts indices, accumulating -eps per adjacent swap; nullopt when the bracket
    /// vanishes by skew-symmetry (equal adjacent indices with eps(g,g) = 1).
    std::optional<std::pair<Tuple, Scalar>> normalize_tuple(const Tuple& indices) const;

    /// Bracket of basis vectors in any order.
    Vector bracket_basis(const Tuple& indices) const;
    /// Multilinear bracket of coordinate vectors.
    Vector bracket(const std::vector<Vector>& args) const;
    /// out += coefficient * [*args[0], ..., *args[n-1]] without intermediate vectors.
    void bracket_accumulate(Vector& out, const Scalar& coefficient, std::span<const Vector* const> args) const;

    /// Degree of a homogeneous vector (zero vector counts as degree 0); nullopt otherwise.
    std::optional<GroupElement> homogeneous_degree(const Vector& v) const;

    /// alpha^k for k >= 0; k = -1 needs invertible alpha (InvertibilityError otherwise).
    Matrix alpha_power(int k) const;

    friend bool operator==(const ColorAlgebra& a, const ColorAlgebra& b);

private:
    std::string name_;
    std::size_t arity_;
    Bicharacter eps_;
    std::vector<BasisElement> basis_;
    Matrix alpha_;
    std::map<Tuple, Vector> constants_;

    /// Bracket of one ordered basis tuple as a signed sparse vector.
    struct Entry {
        Scalar sign;
        long value = -1;  // index into sparse_values_
    };
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_values_;
    std::map<Tuple, long> sparse_index_;
    std::vector<Entry> table_;  // indexed by ordered tuple in base m; empty when too large
    bool use_table_ = false;

    void build_table();
    Entry lookup(const Tuple& indices) const;
};

/// Human-readable "[e1,e2,e3]" for a basis tuple.
std::string format_tuple(const ColorAlgebra& a, const Tuple& indices);
std::string format_vector(const ColorAlgebra& a, const Vector& v);

/// True when the matrix only maps degree g into degree g + d.
bool respects_degree(const ColorAlgebra& a, const Matrix& m, const GroupElement& d);

/// Checks grading compatibility, skew-symmetry of stored constants, the twisted
/// Nambu-Filippov identity on all ordered basis tuples, alpha even, alpha multiplicative.
ValidationReport validate_algebra(const ColorAlgebra& a);

}  // namespace nhlc
