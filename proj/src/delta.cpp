#include "nhlc/delta.hpp"

#include "nhlc/errors.hpp"
#include "nhlc/oracle.hpp"
#include "nhlc/parallel.hpp"

namespace nhlc {

std::vector<Tuple> decomposition_columns(const ColorAlgebra& a)
{
    std::vector<Tuple> out;
    for (const auto& t : ordered_tuples(a.dim(), a.arity()))
        if (!is_zero(a.bracket_basis(t)))
            out.push_back(t);
    return out;
}

namespace {

Matrix decomposition_matrix(const ColorAlgebra& a, const std::vector<Tuple>& columns)
{
    std::vector<Vector> values;
    for (const auto& t : columns)
        values.push_back(a.bracket_basis(t));
    return Matrix::from_columns(values, a.dim());
}

std::string kernel_label(const ColorAlgebra& a, const std::vector<Tuple>& columns, const Vector& kappa)
{
    std::string s;
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        if (kappa[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += format_scalar(kappa[i]) + "*" + format_tuple(a, columns[i]);
    }
    return s + " = 0";
}

std::string map_label(const std::string& family, int k, std::size_t index)
{
    return family + "[k=" + std::to_string(k) + ",#" + std::to_string(index) + "]";
}

}  // namespace

BracketDecomposition bracket_decomposition(const ColorAlgebra& a, const Vector& x)
{
    if (x.size() != a.dim())
        throw ShapeError("decomposition target length differs from dimension");
    const auto columns = decomposition_columns(a);
    const Matrix m = decomposition_matrix(a, columns);
    BracketDecomposition out{x, {}, {}, {}};
    if (columns.empty()) {
        if (!is_zero(x))
            throw DecompositionError("vector is not in the derived algebra (all brackets vanish)");
        return out;
    }
    auto solution = solve_particular(m, x);
    if (!solution)
        throw DecompositionError("vector " + format_vector(a, x) + " is not in the derived algebra");
    for (std::size_t i = 0; i < columns.size(); ++i)
        if ((*solution)[i] != 0) {
            out.tuples.push_back(columns[i]);
            out.coefficients.push_back((*solution)[i]);
        }
    out.kernel_basis = nullspace(m);
    return out;
}

Vector delta_slot_sum(const ColorAlgebra& a, const HomMap& d, int k, const Tuple& t)
{
    const Matrix ak = a.alpha_power(k);
    const std::size_t n = a.arity();
    std::vector<Vector> cols;
    for (std::size_t i : t)
        cols.push_back(ak.column(i));
    Vector out = zero_vector(a.dim());
    GroupElement prefix = a.group().zero();
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<Vector> args = cols;
        args[s] = d.matrix.column(t[s]);
        axpy(out, a.eps(d.degree, prefix), a.bracket(args));
        prefix = a.group().add(prefix, a.degree(t[s]));
    }
    return out;
}

DeltaEngine::DeltaEngine(const ColorAlgebra& a) : a_(a)
{
    if (!is_perfect(a_))
        throw HypothesisError("delta needs a perfect algebra");
    if (center(a_).dim() != 0)
        throw HypothesisError("delta needs a centerless algebra");
    columns_ = decomposition_columns(a_);
    const Matrix m = decomposition_matrix(a_, columns_);
    kernel_ = nullspace(m);
    for (std::size_t j = 0; j < a_.dim(); ++j) {
        auto c = solve_particular(m, unit_vector(a_.dim(), j));
        if (!c)
            throw DecompositionError("basis vector outside the derived algebra");
        basis_coeffs_.push_back(std::move(*c));
    }
}

HomMap DeltaEngine::delta_unchecked(const HomMap& d, int k) const
{
    const std::size_t m = a_.dim();
    std::vector<bool> needed(columns_.size(), false);
    for (const auto& c : basis_coeffs_)
        for (std::size_t i = 0; i < c.size(); ++i)
            needed[i] = needed[i] || c[i] != 0;
    std::vector<Vector> formula(columns_.size());
    parallel_for(columns_.size(), [&](std::size_t i) {
        if (needed[i])
            formula[i] = delta_slot_sum(a_, d, k, columns_[i]);
    });
    HomMap out{d.degree, Matrix(m, m)};
    for (std::size_t j = 0; j < m; ++j) {
        Vector image = zero_vector(m);
        for (std::size_t i = 0; i < columns_.size(); ++i)
            if (basis_coeffs_[j][i] != 0)
                axpy(image, basis_coeffs_[j][i], formula[i]);
        out.matrix.set_column(j, image);
    }
    return out;
}

HomMap DeltaEngine::delta(const HomMap& d, int k) const
{
    if (auto verdict = is_double_derivation(a_, d, k); !verdict)
        throw InputError("map is not a double derivation: " + verdict.witness);
    return delta_unchecked(d, k);
}

ValidationReport verify_well_defined(const DeltaEngine& engine, const HomMap& d, int k, const SlotFormula& formula)
{
    const auto& a = engine.algebra();
    const auto& columns = engine.columns();
    std::vector<Vector> values(columns.size());
    parallel_for(columns.size(), [&](std::size_t i) { values[i] = formula(a, d, k, columns[i]); });
    ValidationReport report;
    for (const auto& kappa : engine.kernel()) {
        Vector sum = zero_vector(a.dim());
        for (std::size_t i = 0; i < kappa.size(); ++i)
            if (kappa[i] != 0)
                axpy(sum, kappa[i], values[i]);
        if (!is_zero(sum))
            report.add("delta.well_defined", kernel_label(a, columns, kappa), "0", format_vector(a, sum));
    }
    return report;
}

ValidationReport verify_well_defined_all(const ColorAlgebra& a, int k_max)
{
    DeltaEngine engine(a);
    ValidationReport report;
    for (int k = 0; k <= k_max; ++k) {
        const auto maps = double_derivation_space(a, k).maps_at(k);
        for (std::size_t i = 0; i < maps.size(); ++i) {
            auto r = verify_well_defined(engine, maps[i], k);
            for (auto& v : r.violations)
                v.witness = map_label("D", k, i) + ": " + v.witness;
            report.merge(r);
        }
    }
    return report;
}

ValidationReport verify_delta_correction(const ColorAlgebra& a, int k_max)
{
    DeltaEngine engine(a);
    ValidationReport report;
    const std::size_t n = a.arity(), m = a.dim();
    for (int k = 0; k <= k_max; ++k) {
        const Matrix ak = a.alpha_power(k);
        const auto maps = double_derivation_space(a, k).maps_at(k);
        for (std::size_t index = 0; index < maps.size(); ++index) {
            const HomMap& d = maps[index];
            const std::string label = map_label("D", k, index);
            const HomMap delta = engine.delta_unchecked(d, k);
            if (auto verdict = is_double_derivation(a, delta, k); !verdict)
                report.add("delta_correction.delta_is_double_derivation", label, "double derivation", verdict.witness);

            const HomMap e{d.degree, d.matrix - delta.matrix};
            for (const auto& t : nondecreasing_tuples(m, n)) {
                const Vector lhs = e.matrix * a.bracket_basis(t);
                GroupElement prefix = a.group().zero();
                for (std::size_t i = 0; i < n; ++i) {
                    std::vector<Vector> args;
                    for (std::size_t j = 0; j < n; ++j)
                        args.push_back(j == i ? e.matrix.column(t[j]) : ak.column(t[j]));
                    Vector rhs = a.bracket(args);
                    Scalar sign = -a.eps(d.degree, prefix);
                    for (auto& x : rhs)
                        x *= sign;
                    if (lhs != rhs)
                        report.add("delta_correction.single_slot", label + " " + format_tuple(a, t) + " slot " +
                                   std::to_string(i + 1), format_vector(a, rhs), format_vector(a, lhs));
                    prefix = a.group().add(prefix, a.degree(t[i]));
                }
            }

            const HomMap delta_e = engine.delta_unchecked(e, k);
            if (!(delta_e.matrix == Scalar(-static_cast<long>(n)) * e.matrix))
                report.add("delta_correction.delta_of_difference", label, "-n (D - delta_D)", "different matrix");
        }
    }
    return report;
}

ValidationReport verify_delta_on_derivations(const ColorAlgebra& a, int k_max)
{
    DeltaEngine engine(a);
    ValidationReport report;
    const std::size_t n = a.arity();
    const auto fix = fixed_basis(a);
    const auto arg_tuples = nondecreasing_tuples(fix.size(), n - 1);
    for (int k = 0; k <= k_max; ++k) {
        const auto maps = double_derivation_space(a, k).maps_at(k);
        for (std::size_t index = 0; index < maps.size(); ++index) {
            const HomMap& d = maps[index];
            const std::string label = map_label("D", k, index);
            const HomMap delta = engine.delta_unchecked(d, k);
            const bool d_is_der = static_cast<bool>(is_derivation(a, d, k));
            const bool delta_is_der = static_cast<bool>(is_derivation(a, delta, k));
            if (d_is_der != delta_is_der)
                report.add("delta_derivations.derivation_iff", label, d_is_der ? "delta_D derivation" : "delta_D not derivation",
                           delta_is_der ? "derivation" : "not a derivation");
            if (d_is_der && !(delta.matrix == d.matrix))
                report.add("delta_derivations.delta_fixes_derivations", label, "delta_D = D", "different matrix");

            for (int s = 0; k + s <= k_max; ++s)
                for (const auto& t : arg_tuples) {
                    std::vector<Vector> xs;
                    for (std::size_t i : t)
                        xs.push_back(fix[i]);
                    const HomMap lhs = color_commutator(d, ad_map(a, xs, s), a.bicharacter());

                    std::vector<Vector> first = xs;
                    first[0] = delta.matrix * xs[0];
                    Matrix rhs = ad_map(a, first, k + s).matrix;
                    GroupElement prefix = a.group().zero();
                    for (std::size_t j = 0; j + 1 < n; ++j) {
                        if (j > 0) {
                            std::vector<Vector> args = xs;
                            args[j] = d.matrix * xs[j];
                            rhs = rhs + a.eps(d.degree, prefix) * ad_map(a, args, k + s).matrix;
                        }
                        prefix = a.group().add(prefix, *a.homogeneous_degree(xs[j]));
                    }
                    if (!(lhs.matrix == rhs)) {
                        std::string args;
                        for (const auto& x : xs)
                            args += (args.empty() ? "" : ", ") + format_vector(a, x);
                        report.add("delta_derivations.commutator_formula", label + " ad_" + std::to_string(s) + "(" + args + ")",
                                   "formula", "different matrix");
                    }
                }
        }
    }
    return report;
}

ValidationReport verify_delta_homomorphism(const ColorAlgebra& a, int k_max)
{
    DeltaEngine engine(a);
    ValidationReport report;
    const auto space = collect_spaces(SpaceKind::dder, a, 0, k_max);
    std::vector<std::vector<HomMap>> deltas;
    for (int k = 0; k <= k_max; ++k) {
        auto& row = deltas.emplace_back();
        for (const auto& d : space.maps_at(k))
            row.push_back(engine.delta_unchecked(d, k));
    }
    for (int k = 0; k <= k_max; ++k)
        for (int s = 0; k + s <= k_max; ++s) {
            const auto left = space.maps_at(k), right = space.maps_at(s);
            for (std::size_t i = 0; i < left.size(); ++i)
                for (std::size_t j = 0; j < right.size(); ++j) {
                    const HomMap c = color_commutator(left[i], right[j], a.bicharacter());
                    const HomMap lhs = engine.delta_unchecked(c, k + s);
                    const HomMap rhs = color_commutator(deltas[static_cast<std::size_t>(k)][i],
                                                        deltas[static_cast<std::size_t>(s)][j], a.bicharacter());
                    if (!(lhs.matrix == rhs.matrix))
                        report.add("delta_homomorphism.bracket", map_label("D", k, i) + "," + map_label("D", s, j),
                                   "[delta_D1, delta_D2]", "different matrix");
                }
        }
    return report;
}

GradedMapSpace centralizer_in_dder(const ColorAlgebra& a, int k_max, const std::vector<HomMap>& generators)
{
    const std::size_t m = a.dim();
    GradedMapSpace out{SpaceKind::centralizer, m, {}};
    for (int k = 0; k <= k_max; ++k) {
        for (const auto& block : double_derivation_space(a, k).blocks) {
            // Column i stacks [D_i, g] over all generators g.
            std::vector<Vector> columns;
            for (const auto& d : block.basis) {
                Vector stacked;
                for (const auto& g : generators) {
                    const HomMap c = color_commutator(d, g, a.bicharacter());
                    const auto& flat = c.matrix.flat();
                    stacked.insert(stacked.end(), flat.begin(), flat.end());
                }
                columns.push_back(std::move(stacked));
            }
            std::vector<Vector> kernel;
            if (generators.empty()) {
                for (std::size_t i = 0; i < block.basis.size(); ++i)
                    kernel.push_back(unit_vector(block.basis.size(), i));
            } else {
                kernel = nullspace(Matrix::from_columns(columns, m * m * generators.size()));
            }
            MapBlock result{k, block.degree, {}};
            for (const auto& c : kernel) {
                Matrix sum(m, m);
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (c[i] != 0)
                        sum = sum + c[i] * block.basis[i].matrix;
                result.basis.push_back({block.degree, sum});
            }
            if (!result.basis.empty())
                out.blocks.push_back(std::move(result));
        }
    }
    return out;
}

GradedMapSpace centralizer_inn_in_dder(const ColorAlgebra& a, int k_max)
{
    if (!is_perfect(a))
        throw HypothesisError("algebra is not perfect");
    std::vector<HomMap> generators;
    for (int s = 0; s <= k_max; ++s)
        for (const auto& d : inner_space(a, s).maps_at(s))
            generators.push_back(d);
    return centralizer_in_dder(a, k_max, generators);
}

}  // namespace nhlc
