#include "nhlc/spaces.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "map_system.hpp"
#include "nhlc/errors.hpp"
#include "nhlc/oracle.hpp"
#include "nhlc/parallel.hpp"

namespace nhlc {

std::string to_string(SpaceKind kind)
{
    switch (kind) {
    case SpaceKind::der:
        return "der";
    case SpaceKind::dder:
        return "dder";
    case SpaceKind::inner:
        return "inner";
    case SpaceKind::tder:
        return "tder";
    case SpaceKind::centralizer:
        return "centralizer";
    }
    return "?";
}

std::size_t GradedMapSpace::dim() const
{
    std::size_t total = 0;
    for (const auto& b : blocks)
        total += b.basis.size();
    return total;
}

std::size_t GradedMapSpace::dim_at(int k) const
{
    std::size_t total = 0;
    for (const auto& b : blocks)
        if (b.k == k)
            total += b.basis.size();
    return total;
}

std::vector<HomMap> GradedMapSpace::maps_at(int k) const
{
    std::vector<HomMap> out;
    for (const auto& b : blocks)
        if (b.k == k)
            out.insert(out.end(), b.basis.begin(), b.basis.end());
    return out;
}

std::vector<int> GradedMapSpace::ks() const
{
    std::vector<int> out;
    for (const auto& b : blocks)
        if (out.empty() || out.back() != b.k)
            out.push_back(b.k);
    return out;
}

Subspace GradedMapSpace::span_at(int k) const
{
    std::vector<Vector> flat;
    for (const auto& d : maps_at(k))
        flat.push_back(d.matrix.flat());
    return Subspace::span(ambient_dim * ambient_dim, flat);
}

void GradedMapSpace::append(const GradedMapSpace& other)
{
    if (other.kind != kind || other.ambient_dim != ambient_dim)
        throw InputError("cannot merge map spaces of different kinds");
    blocks.insert(blocks.end(), other.blocks.begin(), other.blocks.end());
    std::stable_sort(blocks.begin(), blocks.end(), [](const MapBlock& x, const MapBlock& y) {
        return x.k != y.k ? x.k < y.k : x.degree < y.degree;
    });
}

std::vector<GroupElement> candidate_degrees(const ColorAlgebra& a)
{
    std::set<GroupElement> degrees{a.group().zero()};
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t i = 0; i < a.dim(); ++i)
            degrees.insert(a.group().subtract(a.degree(j), a.degree(i)));
    return {degrees.begin(), degrees.end()};
}

using namespace detail;

GradedMapSpace derivation_space(const ColorAlgebra& a, int k)
{
    const Matrix ak = a.alpha_power(k);
    const auto ak_cols = columns_of(ak);
    const std::size_t m = a.dim(), n = a.arity();
    const auto tuples = nondecreasing_tuples(m, n);
    return space_by_degree(SpaceKind::der, a, k, [&](const GroupElement& d) {
        Unknowns u(a, d);
        if (u.count() == 0)
            return std::vector<HomMap>{};
        std::vector<Equations> blocks(tuples.size());
        parallel_for(tuples.size(), [&](std::size_t ti) {
            const Tuple& t = tuples[ti];
            Equations e(m, u.count());
            add_map_applied(e, u, a.bracket_basis(t), Scalar(1));
            GroupElement prefix = a.group().zero();
            for (std::size_t s = 0; s < n; ++s) {
                std::vector<Vector> args;
                for (std::size_t i : t)
                    args.push_back(ak_cols[i]);
                add_slot_term(e, u, t[s], -a.eps(d, prefix), [&](std::size_t j) {
                    args[s] = unit_vector(m, j);
                    return a.bracket(args);
                });
                prefix = a.group().add(prefix, a.degree(t[s]));
            }
            blocks[ti] = std::move(e);
        });
        return solve_maps(u, d, commutation_equations(u, a.alpha()), std::move(blocks));
    });
}

GradedMapSpace double_derivation_space(const ColorAlgebra& a, int k)
{
    const std::size_t m = a.dim(), n = a.arity();
    if (n < 3)
        throw ArityError("double derivations need arity at least 3");
    const auto ak_cols = columns_of(a.alpha_power(k));
    const auto units = columns_of(Matrix::identity(m));
    const auto xs = nondecreasing_tuples(m, n - 1);
    const auto ys = nondecreasing_tuples(m, n);
    const auto& g = a.group();

    // Per y: [y], [alpha^k y] and slot[s][j] = [alpha^k y.., b_j at s, ..]; independent of the degree.
    struct YTerms {
        Vector bracket, bracket_ak;
        std::vector<std::vector<Vector>> slot;
    };
    std::vector<YTerms> y_terms(ys.size());
    parallel_for(ys.size(), [&](std::size_t yi) {
        const Tuple& y = ys[yi];
        YTerms& t = y_terms[yi];
        std::vector<const Vector*> args(n);
        for (std::size_t i = 0; i < n; ++i)
            args[i] = &ak_cols[y[i]];
        t.bracket = a.bracket_basis(y);
        t.bracket_ak = zero_vector(m);
        a.bracket_accumulate(t.bracket_ak, Scalar(1), args);
        t.slot.assign(n, std::vector<Vector>(m));
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t j = 0; j < m; ++j) {
                args[s] = &units[j];
                t.slot[s][j] = zero_vector(m);
                a.bracket_accumulate(t.slot[s][j], Scalar(1), args);
                args[s] = &ak_cols[y[s]];
            }
    });

    return space_by_degree(SpaceKind::dder, a, k, [&](const GroupElement& d) {
        Unknowns u(a, d);
        if (u.count() == 0)
            return std::vector<HomMap>{};
        std::vector<Equations> blocks(xs.size() * ys.size());
        parallel_for(blocks.size(), [&](std::size_t task) {
            const Tuple& x = xs[task / ys.size()];
            const Tuple& y = ys[task % ys.size()];
            const YTerms& t = y_terms[task % ys.size()];
            Equations e(m, u.count());
            std::vector<const Vector*> args(n);
            auto bracket_of = [&] {
                Vector v = zero_vector(m);
                a.bracket_accumulate(v, Scalar(1), args);
                return v;
            };

            for (std::size_t i = 0; i + 1 < n; ++i)
                args[i] = &units[x[i]];
            args[n - 1] = &t.bracket;
            add_map_applied(e, u, bracket_of(), Scalar(1));

            for (std::size_t i = 0; i + 1 < n; ++i)
                args[i] = &ak_cols[x[i]];
            GroupElement prefix = g.zero();
            args[n - 1] = &t.bracket_ak;
            for (std::size_t s = 0; s + 1 < n; ++s) {
                add_slot_term(e, u, x[s], -a.eps(d, prefix), [&](std::size_t j) {
                    args[s] = &units[j];
                    Vector v = bracket_of();
                    args[s] = &ak_cols[x[s]];
                    return v;
                });
                prefix = g.add(prefix, a.degree(x[s]));
            }
            for (std::size_t s = 0; s < n; ++s) {
                add_slot_term(e, u, y[s], -a.eps(d, prefix), [&](std::size_t j) {
                    args[n - 1] = &t.slot[s][j];
                    return bracket_of();
                });
                prefix = g.add(prefix, a.degree(y[s]));
            }
            blocks[task] = std::move(e);
        });
        return solve_maps(u, d, commutation_equations(u, a.alpha()), std::move(blocks));
    });
}

std::vector<Vector> fixed_basis(const ColorAlgebra& a)
{
    const std::size_t m = a.dim();
    std::set<GroupElement> degrees;
    for (const auto& b : a.basis())
        degrees.insert(b.degree);
    std::vector<Vector> out;
    for (const auto& g : degrees) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m; ++i)
            if (a.degree(i) == g)
                idx.push_back(i);
        Matrix block(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                block(r, c) = a.alpha()(idx[r], idx[c]) - (r == c ? 1 : 0);
        for (const auto& v : nullspace(block)) {
            Vector full = zero_vector(m);
            for (std::size_t r = 0; r < idx.size(); ++r)
                full[idx[r]] = v[r];
            out.push_back(std::move(full));
        }
    }
    return out;
}

HomMap ad_map(const ColorAlgebra& a, const std::vector<Vector>& xs, int k)
{
    if (k < 0)
        throw InputError("inner maps need k >= 0");
    if (xs.size() + 1 != a.arity())
        throw ArityError("ad takes " + std::to_string(a.arity() - 1) + " arguments");
    GroupElement degree = a.group().zero();
    for (const auto& x : xs) {
        if (x.size() != a.dim())
            throw ShapeError("ad argument length differs from dimension");
        auto g = a.homogeneous_degree(x);
        if (!g)
            throw InputError("ad argument is not homogeneous");
        if (a.alpha() * x != x)
            throw InputError("ad argument is not fixed by alpha");
        degree = a.group().add(degree, *g);
    }
    const Matrix ak = a.alpha_power(k);
    HomMap out{degree, Matrix(a.dim(), a.dim())};
    std::vector<Vector> args = xs;
    args.emplace_back();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        args.back() = ak.column(i);
        out.matrix.set_column(i, a.bracket(args));
    }
    return out;
}

std::vector<InnerGenerator> inner_generators(const ColorAlgebra& a, int k)
{
    const auto fix = fixed_basis(a);
    std::vector<InnerGenerator> out;
    for (const auto& t : nondecreasing_tuples(fix.size(), a.arity() - 1)) {
        std::vector<Vector> xs;
        for (std::size_t i : t)
            xs.push_back(fix[i]);
        HomMap d = ad_map(a, xs, k);
        if (!d.matrix.is_zero())
            out.push_back({std::move(xs), std::move(d)});
    }
    return out;
}

GradedMapSpace inner_space(const ColorAlgebra& a, int k)
{
    const auto generators = inner_generators(a, k);
    const std::size_t m = a.dim();
    return space_by_degree(SpaceKind::inner, a, k, [&](const GroupElement& d) {
        std::vector<Vector> flat;
        for (const auto& gen : generators)
            if (gen.map.degree == d)
                flat.push_back(gen.map.matrix.flat());
        std::vector<HomMap> basis;
        const Subspace span = Subspace::span(m * m, flat);
        for (const auto& v : span.basis())
            basis.push_back({d, Matrix::unflatten(v, m, m)});
        return basis;
    });
}

GradedMapSpace collect_spaces(SpaceKind kind, const ColorAlgebra& a, int k_min, int k_max)
{
    GradedMapSpace all{kind, a.dim(), {}};
    for (int k = k_min; k <= k_max; ++k) {
        switch (kind) {
        case SpaceKind::der:
            all.append(derivation_space(a, k));
            break;
        case SpaceKind::dder:
            all.append(double_derivation_space(a, k));
            break;
        case SpaceKind::inner:
            all.append(inner_space(a, k));
            break;
        case SpaceKind::tder:
        case SpaceKind::centralizer:
            throw InputError(to_string(kind) + " spaces are not collected here");
        }
    }
    return all;
}

// ---------------------------------------------------------------------------

Subspace derived_subalgebra(const ColorAlgebra& a)
{
    std::vector<Vector> values;
    for (const auto& [t, v] : a.constants())
        values.push_back(v);
    return Subspace::span(a.dim(), values);
}

bool is_perfect(const ColorAlgebra& a)
{
    return derived_subalgebra(a).dim() == a.dim();
}

Subspace center(const ColorAlgebra& a)
{
    std::vector<Vector> everything;
    for (std::size_t i = 0; i < a.dim(); ++i)
        everything.push_back(unit_vector(a.dim(), i));
    return centralizer(a, everything);
}

Subspace centralizer(const ColorAlgebra& a, const std::vector<Vector>& spanning)
{
    const std::size_t m = a.dim(), n = a.arity();
    RowReducer reducer(m);
    const auto rest = nondecreasing_tuples(m, n - 2);
    for (const auto& s : spanning) {
        if (s.size() != m)
            throw ShapeError("centralizer vector length differs from dimension");
        for (const auto& t : rest) {
            std::vector<Vector> args{Vector(), s};
            for (std::size_t i : t)
                args.push_back(unit_vector(m, i));
            Matrix block(m, m);
            for (std::size_t i = 0; i < m; ++i) {
                args[0] = unit_vector(m, i);
                block.set_column(i, a.bracket(args));
            }
            for (std::size_t r = 0; r < m && reducer.rank() < m; ++r)
                reducer.add_row(block.row(r));
        }
    }
    return Subspace::span(m, reducer.nullspace());
}

HomMap color_commutator(const HomMap& d1, const HomMap& d2, const Bicharacter& eps)
{
    return {eps.group().add(d1.degree, d2.degree),
            d1.matrix * d2.matrix - eps(d1.degree, d2.degree) * (d2.matrix * d1.matrix)};
}

HomMap twist_map(const HomMap& d, const Matrix& alpha)
{
    return {d.degree, d.matrix * alpha};
}

// ---------------------------------------------------------------------------

namespace {

std::string map_label(const std::string& family, int k, std::size_t index)
{
    return family + "[k=" + std::to_string(k) + ",#" + std::to_string(index) + "]";
}

}  // namespace

ValidationReport verify_closure_theorem(const ColorAlgebra& a, int k_max)
{
    if (a.arity() < 3)
        throw ArityError("double derivations need arity at least 3");
    ValidationReport report;
    const auto space = collect_spaces(SpaceKind::dder, a, 0, k_max + 1);
    std::vector<Subspace> spans;
    for (int k = 0; k <= k_max + 1; ++k)
        spans.push_back(space.span_at(k));

    for (int k = 0; k <= k_max; ++k) {
        const auto maps = space.maps_at(k);
        for (std::size_t i = 0; i < maps.size(); ++i) {
            HomMap twisted = twist_map(maps[i], a.alpha());
            auto verdict = is_double_derivation(a, twisted, k + 1);
            if (!verdict)
                report.add("closure.twist_oracle", map_label("D", k, i), "double derivation at k+1", verdict.witness);
            if (!spans[static_cast<std::size_t>(k + 1)].contains(twisted.matrix.flat()))
                report.add("closure.twist_span", map_label("D", k, i), "D alpha in D_{k+1}", "outside span");
        }
    }
    for (int k = 0; k <= k_max; ++k)
        for (int s = k; k + s <= k_max; ++s) {
            const auto left = space.maps_at(k), right = space.maps_at(s);
            for (std::size_t i = 0; i < left.size(); ++i)
                for (std::size_t j = (k == s ? i : 0); j < right.size(); ++j) {
                    HomMap c = color_commutator(left[i], right[j], a.bicharacter());
                    const std::string witness = map_label("D", k, i) + "," + map_label("D", s, j);
                    auto verdict = is_double_derivation(a, c, k + s);
                    if (!verdict)
                        report.add("closure.commutator_oracle", witness, "double derivation at k+s", verdict.witness);
                    if (!spans[static_cast<std::size_t>(k + s)].contains(c.matrix.flat()))
                        report.add("closure.commutator_span", witness, "[D1,D2] in D_{k+s}", "outside span");
                }
        }
    return report;
}

ValidationReport verify_inn_ideal(const ColorAlgebra& a, int k_max)
{
    if (!is_perfect(a))
        throw HypothesisError("algebra is not perfect; inner derivations need not form an ideal");
    ValidationReport report;
    const auto inner = collect_spaces(SpaceKind::inner, a, 0, k_max + 1);
    const auto dder = collect_spaces(SpaceKind::dder, a, 0, k_max);
    std::vector<Subspace> spans;
    for (int k = 0; k <= k_max + 1; ++k)
        spans.push_back(inner.span_at(k));

    for (int k = 0; k <= k_max; ++k) {
        const auto ads = inner.maps_at(k);
        for (std::size_t i = 0; i < ads.size(); ++i)
            if (!spans[static_cast<std::size_t>(k + 1)].contains(twist_map(ads[i], a.alpha()).matrix.flat()))
                report.add("inn_ideal.twist", map_label("ad", k, i), "ad alpha in Inn_{k+1}", "outside span");
    }
    for (int s = 0; s <= k_max; ++s) {
        const auto ds = dder.maps_at(s);
        for (int k = 0; k + s <= k_max; ++k) {
            const auto ads = inner.maps_at(k);
            for (std::size_t i = 0; i < ds.size(); ++i)
                for (std::size_t j = 0; j < ads.size(); ++j) {
                    HomMap c = color_commutator(ds[i], ads[j], a.bicharacter());
                    if (!spans[static_cast<std::size_t>(k + s)].contains(c.matrix.flat()))
                        report.add("inn_ideal.commutator", map_label("D", s, i) + "," + map_label("ad", k, j),
                                   "[D,ad] in Inn_{k+s}", "outside span");
                }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

std::optional<Vector> MapAlgebra::coordinates(const HomMap& d) const
{
    const std::size_t m2 = algebra.dim();
    if (m2 == 0)
        return d.matrix.is_zero() ? std::optional<Vector>(Vector{}) : std::nullopt;
    const std::size_t ambient = maps.front().matrix.rows();
    std::vector<Vector> columns;
    for (const auto& basis_map : maps)
        columns.push_back(basis_map.matrix.flat());
    return solve_particular(Matrix::from_columns(columns, ambient * ambient), d.matrix.flat());
}

HomMap MapAlgebra::map_of(const Vector& coords) const
{
    if (coords.size() != maps.size())
        throw ShapeError("coordinate vector length differs from map algebra dimension");
    GroupElement degree = algebra.group().zero();
    Matrix sum = maps.empty() ? Matrix() : Matrix(maps.front().matrix.rows(), maps.front().matrix.cols());
    bool first = true;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (coords[i] == 0)
            continue;
        if (!first && maps[i].degree != degree)
            throw InputError("coordinates mix map degrees");
        degree = maps[i].degree;
        first = false;
        sum = sum + coords[i] * maps[i].matrix;
    }
    return {degree, sum};
}

MapAlgebra maps_as_color_algebra(const GradedMapSpace& space, const ColorAlgebra& a, std::string name)
{
    const std::size_t m = a.dim();
    std::set<GroupElement> degrees;
    for (const auto& b : space.blocks)
        degrees.insert(b.degree);

    std::vector<HomMap> maps;
    std::vector<BasisElement> basis;
    for (const auto& d : degrees) {
        std::vector<Vector> flat;
        for (const auto& b : space.blocks)
            if (b.degree == d)
                for (const auto& map : b.basis)
                    flat.push_back(map.matrix.flat());
        const Subspace span = Subspace::span(m * m, flat);
        for (const auto& v : span.basis()) {
            maps.push_back({d, Matrix::unflatten(v, m, m)});
            basis.push_back({"D" + std::to_string(maps.size()), d});
        }
    }

    const std::size_t dim = maps.size();
    std::vector<Vector> columns;
    for (const auto& map : maps)
        columns.push_back(map.matrix.flat());
    const Matrix embed = Matrix::from_columns(columns, m * m);
    auto coordinates = [&](const Matrix& mat, const std::string& what) {
        auto c = dim == 0 ? (mat.is_zero() ? std::optional<Vector>(Vector{}) : std::nullopt)
                          : solve_particular(embed, mat.flat());
        if (!c)
            throw TruncationError(what + " leaves the span of the computed k-range; raise k_max");
        return *c;
    };

    Matrix twist(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        twist.set_column(i, coordinates(maps[i].matrix * a.alpha(), "twist of " + basis[i].name));

    std::map<Tuple, Vector> constants;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            HomMap c = color_commutator(maps[i], maps[j], a.bicharacter());
            if (c.matrix.is_zero())
                continue;
            constants[{i, j}] = coordinates(c.matrix, "[" + basis[i].name + "," + basis[j].name + "]");
        }

    ColorAlgebra algebra(std::move(name), 2, a.bicharacter(), basis, twist, std::move(constants));
    auto report = validate_algebra(algebra);
    if (!report.ok())
        throw ValidationError("map algebra " + algebra.name() + " is not a valid multiplicative color algebra",
                              report);
    return {std::move(algebra), std::move(maps)};
}

}  // namespace nhlc
