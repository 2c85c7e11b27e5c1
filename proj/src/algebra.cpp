#include "nhlc/algebra.hpp"

#include <algorithm>

#include "nhlc/errors.hpp"

namespace nhlc {

namespace {

constexpr std::size_t table_limit = std::size_t{1} << 16;

void extend_tuples(std::size_t m, std::size_t len, bool nondecreasing, Tuple& current, std::vector<Tuple>& out)
{
    if (current.size() == len) {
        out.push_back(current);
        return;
    }
    std::size_t start = nondecreasing && !current.empty() ? current.back() : 0;
    for (std::size_t i = start; i < m; ++i) {
        current.push_back(i);
        extend_tuples(m, len, nondecreasing, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Tuple> nondecreasing_tuples(std::size_t m, std::size_t len)
{
    std::vector<Tuple> out;
    Tuple current;
    extend_tuples(m, len, true, current, out);
    return out;
}

std::vector<Tuple> ordered_tuples(std::size_t m, std::size_t len)
{
    std::vector<Tuple> out;
    Tuple current;
    extend_tuples(m, len, false, current, out);
    return out;
}

ColorAlgebra::ColorAlgebra(std::string name, std::size_t arity, Bicharacter eps, std::vector<BasisElement> basis,
                           Matrix alpha, std::map<Tuple, Vector> constants)
    : name_(std::move(name)), arity_(arity), eps_(std::move(eps)), basis_(std::move(basis)), alpha_(std::move(alpha))
{
    if (arity_ < 2)
        throw ArityError("arity must be at least 2");
    const std::size_t m = basis_.size();
    for (const auto& b : basis_)
        group().check(b.degree);
    if (alpha_.rows() != m || alpha_.cols() != m)
        throw ShapeError("alpha must be a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
    for (auto& [tuple, value] : constants) {
        if (tuple.size() != arity_)
            throw ShapeError("bracket tuple length differs from arity");
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] >= m)
                throw ShapeError("bracket index out of range");
            if (i > 0 && tuple[i - 1] > tuple[i])
                throw ShapeError("bracket tuple is not non-decreasing");
        }
        if (value.size() != m)
            throw ShapeError("bracket value length differs from dimension");
        if (!is_zero(value))
            constants_.emplace(tuple, std::move(value));
    }
    build_table();
}

void ColorAlgebra::build_table()
{
    for (const auto& [t, v] : constants_) {
        sparse_index_[t] = static_cast<long>(sparse_values_.size());
        auto& entries = sparse_values_.emplace_back();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                entries.emplace_back(i, v[i]);
    }
    const std::size_t m = dim();
    std::size_t size = 1;
    for (std::size_t s = 0; s < arity_ && size <= table_limit; ++s)
        size *= std::max<std::size_t>(m, 1);
    if (m == 0 || size > table_limit)
        return;
    table_.resize(size);
    Tuple t(arity_, 0);
    for (std::size_t code = 0; code < size; ++code) {
        std::size_t rest = code;
        for (std::size_t s = arity_; s-- > 0;) {
            t[s] = rest % m;
            rest /= m;
        }
        if (auto normalized = normalize_tuple(t)) {
            auto it = sparse_index_.find(normalized->first);
            if (it != sparse_index_.end())
                table_[code] = {normalized->second, it->second};
        }
    }
    use_table_ = true;
}

ColorAlgebra::Entry ColorAlgebra::lookup(const Tuple& indices) const
{
    if (use_table_) {
        std::size_t code = 0;
        for (std::size_t i : indices)
            code = code * dim() + i;
        return table_[code];
    }
    auto normalized = normalize_tuple(indices);
    if (!normalized)
        return {};
    auto it = sparse_index_.find(normalized->first);
    if (it == sparse_index_.end())
        return {};
    return {normalized->second, it->second};
}

GroupElement ColorAlgebra::degree_sum(const Tuple& indices) const
{
    GroupElement g = group().zero();
    for (std::size_t i : indices)
        g = group().add(g, degree(i));
    return g;
}

std::optional<std::pair<Tuple, Scalar>> ColorAlgebra::normalize_tuple(const Tuple& indices) const
{
    Tuple t = indices;
    Scalar sign = 1;
    for (std::size_t pass = 0; pass < t.size(); ++pass) {
        bool swapped = false;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            if (t[i] > t[i + 1]) {
                sign *= -eps_(degree(t[i]), degree(t[i + 1]));
                std::swap(t[i], t[i + 1]);
                swapped = true;
            }
        }
        if (!swapped)
            break;
    }
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1] && eps_(degree(t[i]), degree(t[i])) == 1)
            return std::nullopt;
    return std::make_pair(std::move(t), sign);
}

Vector ColorAlgebra::bracket_basis(const Tuple& indices) const
{
    if (indices.size() != arity_)
        throw ArityError("bracket takes " + std::to_string(arity_) + " arguments");
    for (std::size_t i : indices)
        if (i >= dim())
            throw ShapeError("bracket index out of range");
    Vector out = zero_vector(dim());
    Entry e = lookup(indices);
    if (e.value >= 0)
        for (const auto& [i, v] : sparse_values_[static_cast<std::size_t>(e.value)])
            out[i] = e.sign * v;
    return out;
}

Vector ColorAlgebra::bracket(const std::vector<Vector>& args) const
{
    std::vector<const Vector*> ptrs;
    for (const auto& v : args)
        ptrs.push_back(&v);
    Vector out = zero_vector(dim());
    bracket_accumulate(out, Scalar(1), ptrs);
    return out;
}

void ColorAlgebra::bracket_accumulate(Vector& out, const Scalar& coefficient,
                                      std::span<const Vector* const> args) const
{
    if (args.size() != arity_)
        throw ArityError("bracket takes " + std::to_string(arity_) + " arguments");
    if (out.size() != dim())
        throw ShapeError("bracket output length differs from dimension");
    for (const Vector* v : args)
        if (v->size() != dim())
            throw ShapeError("bracket argument length differs from dimension");

    struct Scratch {
        std::vector<std::vector<std::size_t>> support;
        std::vector<Scalar> partial;
        std::vector<std::size_t> pos;
        Tuple t;
        Scalar c;
    };
    thread_local Scratch sc;
    sc.support.resize(arity_);
    sc.partial.resize(arity_ + 1);
    sc.pos.assign(arity_, 0);
    sc.t.resize(arity_);
    for (std::size_t s = 0; s < arity_; ++s) {
        auto& sup = sc.support[s];
        sup.clear();
        const Vector& v = *args[s];
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                sup.push_back(i);
        if (sup.empty())
            return;
    }
    sc.partial[0] = coefficient;
    // Odometer over the supports; partial[s] is coefficient times the first s entries.
    std::size_t slot = 0;
    while (true) {
        if (slot == arity_) {
            Entry e = lookup(sc.t);
            if (e.value >= 0) {
                sc.c = sc.partial[arity_] * e.sign;
                for (const auto& [i, v] : sparse_values_[static_cast<std::size_t>(e.value)])
                    out[i] += sc.c * v;
            }
            --slot;
            ++sc.pos[slot];
        }
        if (sc.pos[slot] == sc.support[slot].size()) {
            if (slot == 0)
                break;
            sc.pos[slot] = 0;
            --slot;
            ++sc.pos[slot];
            continue;
        }
        sc.t[slot] = sc.support[slot][sc.pos[slot]];
        sc.partial[slot + 1] = sc.partial[slot] * (*args[slot])[sc.t[slot]];
        ++slot;
    }
}

std::optional<GroupElement> ColorAlgebra::homogeneous_degree(const Vector& v) const
{
    std::optional<GroupElement> g;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (v[i] == 0)
            continue;
        if (g && *g != degree(i))
            return std::nullopt;
        g = degree(i);
    }
    return g ? g : std::optional<GroupElement>(group().zero());
}

Matrix ColorAlgebra::alpha_power(int k) const
{
    if (k >= 0)
        return matrix_power(alpha_, static_cast<unsigned>(k));
    if (k == -1) {
        auto inv = inverse(alpha_);
        if (!inv)
            throw InvertibilityError("alpha is not invertible, k = -1 is unavailable");
        return *inv;
    }
    throw InputError("twist exponent must be at least -1");
}

bool operator==(const ColorAlgebra& a, const ColorAlgebra& b)
{
    return a.name_ == b.name_ && a.arity_ == b.arity_ && a.group() == b.group() &&
           a.eps_.table() == b.eps_.table() && a.basis_ == b.basis_ && a.alpha_ == b.alpha_ &&
           a.constants_ == b.constants_;
}

std::string format_tuple(const ColorAlgebra& a, const Tuple& indices)
{
    std::string s = "[";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i)
            s += ',';
        s += indices[i] < a.dim() ? a.basis()[indices[i]].name : "?";
    }
    return s + "]";
}

std::string format_vector(const ColorAlgebra& a, const Vector& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += format_scalar(v[i]) + "*" + a.basis()[i].name;
    }
    return s.empty() ? "0" : s;
}

bool respects_degree(const ColorAlgebra& a, const Matrix& m, const GroupElement& d)
{
    const auto& g = a.group();
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (m(j, i) != 0 && a.degree(j) != g.add(a.degree(i), d))
                return false;
    return true;
}

ValidationReport validate_algebra(const ColorAlgebra& a)
{
    ValidationReport report = validate_bicharacter(a.bicharacter());
    const std::size_t m = a.dim();
    const std::size_t n = a.arity();
    const auto& g = a.group();

    for (const auto& [tuple, value] : a.constants()) {
        GroupElement target = a.degree_sum(tuple);
        for (std::size_t j = 0; j < m; ++j)
            if (value[j] != 0 && a.degree(j) != target)
                report.add("algebra.grading", format_tuple(a, tuple),
                           "output degree " + format_degree(target),
                           a.basis()[j].name + " of degree " + format_degree(a.degree(j)));
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (tuple[i] == tuple[i + 1] && a.eps(a.degree(tuple[i]), a.degree(tuple[i])) == 1)
                report.add("algebra.skew_symmetry", format_tuple(a, tuple), "0", format_vector(a, value));
    }

    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (a.alpha()(j, i) != 0 && a.degree(j) != a.degree(i))
                report.add("algebra.alpha_even", "alpha(" + a.basis()[i].name + ")", "0 on " + a.basis()[j].name,
                           format_scalar(a.alpha()(j, i)));

    std::vector<Vector> alpha_col(m);
    for (std::size_t i = 0; i < m; ++i)
        alpha_col[i] = a.alpha().column(i);

    for (const auto& t : nondecreasing_tuples(m, n)) {
        Vector lhs = a.alpha() * a.bracket_basis(t);
        std::vector<Vector> args;
        for (std::size_t i : t)
            args.push_back(alpha_col[i]);
        Vector rhs = a.bracket(args);
        if (lhs != rhs)
            report.add("algebra.multiplicative", format_tuple(a, t), format_vector(a, lhs), format_vector(a, rhs));
    }

    // Twisted Nambu-Filippov identity:
    // [a x_1..a x_{n-1}, [y]] = sum_i eps(X, Y_i) [a y_1..a y_{i-1}, [x, y_i], a y_{i+1}..a y_n]
    const auto xs = ordered_tuples(m, n - 1);
    const auto ys = ordered_tuples(m, n);
    std::map<Tuple, Vector> inner;  // [x, b_i] for every x tuple and basis i
    for (const auto& x : xs)
        for (std::size_t i = 0; i < m; ++i) {
            Tuple xt = x;
            xt.push_back(i);
            inner.emplace(xt, a.bracket_basis(xt));
        }
    for (const auto& x : xs) {
        const GroupElement big_x = a.degree_sum(x);
        std::vector<Vector> lhs_args;
        for (std::size_t i : x)
            lhs_args.push_back(alpha_col[i]);
        lhs_args.emplace_back();
        for (const auto& y : ys) {
            lhs_args.back() = a.bracket_basis(y);
            Vector lhs = a.bracket(lhs_args);
            Vector rhs = zero_vector(m);
            GroupElement prefix = g.zero();
            for (std::size_t i = 0; i < n; ++i) {
                Tuple xt = x;
                xt.push_back(y[i]);
                const Vector& xy = inner.at(xt);
                if (!is_zero(xy)) {
                    std::vector<Vector> args;
                    for (std::size_t j = 0; j < n; ++j)
                        args.push_back(j == i ? xy : alpha_col[y[j]]);
                    axpy(rhs, a.eps(big_x, prefix), a.bracket(args));
                }
                prefix = g.add(prefix, a.degree(y[i]));
            }
            if (lhs != rhs)
                report.add("algebra.nambu_filippov", "x=" + format_tuple(a, x) + " y=" + format_tuple(a, y),
                           format_vector(a, rhs), format_vector(a, lhs));
        }
    }
    return report;
}

}  // namespace nhlc
