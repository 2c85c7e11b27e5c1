#include "nhlc/grading.hpp"

#include <sstream>

#include "nhlc/errors.hpp"

namespace nhlc {

std::vector<long long> GroupElement::exponents() const
{
    std::vector<long long> out = free_part;
    out.insert(out.end(), torsion_part.begin(), torsion_part.end());
    return out;
}

GradingGroup::GradingGroup(int free_rank, std::vector<long long> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion))
{
    if (free_rank_ < 0)
        throw ShapeError("negative free rank");
    for (long long m : torsion_)
        if (m < 2)
            throw ShapeError("torsion modulus must be at least 2");
}

GroupElement GradingGroup::zero() const
{
    return GroupElement{std::vector<long long>(static_cast<std::size_t>(free_rank_), 0),
                        std::vector<long long>(torsion_.size(), 0)};
}

GroupElement GradingGroup::element(const std::vector<long long>& coords) const
{
    if (coords.size() != generator_count())
        throw ShapeError("degree has " + std::to_string(coords.size()) + " coordinates, group has " +
                         std::to_string(generator_count()) + " generators");
    GroupElement g;
    g.free_part.assign(coords.begin(), coords.begin() + free_rank_);
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        long long m = torsion_[i];
        g.torsion_part.push_back(((coords[static_cast<std::size_t>(free_rank_) + i] % m) + m) % m);
    }
    return g;
}

void GradingGroup::check(const GroupElement& a) const
{
    if (a.free_part.size() != static_cast<std::size_t>(free_rank_) || a.torsion_part.size() != torsion_.size())
        throw ShapeError("group element shape does not match grading group");
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        if (a.torsion_part[i] < 0 || a.torsion_part[i] >= torsion_[i])
            throw ShapeError("torsion entry not reduced");
}

GroupElement GradingGroup::add(const GroupElement& a, const GroupElement& b) const
{
    check(a);
    check(b);
    GroupElement r = a;
    for (std::size_t i = 0; i < r.free_part.size(); ++i)
        r.free_part[i] += b.free_part[i];
    for (std::size_t i = 0; i < r.torsion_part.size(); ++i)
        r.torsion_part[i] = (r.torsion_part[i] + b.torsion_part[i]) % torsion_[i];
    return r;
}

GroupElement GradingGroup::negate(const GroupElement& a) const
{
    check(a);
    GroupElement r = a;
    for (auto& x : r.free_part)
        x = -x;
    for (std::size_t i = 0; i < r.torsion_part.size(); ++i)
        r.torsion_part[i] = (torsion_[i] - r.torsion_part[i]) % torsion_[i];
    return r;
}

GroupElement GradingGroup::subtract(const GroupElement& a, const GroupElement& b) const
{
    return add(a, negate(b));
}

std::string format_degree(const GroupElement& g)
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (long long x : g.free_part) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    for (long long x : g.torsion_part) {
        os << (first ? "" : ",") << x << '~';
        first = false;
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------

Bicharacter::Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> table)
    : group_(std::move(group)), table_(std::move(table))
{
    const std::size_t n = group_.generator_count();
    if (table_.size() != n)
        throw ShapeError("bicharacter table must have one row per generator");
    for (const auto& row : table_) {
        if (row.size() != n)
            throw ShapeError("bicharacter table must be square");
        for (const auto& x : row)
            if (x == 0)
                throw ShapeError("bicharacter values must be nonzero");
    }
}

Bicharacter Bicharacter::trivial(GradingGroup group)
{
    const std::size_t n = group.generator_count();
    return Bicharacter(std::move(group), std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(1))));
}

Bicharacter Bicharacter::super()
{
    return Bicharacter(GradingGroup::z2(), {{Scalar(-1)}});
}

Scalar Bicharacter::operator()(const GroupElement& g, const GroupElement& h) const
{
    group_.check(g);
    group_.check(h);
    auto a = g.exponents();
    auto b = h.exponents();
    Scalar result = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0 && table_[i][j] != 1)
                result *= power(table_[i][j], a[i] * b[j]);
    }
    return result;
}

ValidationReport validate_bicharacter(const Bicharacter& eps)
{
    ValidationReport report;
    const auto& t = eps.table();
    const auto& group = eps.group();
    const std::size_t n = group.generator_count();
    auto idx = [](std::size_t i, std::size_t j) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i][i] != 1 && t[i][i] != -1)
            report.add("bicharacter.diagonal_sign", idx(i, i), "1 or -1", format_scalar(t[i][i]));
        for (std::size_t j = i + 1; j < n; ++j)
            if (t[i][j] * t[j][i] != 1)
                report.add("bicharacter.skew_symmetry", idx(i, j), "1",
                           format_scalar(t[i][j] * t[j][i]));
    }
    const auto r = static_cast<std::size_t>(group.free_rank());
    for (std::size_t ti = 0; ti < group.torsion().size(); ++ti) {
        const std::size_t i = r + ti;
        const long long m = group.torsion()[ti];
        for (std::size_t j = 0; j < n; ++j) {
            if (power(t[i][j], m) != 1)
                report.add("bicharacter.torsion_compatibility", idx(i, j), "1",
                           format_scalar(power(t[i][j], m)));
            if (j != i && power(t[j][i], m) != 1)
                report.add("bicharacter.torsion_compatibility", idx(j, i), "1",
                           format_scalar(power(t[j][i], m)));
        }
    }
    return report;
}

}  // namespace nhlc
