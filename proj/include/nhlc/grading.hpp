#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nhlc/report.hpp"
#include "nhlc/scalar.hpp"

namespace nhlc {

/// Element of Z^r x prod Z/m_i; torsion entries are kept reduced into [0, m_i).
struct GroupElement {
    std::vector<long long> free_part;
    std::vector<long long> torsion_part;

    /// free_part followed by torsion_part (generator exponents).
    std::vector<long long> exponents() const;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Z^free_rank x prod Z/torsion[i].
class GradingGroup {
public:
    GradingGroup() = default;
    GradingGroup(int free_rank, std::vector<long long> torsion);

    static GradingGroup trivial() { return {}; }
    static GradingGroup z2() { return GradingGroup(0, {2}); }

    int free_rank() const { return free_rank_; }
    const std::vector<long long>& torsion() const { return torsion_; }
    std::size_t generator_count() const { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }

    GroupElement zero() const;
    /// Builds an element from free ++ torsion coordinates, reducing torsion. Throws ShapeError.
    GroupElement element(const std::vector<long long>& coords) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement subtract(const GroupElement& a, const GroupElement& b) const;

    /// Throws ShapeError unless a has this group's shape and reduced torsion.
    void check(const GroupElement& a) const;
    bool is_zero(const GroupElement& a) const { return a == zero(); }

    friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

private:
    int free_rank_ = 0;
    std::vector<long long> torsion_;
};

std::string format_degree(const GroupElement& g);

/// Skew-symmetric bicharacter given by its values on generator pairs.
class Bicharacter {
public:
    Bicharacter() = default;
    /// Throws ShapeError if the table is not (r+t)x(r+t) or has a zero entry.
    Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> table);

    static Bicharacter trivial(GradingGroup group);
    /// Z/2 with eps(1,1) = -1.
    static Bicharacter super();

    const GradingGroup& group() const { return group_; }
    const std::vector<std::vector<Scalar>>& table() const { return table_; }

    /// prod_{i,j} table[i][j]^(a_i b_j).
    Scalar operator()(const GroupElement& g, const GroupElement& h) const;

private:
    GradingGroup group_;
    std::vector<std::vector<Scalar>> table_;
};

/// Lists every violated bicharacter axiom with the offending generator indices.
ValidationReport validate_bicharacter(const Bicharacter& eps);

}  // namespace nhlc
