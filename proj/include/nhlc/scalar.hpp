#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nhlc {

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p/q" or "p" (optional sign, whitespace not allowed). Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// "p/q", with "/q" omitted when q == 1.
std::string format_scalar(const Scalar& value);

/// value^exponent; exponent may be negative for nonzero values.
Scalar power(const Scalar& value, long long exponent);

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

void axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a*x

}  // namespace nhlc
