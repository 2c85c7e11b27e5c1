#include "nhlc/scalar.hpp"

#include <cctype>

#include "nhlc/errors.hpp"

namespace nhlc {

namespace {

bool valid_integer(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

mpz_class to_mpz(std::string_view s)
{
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    mpz_class d = to_mpz(den);
    if (d == 0)
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Scalar q(to_mpz(num), d);
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar power(const Scalar& value, long long exponent)
{
    if (exponent == 0)
        return Scalar(1);
    if (exponent < 0 && value == 0)
        throw std::domain_error("negative power of zero");
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value.get_den().get_mpz_t(), e);
    Scalar r = exponent < 0 ? Scalar(den, num) : Scalar(num, den);
    r.canonicalize();
    return r;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n, Scalar(0));
    v.at(i) = 1;
    return v;
}

void axpy(Vector& y, const Scalar& a, const Vector& x)
{
    if (a == 0)
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0)
            y[i] += a * x[i];
}

}  // namespace nhlc
