#include "qseries/rational.hpp"

#include "qseries/error.hpp"

namespace qseries {

Rational::Rational(const Integer &num, const Integer &den)
{
    if (sgn(den) == 0)
        throw DivisionByZeroError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.is_zero())
        throw DivisionByZeroError("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

void add_mul(Rational &acc, const Rational &a, const Rational &b)
{
    if (a.is_zero() || b.is_zero())
        return;
    if (a.is_integer() && b.is_integer() && acc.is_integer()) {
        mpz_addmul(acc.value_.get_num_mpz_t(), a.value_.get_num_mpz_t(), b.value_.get_num_mpz_t());
        return;
    }
    acc.value_ += a.value_ * b.value_;
}

std::string to_string(const Integer &value)
{
    return value.get_str();
}

Integer parse_integer(std::string_view text)
{
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
        throw DomainError("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw DomainError("not an integer: '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

} // namespace qseries
