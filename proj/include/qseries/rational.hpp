#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qseries {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer &value) : value_(value) {}
    /// Throws DivisionByZeroError when `den` is zero.
    Rational(const Integer &num, const Integer &den);

    /// Parses "n" or "n/d".
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer num() const { return value_.get_num(); }
    [[nodiscard]] Integer den() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Canonical "num/den" form, e.g. "3/4", "-1/1", "0/1".
    [[nodiscard]] std::string str() const;

    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// acc += a * b without an intermediate allocation where possible.
    friend void add_mul(Rational &acc, const Rational &a, const Rational &b);

    [[nodiscard]] const mpq_class &raw() const { return value_; }

private:
    mpq_class value_;
};

void add_mul(Rational &acc, const Rational &a, const Rational &b);

std::string to_string(const Integer &value);

/// Parses a base-10 integer with optional sign; throws DomainError on junk.
Integer parse_integer(std::string_view text);

} // namespace qseries
