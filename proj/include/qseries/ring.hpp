#pragma once

#include <concepts>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "qseries/cyclic.hpp"
#include "qseries/rational.hpp"

namespace qseries {

/// Per-ring operations the series engine needs. Every query takes a
/// prototype element because some rings (Z[z]/(z^M-1)) are parameterized.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
    static std::string tag(const Integer &) { return "integer"; }
    static bool same_ring(const Integer &, const Integer &) { return true; }
    static Integer zero_like(const Integer &) { return 0; }
    static Integer one_like(const Integer &) { return 1; }
    static bool is_zero(const Integer &x) { return sgn(x) == 0; }
    static std::optional<Integer> unit_inverse(const Integer &x)
    {
        if (x == 1 || x == -1)
            return x;
        return std::nullopt;
    }
    static void add_mul(Integer &acc, const Integer &a, const Integer &b)
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    static std::string str(const Integer &x) { return to_string(x); }
};

template <>
struct RingTraits<Rational> {
    static std::string tag(const Rational &) { return "rational"; }
    static bool same_ring(const Rational &, const Rational &) { return true; }
    static Rational zero_like(const Rational &) { return {}; }
    static Rational one_like(const Rational &) { return 1; }
    static bool is_zero(const Rational &x) { return x.is_zero(); }
    static std::optional<Rational> unit_inverse(const Rational &x)
    {
        if (x.is_zero())
            return std::nullopt;
        return Rational(1) / x;
    }
    static void add_mul(Rational &acc, const Rational &a, const Rational &b) { qseries::add_mul(acc, a, b); }
    static std::string str(const Rational &x) { return x.str(); }
};

template <>
struct RingTraits<CyclicLaurent> {
    static std::string tag(const CyclicLaurent &x)
    {
        return "cyclic-laurent(" + std::to_string(x.modulus()) + ")";
    }
    static bool same_ring(const CyclicLaurent &a, const CyclicLaurent &b) { return a.modulus() == b.modulus(); }
    static CyclicLaurent zero_like(const CyclicLaurent &x) { return CyclicLaurent(x.modulus()); }
    static CyclicLaurent one_like(const CyclicLaurent &x) { return cyclic_embed(0, x.modulus()); }
    static bool is_zero(const CyclicLaurent &x) { return x.is_zero(); }
    /// Only the trivial units +-z^k are recognized.
    static std::optional<CyclicLaurent> unit_inverse(const CyclicLaurent &x)
    {
        std::size_t e = 0;
        int s = 0;
        if (!x.is_signed_monomial(e, s))
            return std::nullopt;
        CyclicLaurent inv = cyclic_embed(-static_cast<std::int64_t>(e), x.modulus());
        return s > 0 ? inv : -inv;
    }
    static void add_mul(CyclicLaurent &acc, const CyclicLaurent &a, const CyclicLaurent &b)
    {
        qseries::add_mul(acc, a, b);
    }
    static std::string str(const CyclicLaurent &x) { return x.str(); }
};

template <class R>
concept CoefficientRing = requires(const R &a, const R &b, R &acc) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { RingTraits<R>::tag(a) } -> std::convertible_to<std::string>;
    { RingTraits<R>::is_zero(a) } -> std::convertible_to<bool>;
    RingTraits<R>::add_mul(acc, a, b);
};

} // namespace qseries
