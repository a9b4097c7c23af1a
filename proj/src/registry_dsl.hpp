#pragma once

// Small expression layer used to transcribe registry entries. An Expr is a
// sum of deferred parts; every part is asked for the same precision.

#include <utility>
#include <vector>

#include "qseries/identities.hpp"
#include "qseries/partitions.hpp"
#include "qseries/theta.hpp"

namespace qseries::dsl {

struct Expr {
    std::vector<Builder> parts;
};

inline RatSeries eval(const Expr &e, std::int64_t prec)
{
    RatSeries acc(Rational(0), prec);
    for (const auto &p : e.parts)
        acc = acc + p(prec);
    return acc;
}

inline Builder build(Expr e)
{
    return [e = std::move(e)](std::int64_t prec) { return eval(e, prec); };
}

inline Expr part(Builder b) { return Expr{{std::move(b)}}; }

inline Expr operator+(Expr a, const Expr &b)
{
    a.parts.insert(a.parts.end(), b.parts.begin(), b.parts.end());
    return a;
}

inline Expr operator*(const Rational &c, const Expr &e)
{
    return part([c, e](std::int64_t prec) { return c * eval(e, prec); });
}

inline Expr operator-(const Expr &e) { return Rational(-1) * e; }
inline Expr operator-(const Expr &a, const Expr &b) { return a + (-b); }

inline Expr operator*(const Expr &a, const Expr &b)
{
    return part([a, b](std::int64_t prec) { return eval(a, prec) * eval(b, prec); });
}

/// q^k * e
inline Expr qpow(std::int64_t k, const Expr &e)
{
    return part([k, e](std::int64_t prec) { return eval(e, prec - k).shift(k); });
}

inline Expr cst(const Rational &c)
{
    return part([c](std::int64_t prec) { return RatSeries::monomial(c, 0, prec); });
}

inline Expr zero()
{
    return part([](std::int64_t prec) { return RatSeries(Rational(0), prec); });
}

inline Factor J(std::int64_t a, std::int64_t m, int e = 1) { return {ThetaAtom::J(a, m), e}; }
inline Factor Jb(std::int64_t a, std::int64_t m, int e = 1) { return {ThetaAtom::Jbar(a, m), e}; }
inline Factor Jm(std::int64_t m, int e = 1) { return {ThetaAtom::Jm(m), e}; }
/// j(sign q^a; q^m)^e
inline Factor jx(int sign, std::int64_t a, std::int64_t m, int e = 1) { return {ThetaAtom{sign, a, m}, e}; }

/// coef * q^shift * prod num / prod den
inline Expr quot(std::vector<Factor> num, std::vector<Factor> den = {}, std::int64_t shift = 0,
                 const Rational &coef = Rational(1))
{
    return part([num = std::move(num), den = std::move(den), shift, coef](std::int64_t prec) {
        return eta_quotient(num, den, shift, coef, prec);
    });
}

/// Bilateral-sum form of a single atom.
inline Expr atom_sum(const ThetaAtom &atom)
{
    return part([atom](std::int64_t prec) { return to_rational(theta_sum(atom, prec)); });
}

/// coef * q^shift * g(sign q^a; q^m)
inline Expr g(int sign, std::int64_t a, std::int64_t m, std::int64_t shift = 0, const Rational &coef = Rational(1))
{
    const GSpec spec{sign, a, m};
    return part([spec, shift, coef](std::int64_t prec) {
        return coef * to_rational(mock_g(spec, prec - shift).shift(shift));
    });
}

inline Expr comb(Family f, std::vector<Rational> coeffs)
{
    CombinatorSpec spec{f, std::move(coeffs)};
    return part([spec](std::int64_t prec) { return combinator(spec, prec); });
}

inline Expr dev(Stat s, std::int64_t a, std::size_t M)
{
    return part([s, a, M](std::int64_t prec) { return deviation_series(s, a, M, prec); });
}

inline Expr count(Stat s, std::int64_t a, std::size_t M)
{
    return part([s, a, M](std::int64_t prec) { return to_rational(residue_series(s, a, M, prec)); });
}

inline Expr N(std::int64_t a, std::size_t M) { return count(Stat::rank, a, M); }
inline Expr C(std::int64_t a, std::size_t M) { return count(Stat::crank, a, M); }

inline Expr pn()
{
    return part([](std::int64_t prec) { return to_rational(partition_series(prec)); });
}

inline Expr eulerian(Eulerian kind)
{
    return part([kind](std::int64_t prec) { return to_rational(eulerian_sum(kind, prec)); });
}

/// sum_n c(t n + r) q^n for e = sum_n c(n) q^n.
inline Expr deflated(const Expr &e, std::int64_t t, std::int64_t r)
{
    return part([e, t, r](std::int64_t prec) { return eval(e, t * prec + r).dissect(t, r).deflate(t, r); });
}

/// e(-q)
inline Expr flipped(const Expr &e)
{
    return part([e](std::int64_t prec) { return eval(e, prec).negate_variable(); });
}

inline Expr custom(Builder b) { return part(std::move(b)); }

} // namespace qseries::dsl
