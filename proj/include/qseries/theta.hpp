#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

using IntSeries = Series<Integer>;
using RatSeries = Series<Rational>;

/// j(sign * q^a; q^m).
struct ThetaAtom {
    int sign = 1;
    std::int64_t a = 0;
    std::int64_t m = 1;

    /// J_{a,m}
    static ThetaAtom J(std::int64_t a, std::int64_t m) { return {1, a, m}; }
    /// J-bar_{a,m}
    static ThetaAtom Jbar(std::int64_t a, std::int64_t m) { return {-1, a, m}; }
    /// J_m = J_{m,3m} = (q^m;q^m)_inf
    static ThetaAtom Jm(std::int64_t m) { return {1, m, 3 * m}; }

    /// True for the identically zero atoms j(q^{km}; q^m).
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::string str() const;

    friend auto operator<=>(const ThetaAtom &, const ThetaAtom &) = default;
};

/// g(sign * q^a; q^m) with 0 < a < m.
struct GSpec {
    int sign = 1;
    std::int64_t a = 1;
    std::int64_t m = 2;

    [[nodiscard]] std::string str() const;
    friend auto operator<=>(const GSpec &, const GSpec &) = default;
};

struct Factor {
    ThetaAtom atom;
    int exponent = 1;
};

enum class Family { theta4, G4, theta8, G8, theta8prime, theta5, G5, theta7, G7 };

std::size_t family_arity(Family f);
std::string family_name(Family f);

struct CombinatorSpec {
    Family family;
    std::vector<Rational> coefficients;
};

enum class Eulerian { f0, f1 };

/// prod_{i<n} (1 - sign q^{a+mi}) + O(q^prec). Any integer a is accepted.
IntSeries pochhammer_finite(int sign, std::int64_t a, std::int64_t m, std::int64_t n, std::int64_t prec);

/// prod_{i>=0} (1 - sign q^{a+mi}) + O(q^prec). Requires a >= 1.
IntSeries pochhammer_infinite(int sign, std::int64_t a, std::int64_t m, std::int64_t prec);

/// Triple product (x)_inf (q/x)_inf (q)_inf, after folding a into [0, m].
IntSeries theta_product(const ThetaAtom &atom, std::int64_t prec);

/// Bilateral sum over n of (-1)^n sign^n q^{m n(n-1)/2 + a n}.
IntSeries theta_sum(const ThetaAtom &atom, std::int64_t prec);

/// Cached theta_product.
IntSeries atom_series(const ThetaAtom &atom, std::int64_t prec);

/// scale * q^shift * prod num / prod den, with each denominator inverted on
/// its own. Working precision is raised until the result reaches prec.
RatSeries eta_quotient(const std::vector<Factor> &num, const std::vector<Factor> &den, std::int64_t shift,
                       const Rational &scale, std::int64_t prec);

/// Integer-valued variant; throws NotUnitError if a denominator has a
/// non-unit leading coefficient (only J-bar_{0,m} does).
IntSeries eta_quotient_integer(const std::vector<Factor> &num, const std::vector<Factor> &den, std::int64_t shift,
                               std::int64_t prec);

/// g(x;q) = x^{-1}(-1 + sum_n q^{n^2} / ((x)_{n+1} (q/x)_n)) at x = sign q^a, q -> q^m.
IntSeries mock_g(const GSpec &spec, std::int64_t prec);

/// f0 = sum q^{n^2}/(-q;q)_n, f1 = sum q^{n^2+n}/(-q;q)_n.
IntSeries eulerian_sum(Eulerian kind, std::int64_t prec);

RatSeries combinator(const CombinatorSpec &spec, std::int64_t prec);

/// Atoms currently memoized in product form, in sorted order.
std::vector<ThetaAtom> cached_atoms();

/// Drops all memoized atoms, inverses and g-series.
void clear_theta_caches();

} // namespace qseries
