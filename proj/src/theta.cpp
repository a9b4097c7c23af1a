#include "qseries/theta.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace qseries {

namespace {

/// Memo keyed by K that keeps the highest-precision value seen.
template <class K, class V>
class PrecisionCache {
public:
    std::optional<V> get(const K &key, std::int64_t prec)
    {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end() || it->second.prec() < prec)
            return std::nullopt;
        return it->second.truncated(prec);
    }

    void put(const K &key, const V &value)
    {
        std::unique_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end())
            map_.emplace(key, value);
        else if (it->second.prec() < value.prec())
            it->second = value;
    }

    void clear()
    {
        std::unique_lock lock(mu_);
        map_.clear();
    }

    std::vector<K> keys()
    {
        std::shared_lock lock(mu_);
        std::vector<K> out;
        for (const auto &kv : map_)
            out.push_back(kv.first);
        return out;
    }

private:
    std::shared_mutex mu_;
    std::map<K, V> map_;
};

PrecisionCache<ThetaAtom, IntSeries> &atom_cache()
{
    static PrecisionCache<ThetaAtom, IntSeries> c;
    return c;
}

PrecisionCache<ThetaAtom, IntSeries> &inverse_cache()
{
    static PrecisionCache<ThetaAtom, IntSeries> c;
    return c;
}

PrecisionCache<ThetaAtom, RatSeries> &rational_inverse_cache()
{
    static PrecisionCache<ThetaAtom, RatSeries> c;
    return c;
}

PrecisionCache<GSpec, IntSeries> &g_cache()
{
    static PrecisionCache<GSpec, IntSeries> c;
    return c;
}

IntSeries int_zero(std::int64_t prec) { return IntSeries(Integer(0), prec); }
IntSeries int_one(std::int64_t prec) { return IntSeries::one(Integer(0), prec); }

constexpr int kMaxEscalations = 32;

void check_sign(int sign)
{
    if (sign != 1 && sign != -1)
        throw DomainError("sign must be +1 or -1");
}

void check_base(std::int64_t m)
{
    if (m < 1)
        throw DomainError("theta base exponent m must be positive");
}

/// Inverse of an atom, memoized; `Ring` is Integer or Rational.
IntSeries atom_inverse_int(const ThetaAtom &atom, std::int64_t prec)
{
    if (auto hit = inverse_cache().get(atom, prec))
        return *hit;
    if (atom.is_zero())
        throw DomainError("denominator atom " + atom.str() + " is identically zero");
    std::int64_t work = prec;
    for (int i = 0; i < kMaxEscalations; ++i) {
        IntSeries inv = atom_series(atom, work).invert();
        if (inv.prec() >= prec) {
            inverse_cache().put(atom, inv);
            return inv.truncated(prec);
        }
        work += prec - inv.prec();
    }
    throw Error("precision escalation did not converge for 1/" + atom.str());
}

RatSeries atom_inverse_rational(const ThetaAtom &atom, std::int64_t prec)
{
    if (auto hit = rational_inverse_cache().get(atom, prec))
        return *hit;
    if (atom.is_zero())
        throw DomainError("denominator atom " + atom.str() + " is identically zero");
    std::int64_t work = prec;
    for (int i = 0; i < kMaxEscalations; ++i) {
        RatSeries inv = to_rational(atom_series(atom, work)).invert();
        if (inv.prec() >= prec) {
            rational_inverse_cache().put(atom, inv);
            return inv.truncated(prec);
        }
        work += prec - inv.prec();
    }
    throw Error("precision escalation did not converge for 1/" + atom.str());
}

bool has_unit_lead(const ThetaAtom &atom)
{
    // After folding only j(-1;q^m) carries the leading factor 2.
    if (atom.sign != -1)
        return true;
    return residue(atom.a, atom.m) != 0;
}

IntSeries numerator_product(const std::vector<Factor> &num, std::int64_t work)
{
    IntSeries acc = int_one(work);
    for (const auto &f : num) {
        if (f.exponent < 0)
            throw DomainError("factor exponents must be positive");
        for (int k = 0; k < f.exponent; ++k)
            acc = acc * atom_series(f.atom, work);
    }
    return acc;
}

struct EtaTerm {
    std::int64_t shift;
    std::vector<Factor> num;
};

struct ThetaFamily {
    Rational scale;
    std::vector<Factor> den;
    std::vector<EtaTerm> terms;
};

struct GTerm {
    Integer constant;
    std::int64_t shift;
    GSpec spec;
};

ThetaFamily theta_family(Family f)
{
    auto Jb = [](std::int64_t a, std::int64_t m) { return Factor{ThetaAtom::Jbar(a, m), 1}; };
    auto J = [](std::int64_t a, std::int64_t m, int e = 1) { return Factor{ThetaAtom::J(a, m), e}; };
    auto Jm = [](std::int64_t m, int e = 1) { return Factor{ThetaAtom::Jm(m), e}; };
    switch (f) {
    case Family::theta4:
        return {Rational(1, 4),
                {Jm(4)},
                {{0, {Jb(4, 8), Jb(6, 16)}},
                 {2, {Jb(0, 8), Jb(14, 16)}},
                 {1, {Jb(4, 8), Jb(14, 16)}},
                 {1, {Jb(0, 8), Jb(6, 16)}}}};
    case Family::theta8:
        return {Rational(1, 8),
                {Jm(4)},
                {{0, {Jb(4, 8), Jb(28, 64)}},
                 {4, {Jb(0, 8), Jb(52, 64)}},
                 {1, {Jb(4, 8), Jb(20, 64)}},
                 {1, {Jb(0, 8), Jb(28, 64)}},
                 {2, {Jb(0, 8), Jb(20, 64)}},
                 {6, {Jb(4, 8), Jb(60, 64)}},
                 {3, {Jb(4, 8), Jb(52, 64)}},
                 {7, {Jb(0, 8), Jb(60, 64)}}}};
    case Family::theta8prime:
        return {Rational(1, 2),
                {Jm(4)},
                {{0, {J(4, 8), Jb(28, 64)}},
                 {1, {J(4, 8), Jb(20, 64)}},
                 {6, {J(4, 8), Jb(60, 64)}},
                 {3, {J(4, 8), Jb(52, 64)}}}};
    case Family::theta5:
        return {Rational(1, 5),
                {Jm(5, 2)},
                {{0, {J(10, 25, 3)}},
                 {1, {J(5, 25), J(10, 25, 2)}},
                 {2, {J(5, 25, 2), J(10, 25)}},
                 {3, {J(5, 25, 3)}}}};
    case Family::theta7:
        return {Rational(1, 7),
                {Jm(7)},
                {{0, {J(21, 49, 2)}},
                 {1, {J(14, 49), J(21, 49)}},
                 {2, {J(14, 49, 2)}},
                 {3, {J(7, 49), J(21, 49)}},
                 {4, {J(7, 49), J(14, 49)}},
                 {6, {J(7, 49, 2)}}}};
    default:
        throw DomainError(family_name(f) + " is not a theta-quotient family");
    }
}

std::vector<GTerm> g_family(Family f)
{
    switch (f) {
    case Family::G4:
        return {{-1, 2, {-1, 2, 16}}, {0, 5, {-1, 6, 16}}};
    case Family::G8:
        return {{1, 2, {1, 2, 16}}, {-1, 2, {-1, 2, 16}}, {0, 5, {1, 6, 16}}, {0, 5, {-1, 6, 16}}};
    case Family::G5:
        return {{0, 5, {1, 5, 25}}, {0, 8, {1, 10, 25}}};
    case Family::G7:
        return {{1, 7, {1, 7, 49}}, {0, 16, {1, 21, 49}}, {0, 13, {1, 14, 49}}};
    default:
        throw DomainError(family_name(f) + " is not a mock-theta family");
    }
}

} // namespace

bool ThetaAtom::is_zero() const { return sign == 1 && residue(a, m) == 0; }

std::string ThetaAtom::str() const
{
    return std::string(sign > 0 ? "J" : "Jbar") + "(" + std::to_string(a) + "," + std::to_string(m) + ")";
}

std::string GSpec::str() const
{
    return "g(" + std::string(sign > 0 ? "" : "-") + "q^" + std::to_string(a) + ";q^" + std::to_string(m) + ")";
}

std::size_t family_arity(Family f)
{
    switch (f) {
    case Family::theta4: return 4;
    case Family::G4: return 2;
    case Family::theta8: return 8;
    case Family::G8: return 4;
    case Family::theta8prime: return 4;
    case Family::theta5: return 4;
    case Family::G5: return 2;
    case Family::theta7: return 6;
    case Family::G7: return 3;
    }
    throw DomainError("unknown combinator family");
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::theta4: return "theta4";
    case Family::G4: return "G4";
    case Family::theta8: return "theta8";
    case Family::G8: return "G8";
    case Family::theta8prime: return "theta8prime";
    case Family::theta5: return "theta5";
    case Family::G5: return "G5";
    case Family::theta7: return "theta7";
    case Family::G7: return "G7";
    }
    return "?";
}

IntSeries pochhammer_finite(int sign, std::int64_t a, std::int64_t m, std::int64_t n, std::int64_t prec)
{
    check_sign(sign);
    check_base(m);
    if (n < 0)
        throw DomainError("pochhammer length must be nonnegative");
    // (1 - s q^k) with k < 0 is -s q^k (1 - s q^{-k}); collect those shifts first.
    std::int64_t negative_shift = 0;
    for (std::int64_t i = 0; i < n; ++i)
        if (a + m * i < 0)
            negative_shift += a + m * i;
    const std::int64_t work = prec - negative_shift;
    IntSeries acc = int_one(work);
    Integer scalar = 1;
    const Integer s(sign);
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t k = a + m * i;
        if (k > 0) {
            acc = acc.mul_binomial(s, k);
        } else if (k == 0) {
            scalar *= 1 - sign;
        } else {
            scalar *= -sign;
            acc = acc.mul_binomial(s, -k);
        }
    }
    if (scalar == 0)
        return int_zero(prec);
    return (scalar * acc).shift(negative_shift);
}

IntSeries pochhammer_infinite(int sign, std::int64_t a, std::int64_t m, std::int64_t prec)
{
    check_sign(sign);
    check_base(m);
    if (a < 1)
        throw DomainError("infinite pochhammer (" + std::string(sign > 0 ? "" : "-") + "q^" + std::to_string(a) +
                          ";q^" + std::to_string(m) + ") needs a >= 1");
    IntSeries acc = int_one(prec);
    const Integer s(sign);
    for (std::int64_t k = a; k < prec; k += m)
        acc = acc.mul_binomial(s, k);
    return acc;
}

IntSeries theta_product(const ThetaAtom &atom, std::int64_t prec)
{
    check_sign(atom.sign);
    check_base(atom.m);
    if (atom.is_zero())
        return int_zero(prec);
    const int s = atom.sign;
    const std::int64_t m = atom.m;
    std::int64_t a = atom.a;
    int factor = 1;
    std::int64_t shift = 0;
    // j(x) = -x j(Qx) and j(x) = -Q x^{-1} j(x/Q) with Q = q^m.
    while (a < 0) {
        factor *= -s;
        shift += a;
        a += m;
    }
    while (a > m) {
        factor *= -s;
        shift += m - a;
        a -= m;
    }
    const std::int64_t work = prec - shift;
    IntSeries core = pochhammer_infinite(1, m, m, work);
    if (a == 0 || a == m) {
        // j(-1;Q) = 2 (-Q;Q)^2 (Q;Q); j(-Q;Q) = j(-1;Q).
        IntSeries half = pochhammer_infinite(-1, m, m, work);
        core = Integer(2) * (core * half * half);
    } else {
        core = core * pochhammer_infinite(s, a, m, work) * pochhammer_infinite(s, m - a, m, work);
    }
    return (Integer(factor) * core).shift(shift);
}

IntSeries theta_sum(const ThetaAtom &atom, std::int64_t prec)
{
    check_sign(atom.sign);
    check_base(atom.m);
    const std::int64_t m = atom.m;
    const std::int64_t a = atom.a;
    auto E = [&](std::int64_t n) { return m * n * (n - 1) / 2 + a * n; };
    // E is convex with vertex at 1/2 - a/m.
    std::int64_t centre = floor_div(m - 2 * a, 2 * m);
    std::int64_t lo = std::min(E(centre), E(centre + 1));
    if (lo >= prec)
        return int_zero(prec);
    std::vector<Integer> c(static_cast<std::size_t>(prec - lo), Integer(0));
    auto add = [&](std::int64_t n) {
        const std::int64_t e = E(n);
        const bool negative = atom.sign == 1 && residue(n, 2) == 1;
        auto &slot = c[static_cast<std::size_t>(e - lo)];
        slot += negative ? -1 : 1;
    };
    for (std::int64_t n = centre; E(n) < prec; --n)
        add(n);
    for (std::int64_t n = centre + 1; E(n) < prec; ++n)
        add(n);
    IntSeries out(Integer(0), lo, prec, std::move(c));
    return out.is_zero_through_prec() ? int_zero(prec) : out.normalized();
}

IntSeries atom_series(const ThetaAtom &atom, std::int64_t prec)
{
    if (auto hit = atom_cache().get(atom, prec))
        return *hit;
    IntSeries s = theta_product(atom, prec);
    atom_cache().put(atom, s);
    return s;
}

IntSeries eta_quotient_integer(const std::vector<Factor> &num, const std::vector<Factor> &den, std::int64_t shift,
                               std::int64_t prec)
{
    for (const auto &f : den)
        if (!has_unit_lead(f.atom))
            throw NotUnitError("denominator " + f.atom.str() + " has leading coefficient 2");
    std::int64_t work = prec - shift;
    for (int i = 0; i < kMaxEscalations; ++i) {
        IntSeries acc = numerator_product(num, work);
        for (const auto &f : den) {
            if (f.exponent < 0)
                throw DomainError("factor exponents must be positive");
            for (int k = 0; k < f.exponent; ++k)
                acc = acc * atom_inverse_int(f.atom, work);
        }
        acc = acc.shift(shift);
        if (acc.prec() >= prec)
            return acc.truncated(prec);
        work += prec - acc.prec();
    }
    throw Error("precision escalation did not converge for eta quotient");
}

RatSeries eta_quotient(const std::vector<Factor> &num, const std::vector<Factor> &den, std::int64_t shift,
                       const Rational &scale, std::int64_t prec)
{
    bool integral = true;
    for (const auto &f : den)
        integral = integral && has_unit_lead(f.atom);
    if (integral)
        return scale * to_rational(eta_quotient_integer(num, den, shift, prec));
    std::int64_t work = prec - shift;
    for (int i = 0; i < kMaxEscalations; ++i) {
        RatSeries acc = to_rational(numerator_product(num, work));
        for (const auto &f : den) {
            if (f.exponent < 0)
                throw DomainError("factor exponents must be positive");
            for (int k = 0; k < f.exponent; ++k)
                acc = acc * atom_inverse_rational(f.atom, work);
        }
        acc = acc.shift(shift);
        if (acc.prec() >= prec)
            return scale * acc.truncated(prec);
        work += prec - acc.prec();
    }
    throw Error("precision escalation did not converge for eta quotient");
}

IntSeries mock_g(const GSpec &spec, std::int64_t prec)
{
    check_sign(spec.sign);
    if (spec.a <= 0 || spec.a >= spec.m)
        throw DomainError(spec.str() + " needs 0 < a < m");
    if (auto hit = g_cache().get(spec, prec))
        return *hit;
    const std::int64_t a = spec.a;
    const std::int64_t m = spec.m;
    const Integer s(spec.sign);
    // Inner sum is needed through prec + a because of the x^{-1} prefactor.
    const std::int64_t work = prec + a;
    IntSeries sum = int_zero(work);
    IntSeries recip = int_one(work).div_binomial(s, a); // 1/(x)_1
    for (std::int64_t n = 0; m * n * n < work; ++n) {
        if (n > 0) {
            recip = recip.div_binomial(s, a + m * n).div_binomial(s, m * n - a);
        }
        sum = sum + recip.shift(m * n * n).truncated(work);
    }
    IntSeries out = (s * (sum - Integer(1))).shift(-a);
    g_cache().put(spec, out);
    return out;
}

IntSeries eulerian_sum(Eulerian kind, std::int64_t prec)
{
    IntSeries sum = int_zero(prec);
    IntSeries recip = int_one(prec);
    for (std::int64_t n = 0;; ++n) {
        const std::int64_t e = kind == Eulerian::f0 ? n * n : n * n + n;
        if (e >= prec)
            break;
        if (n > 0)
            recip = recip.div_binomial(Integer(-1), n);
        sum = sum + recip.shift(e).truncated(prec);
    }
    return sum;
}

RatSeries combinator(const CombinatorSpec &spec, std::int64_t prec)
{
    const std::size_t arity = family_arity(spec.family);
    if (spec.coefficients.size() != arity)
        throw DomainError(family_name(spec.family) + " takes " + std::to_string(arity) + " coefficients, got " +
                          std::to_string(spec.coefficients.size()));
    RatSeries out(Rational(0), prec);
    switch (spec.family) {
    case Family::G4:
    case Family::G8:
    case Family::G5:
    case Family::G7: {
        auto terms = g_family(spec.family);
        for (std::size_t i = 0; i < arity; ++i) {
            const Rational &b = spec.coefficients[i];
            if (b.is_zero())
                continue;
            const GTerm &t = terms[i];
            IntSeries piece = mock_g(t.spec, prec - t.shift).shift(t.shift) + t.constant;
            out = out + b * to_rational(piece);
        }
        return out;
    }
    default:
        break;
    }
    ThetaFamily fam = theta_family(spec.family);
    for (std::int64_t work = prec, i = 0; i < kMaxEscalations; ++i) {
        RatSeries numer(Rational(0), work);
        for (std::size_t k = 0; k < arity; ++k) {
            const Rational &c = spec.coefficients[k];
            if (c.is_zero())
                continue;
            const EtaTerm &t = fam.terms[k];
            numer = numer + c * to_rational(eta_quotient_integer(t.num, {}, t.shift, work));
        }
        RatSeries res = fam.scale * (numer * to_rational(eta_quotient_integer({}, fam.den, 0, work)));
        if (res.prec() >= prec)
            return res.truncated(prec);
        work += prec - res.prec();
    }
    throw Error("precision escalation did not converge for " + family_name(spec.family));
}

std::vector<ThetaAtom> cached_atoms() { return atom_cache().keys(); }

void clear_theta_caches()
{
    atom_cache().clear();
    inverse_cache().clear();
    rational_inverse_cache().clear();
    g_cache().clear();
}

} // namespace qseries
