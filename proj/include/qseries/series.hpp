#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/error.hpp"
#include "qseries/ring.hpp"

namespace qseries {

/// Floor division that rounds toward negative infinity.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline std::int64_t residue(std::int64_t e, std::int64_t t) { return ((e % t) + t) % t; }

template <class R>
struct Mismatch {
    std::int64_t exponent;
    R lhs;
    R rhs;
};

template <class R>
struct Comparison {
    bool equal = true;
    /// Exclusive upper end of the compared window.
    std::int64_t window_end = 0;
    std::int64_t window_begin = 0;
    std::optional<Mismatch<R>> first_mismatch;
};

/// Truncated Laurent series in q with absolute precision.
///
/// Coefficients are stored for exponents min_exp() .. prec()-1. Everything at
/// or above prec() is unknown. Below min_exp() the series is known to vanish.
template <class R>
class Series {
public:
    using Ring = R;
    using Traits = RingTraits<R>;

    /// Zero series O(q^prec) over the ring of `proto`, stored from q^0.
    Series(const R &proto, std::int64_t prec)
        : zero_(Traits::zero_like(proto)), min_exp_(std::min<std::int64_t>(0, prec)), prec_(prec),
          coeffs_(static_cast<std::size_t>(prec - min_exp_), zero_)
    {
    }

    Series(const R &proto, std::int64_t min_exp, std::int64_t prec, std::vector<R> coeffs)
        : zero_(Traits::zero_like(proto)), min_exp_(min_exp), prec_(prec), coeffs_(std::move(coeffs))
    {
        if (min_exp_ > prec_)
            throw WindowError("min_exp " + std::to_string(min_exp_) + " exceeds prec " + std::to_string(prec_));
        if (static_cast<std::int64_t>(coeffs_.size()) != prec_ - min_exp_)
            throw WindowError("coefficient count does not match window");
        for (const auto &c : coeffs_)
            if (!Traits::same_ring(c, zero_))
                throw RingMismatchError("coefficient " + Traits::tag(c) + " in " + Traits::tag(zero_) + " series");
    }

    /// c * q^e + O(q^prec); empty when e >= prec.
    static Series monomial(const R &c, std::int64_t e, std::int64_t prec)
    {
        if (e >= prec)
            return Series(c, prec);
        std::vector<R> coeffs(static_cast<std::size_t>(prec - e), Traits::zero_like(c));
        coeffs[0] = c;
        return Series(c, e, prec, std::move(coeffs));
    }

    static Series one(const R &proto, std::int64_t prec) { return monomial(Traits::one_like(proto), 0, prec); }

    [[nodiscard]] std::int64_t min_exp() const { return min_exp_; }
    [[nodiscard]] std::int64_t prec() const { return prec_; }
    [[nodiscard]] const std::vector<R> &coeffs() const { return coeffs_; }
    [[nodiscard]] const R &zero() const { return zero_; }
    [[nodiscard]] std::string ring_tag() const { return Traits::tag(zero_); }

    /// Zero below min_exp; throws WindowError at or above prec.
    [[nodiscard]] const R &coeff(std::int64_t e) const
    {
        if (e >= prec_)
            throw WindowError("coefficient at q^" + std::to_string(e) + " is unknown (prec " +
                              std::to_string(prec_) + ")");
        if (e < min_exp_)
            return zero_;
        return coeffs_[static_cast<std::size_t>(e - min_exp_)];
    }

    /// Lowest exponent with a nonzero coefficient, if any below prec.
    [[nodiscard]] std::optional<std::int64_t> valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!Traits::is_zero(coeffs_[i]))
                return min_exp_ + static_cast<std::int64_t>(i);
        return std::nullopt;
    }

    [[nodiscard]] bool is_zero_through_prec() const { return !valuation().has_value(); }

    /// Drops leading zeros; prec is untouched.
    [[nodiscard]] Series normalized() const
    {
        auto v = valuation();
        std::int64_t start = v ? *v : prec_;
        if (start == min_exp_)
            return *this;
        std::vector<R> c(coeffs_.begin() + (start - min_exp_), coeffs_.end());
        return Series(zero_, start, prec_, std::move(c));
    }

    [[nodiscard]] Series truncated(std::int64_t prec) const
    {
        if (prec >= prec_)
            return *this;
        std::int64_t lo = std::min(min_exp_, prec);
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(prec - lo));
        for (std::int64_t e = lo; e < prec; ++e)
            c.push_back(coeff(e));
        return Series(zero_, lo, prec, std::move(c));
    }

    /// Re-expresses the window so that it starts at `lo` (<= min_exp).
    [[nodiscard]] Series extended_down(std::int64_t lo) const
    {
        if (lo >= min_exp_)
            return *this;
        std::vector<R> c(static_cast<std::size_t>(min_exp_ - lo), zero_);
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return Series(zero_, lo, prec_, std::move(c));
    }

    void require_same_ring(const Series &other) const
    {
        if (!Traits::same_ring(zero_, other.zero_))
            throw RingMismatchError("ring mismatch: " + ring_tag() + " vs " + other.ring_tag());
    }

    friend Series operator+(const Series &a, const Series &b) { return a.combine(b, false); }
    friend Series operator-(const Series &a, const Series &b) { return a.combine(b, true); }

    Series operator-() const
    {
        Series out(*this);
        for (auto &c : out.coeffs_)
            c = -c;
        return out;
    }

    /// Adds c at q^0 without touching prec.
    friend Series operator+(const Series &a, const R &c) { return a.add_constant(c); }
    friend Series operator-(const Series &a, const R &c) { return a.add_constant(-c); }

    friend Series operator*(const Series &a, const Series &b) { return a.multiply(b); }

    friend Series operator*(const R &c, const Series &a)
    {
        Series out(a);
        if (!Traits::same_ring(c, a.zero_))
            throw RingMismatchError("scalar ring mismatch");
        for (auto &x : out.coeffs_)
            x = c * x;
        return out;
    }

    /// Multiplication by q^k.
    [[nodiscard]] Series shift(std::int64_t k) const
    {
        Series out(*this);
        out.min_exp_ += k;
        out.prec_ += k;
        return out;
    }

    /// Multiplicative inverse. Result prec is prec - 2v where v is the valuation.
    [[nodiscard]] Series invert() const
    {
        auto v = valuation();
        if (!v)
            throw NotUnitError("cannot invert a series that vanishes through q^" + std::to_string(prec_ - 1));
        const R &lead = coeff(*v);
        auto lead_inv = Traits::unit_inverse(lead);
        if (!lead_inv)
            throw NotUnitError("leading coefficient " + Traits::str(lead) + " at q^" + std::to_string(*v) +
                               " is not a unit in " + ring_tag());
        const std::int64_t out_min = -*v;
        const std::int64_t out_prec = prec_ - 2 * *v;
        const std::size_t n = static_cast<std::size_t>(out_prec - out_min);
        std::vector<R> a;
        a.reserve(n);
        for (std::int64_t e = *v; e < prec_; ++e)
            a.push_back(coeff(e));
        std::vector<R> b(n, zero_);
        const R neg_inv = -*lead_inv;
        for (std::size_t k = 0; k < n; ++k) {
            R acc = zero_;
            if (k == 0)
                acc = Traits::one_like(zero_);
            for (std::size_t i = 1; i <= k; ++i)
                if (!Traits::is_zero(a[i]))
                    Traits::add_mul(acc, a[i], b[k - i]);
            if (k == 0)
                b[0] = *lead_inv;
            else
                b[k] = neg_inv * acc;
        }
        return Series(zero_, out_min, out_prec, std::move(b));
    }

    /// Substitutes q -> q^t. A coefficient known below prec lands below
    /// t*(prec-1)+1, which is the precision reported.
    [[nodiscard]] Series inflate(std::int64_t t) const
    {
        if (t < 1)
            throw DomainError("inflate factor must be positive");
        if (t == 1)
            return *this;
        const std::int64_t out_min = t * min_exp_;
        const std::int64_t out_prec = std::max(out_min, t * (prec_ - 1) + 1);
        std::vector<R> c(static_cast<std::size_t>(out_prec - out_min), zero_);
        for (std::int64_t e = min_exp_; e < prec_; ++e) {
            std::int64_t f = t * e;
            if (f < out_prec)
                c[static_cast<std::size_t>(f - out_min)] = coeff(e);
        }
        return Series(zero_, out_min, out_prec, std::move(c));
    }

    /// Keeps exponents congruent to r mod t, in the original variable.
    [[nodiscard]] Series dissect(std::int64_t t, std::int64_t r) const
    {
        if (t < 1 || r < 0 || r >= t)
            throw DomainError("dissect needs t >= 1 and 0 <= r < t");
        Series out(*this);
        for (std::int64_t e = min_exp_; e < prec_; ++e)
            if (residue(e, t) != r)
                out.coeffs_[static_cast<std::size_t>(e - min_exp_)] = zero_;
        return out;
    }

    /// Coefficient n of the result is the coefficient at t*n + r. Any nonzero
    /// coefficient off that progression is an error.
    [[nodiscard]] Series deflate(std::int64_t t, std::int64_t r) const
    {
        if (t < 1 || r < 0 || r >= t)
            throw DomainError("deflate needs t >= 1 and 0 <= r < t");
        for (std::int64_t e = min_exp_; e < prec_; ++e)
            if (residue(e, t) != r && !Traits::is_zero(coeff(e)))
                throw DomainError("deflate(" + std::to_string(t) + "," + std::to_string(r) +
                                  "): nonzero coefficient at q^" + std::to_string(e));
        const std::int64_t out_prec = ceil_div(prec_ - r, t);
        const std::int64_t out_min = std::min(ceil_div(min_exp_ - r, t), out_prec);
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(out_prec - out_min));
        for (std::int64_t n = out_min; n < out_prec; ++n)
            c.push_back(coeff(t * n + r));
        return Series(zero_, out_min, out_prec, std::move(c));
    }

    /// q -> -q.
    [[nodiscard]] Series negate_variable() const
    {
        Series out(*this);
        for (std::int64_t e = min_exp_; e < prec_; ++e)
            if (residue(e, 2) == 1)
                out.coeffs_[static_cast<std::size_t>(e - min_exp_)] = -coeff(e);
        return out;
    }

    /// Multiplies by (1 - c q^k), k >= 1.
    [[nodiscard]] Series mul_binomial(const R &c, std::int64_t k) const
    {
        return binomial_step(c, k, false);
    }

    /// Divides by (1 - c q^k), k >= 1.
    [[nodiscard]] Series div_binomial(const R &c, std::int64_t k) const
    {
        return binomial_step(c, k, true);
    }

    template <class F>
    [[nodiscard]] auto map(F &&f) const
    {
        using S = decltype(f(zero_));
        std::vector<S> c;
        c.reserve(coeffs_.size());
        for (const auto &x : coeffs_)
            c.push_back(f(x));
        return Series<S>(f(zero_), min_exp_, prec_, std::move(c));
    }

    friend bool operator==(const Series &a, const Series &b)
    {
        if (a.prec_ != b.prec_ || !Traits::same_ring(a.zero_, b.zero_))
            return false;
        std::int64_t lo = std::min(a.min_exp_, b.min_exp_);
        for (std::int64_t e = lo; e < a.prec_; ++e)
            if (!(a.coeff(e) == b.coeff(e)))
                return false;
        return true;
    }

private:
    Series combine(const Series &b, bool subtract) const
    {
        require_same_ring(b);
        const std::int64_t prec = std::min(prec_, b.prec_);
        const std::int64_t lo = std::min({min_exp_, b.min_exp_, prec});
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(prec - lo));
        for (std::int64_t e = lo; e < prec; ++e) {
            const R &x = e < prec_ ? coeff(e) : zero_;
            const R &y = e < b.prec_ ? b.coeff(e) : b.zero_;
            c.push_back(subtract ? R(x - y) : R(x + y));
        }
        return Series(zero_, lo, prec, std::move(c));
    }

    Series add_constant(const R &c) const
    {
        if (!Traits::same_ring(c, zero_))
            throw RingMismatchError("constant ring mismatch");
        if (prec_ <= 0)
            return *this;
        Series out = extended_down(0);
        auto &slot = out.coeffs_[static_cast<std::size_t>(-out.min_exp_)];
        slot = slot + c;
        return out;
    }

    Series multiply(const Series &other) const
    {
        require_same_ring(other);
        const Series a = normalized();
        const Series b = other.normalized();
        const std::int64_t prec = std::min(a.prec_ + b.min_exp_, b.prec_ + a.min_exp_);
        const std::int64_t lo = std::min(a.min_exp_ + b.min_exp_, prec);
        const std::size_t n = static_cast<std::size_t>(prec - lo);
        std::vector<R> c(n, zero_);
        const std::size_t na = a.coeffs_.size();
        const std::size_t nb = b.coeffs_.size();
        for (std::size_t i = 0; i < na && i < n; ++i) {
            if (Traits::is_zero(a.coeffs_[i]))
                continue;
            const std::size_t jmax = std::min(nb, n - i);
            for (std::size_t j = 0; j < jmax; ++j)
                if (!Traits::is_zero(b.coeffs_[j]))
                    Traits::add_mul(c[i + j], a.coeffs_[i], b.coeffs_[j]);
        }
        return Series(zero_, lo, prec, std::move(c));
    }

    Series binomial_step(const R &c, std::int64_t k, bool divide) const
    {
        if (k < 1)
            throw DomainError("binomial factor needs exponent >= 1");
        if (!Traits::same_ring(c, zero_))
            throw RingMismatchError("binomial coefficient ring mismatch");
        Series out(*this);
        if (Traits::is_zero(c))
            return out;
        const auto n = static_cast<std::int64_t>(out.coeffs_.size());
        if (divide) {
            for (std::int64_t i = k; i < n; ++i)
                Traits::add_mul(out.coeffs_[static_cast<std::size_t>(i)], c,
                                out.coeffs_[static_cast<std::size_t>(i - k)]);
        } else {
            const R neg = -c;
            for (std::int64_t i = n - 1; i >= k; --i)
                Traits::add_mul(out.coeffs_[static_cast<std::size_t>(i)], neg,
                                out.coeffs_[static_cast<std::size_t>(i - k)]);
        }
        return out;
    }

    R zero_;
    std::int64_t min_exp_;
    std::int64_t prec_;
    std::vector<R> coeffs_;
};

/// Compares a and b on [min(min_exps), min(precs)). An empty window is a
/// WindowError, since it means the caller lost all precision.
template <class R>
Comparison<R> compare(const Series<R> &a, const Series<R> &b)
{
    a.require_same_ring(b);
    Comparison<R> out;
    out.window_begin = std::min(a.min_exp(), b.min_exp());
    out.window_end = std::min(a.prec(), b.prec());
    if (out.window_begin >= out.window_end)
        throw WindowError("empty comparison window [" + std::to_string(out.window_begin) + ", " +
                          std::to_string(out.window_end) + ")");
    for (std::int64_t e = out.window_begin; e < out.window_end; ++e) {
        if (!(a.coeff(e) == b.coeff(e))) {
            out.equal = false;
            out.first_mismatch = Mismatch<R>{e, a.coeff(e), b.coeff(e)};
            break;
        }
    }
    return out;
}

inline Series<Rational> to_rational(const Series<Integer> &s)
{
    return s.map([](const Integer &x) { return Rational(x); });
}

inline Series<Rational> to_rational(const Series<Rational> &s) { return s; }

/// Sum of index `a` across a cyclic series, as an integer series.
inline Series<Integer> component(const Series<CyclicLaurent> &s, std::size_t a)
{
    return s.map([a](const CyclicLaurent &x) { return Integer(x[a]); });
}

inline Series<Integer> augmentation(const Series<CyclicLaurent> &s)
{
    return s.map([](const CyclicLaurent &x) { return x.augmentation(); });
}

} // namespace qseries
