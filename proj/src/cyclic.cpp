#include "qseries/cyclic.hpp"

#include "qseries/error.hpp"

namespace qseries {

CyclicLaurent::CyclicLaurent(std::size_t modulus)
{
    if (modulus == 0)
        throw DomainError("cyclic modulus must be positive");
    counts_.assign(modulus, Integer(0));
}

CyclicLaurent::CyclicLaurent(std::size_t modulus, std::vector<Integer> counts) : counts_(std::move(counts))
{
    if (modulus == 0)
        throw DomainError("cyclic modulus must be positive");
    if (counts_.size() != modulus)
        throw DomainError("cyclic counts length " + std::to_string(counts_.size()) + " != modulus " +
                          std::to_string(modulus));
}

bool CyclicLaurent::is_zero() const
{
    for (const auto &c : counts_)
        if (sgn(c) != 0)
            return false;
    return true;
}

Integer CyclicLaurent::augmentation() const
{
    Integer total = 0;
    for (const auto &c : counts_)
        total += c;
    return total;
}

CyclicLaurent CyclicLaurent::rotated(std::int64_t k) const
{
    const auto m = static_cast<std::int64_t>(modulus());
    const auto shift = static_cast<std::size_t>(((k % m) + m) % m);
    std::vector<Integer> out(modulus());
    for (std::size_t i = 0; i < modulus(); ++i)
        out[(i + shift) % modulus()] = counts_[i];
    return CyclicLaurent(modulus(), std::move(out));
}

bool CyclicLaurent::is_signed_monomial(std::size_t &exponent, int &sign) const
{
    bool found = false;
    for (std::size_t i = 0; i < modulus(); ++i) {
        if (sgn(counts_[i]) == 0)
            continue;
        if (found || (counts_[i] != 1 && counts_[i] != -1))
            return false;
        found = true;
        exponent = i;
        sign = sgn(counts_[i]);
    }
    return found;
}

std::string CyclicLaurent::str() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < modulus(); ++i) {
        if (i)
            out += ' ';
        out += counts_[i].get_str();
    }
    return out + "]";
}

void CyclicLaurent::require_same_modulus(const CyclicLaurent &other) const
{
    if (modulus() != other.modulus())
        throw RingMismatchError("cyclic-laurent(" + std::to_string(modulus()) + ") vs cyclic-laurent(" +
                                std::to_string(other.modulus()) + ")");
}

CyclicLaurent &CyclicLaurent::operator+=(const CyclicLaurent &rhs)
{
    require_same_modulus(rhs);
    for (std::size_t i = 0; i < modulus(); ++i)
        counts_[i] += rhs.counts_[i];
    return *this;
}

CyclicLaurent &CyclicLaurent::operator-=(const CyclicLaurent &rhs)
{
    require_same_modulus(rhs);
    for (std::size_t i = 0; i < modulus(); ++i)
        counts_[i] -= rhs.counts_[i];
    return *this;
}

CyclicLaurent CyclicLaurent::operator-() const
{
    CyclicLaurent out(*this);
    for (auto &c : out.counts_)
        c = -c;
    return out;
}

void add_mul(CyclicLaurent &acc, const CyclicLaurent &a, const CyclicLaurent &b)
{
    acc.require_same_modulus(a);
    acc.require_same_modulus(b);
    const std::size_t m = acc.modulus();
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(a.counts_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (sgn(b.counts_[j]) == 0)
                continue;
            std::size_t r = i + j;
            if (r >= m)
                r -= m;
            mpz_addmul(acc.counts_[r].get_mpz_t(), a.counts_[i].get_mpz_t(), b.counts_[j].get_mpz_t());
        }
    }
}

CyclicLaurent operator*(const CyclicLaurent &lhs, const CyclicLaurent &rhs)
{
    lhs.require_same_modulus(rhs);
    CyclicLaurent out(lhs.modulus());
    add_mul(out, lhs, rhs);
    return out;
}

CyclicLaurent cyclic_embed(std::int64_t exponent, std::size_t modulus)
{
    if (modulus == 0)
        throw DomainError("cyclic modulus must be positive");
    const auto m = static_cast<std::int64_t>(modulus);
    std::vector<Integer> counts(modulus, Integer(0));
    counts[static_cast<std::size_t>(((exponent % m) + m) % m)] = 1;
    return CyclicLaurent(modulus, std::move(counts));
}

} // namespace qseries
