#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qseries/rational.hpp"

namespace qseries {

/// Element of the group ring Z[z]/(z^M - 1).
///
/// Index r of counts() holds the total coefficient of every z^e with
/// e = r (mod M). Used as the coefficient ring of the two-variable rank and
/// crank generating functions, so that index a of the q^n coefficient is the
/// number of partitions of n whose statistic is congruent to a mod M.
class CyclicLaurent {
public:
    /// The zero element. Throws DomainError if `modulus` is zero.
    explicit CyclicLaurent(std::size_t modulus);
    /// Throws DomainError unless `counts.size() == modulus`.
    CyclicLaurent(std::size_t modulus, std::vector<Integer> counts);

    [[nodiscard]] std::size_t modulus() const { return counts_.size(); }
    [[nodiscard]] const std::vector<Integer> &counts() const { return counts_; }
    [[nodiscard]] const Integer &operator[](std::size_t residue) const { return counts_.at(residue); }

    [[nodiscard]] bool is_zero() const;
    /// Sum of all counts; a ring homomorphism to Z.
    [[nodiscard]] Integer augmentation() const;
    /// Multiplication by z^k.
    [[nodiscard]] CyclicLaurent rotated(std::int64_t k) const;
    /// Index of the single nonzero entry when the element is +-z^k.
    [[nodiscard]] bool is_signed_monomial(std::size_t &exponent, int &sign) const;

    /// "[c0 c1 ... c(M-1)]"
    [[nodiscard]] std::string str() const;

    CyclicLaurent &operator+=(const CyclicLaurent &rhs);
    CyclicLaurent &operator-=(const CyclicLaurent &rhs);
    friend CyclicLaurent operator+(CyclicLaurent lhs, const CyclicLaurent &rhs) { return lhs += rhs; }
    friend CyclicLaurent operator-(CyclicLaurent lhs, const CyclicLaurent &rhs) { return lhs -= rhs; }
    friend CyclicLaurent operator*(const CyclicLaurent &lhs, const CyclicLaurent &rhs);
    CyclicLaurent operator-() const;

    friend bool operator==(const CyclicLaurent &, const CyclicLaurent &) = default;

    friend void add_mul(CyclicLaurent &acc, const CyclicLaurent &a, const CyclicLaurent &b);

private:
    void require_same_modulus(const CyclicLaurent &other) const;

    std::vector<Integer> counts_;
};

void add_mul(CyclicLaurent &acc, const CyclicLaurent &a, const CyclicLaurent &b);
CyclicLaurent operator*(const CyclicLaurent &lhs, const CyclicLaurent &rhs);

/// z^(exponent mod modulus); negative exponents fold into [0, modulus).
CyclicLaurent cyclic_embed(std::int64_t exponent, std::size_t modulus);

} // namespace qseries
