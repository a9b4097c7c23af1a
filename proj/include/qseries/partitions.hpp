#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qseries/theta.hpp"

namespace qseries {

constexpr int kDefaultEnumerationCap = 45;

/// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws DomainError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] const std::vector<int> &parts() const { return parts_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int size() const;
    [[nodiscard]] int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    /// Number of parts equal to 1.
    [[nodiscard]] int ones() const;
    /// Number of parts larger than ones().
    [[nodiscard]] int mu() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

/// Largest part minus number of parts. Throws DomainError on the empty partition.
int rank_of(const Partition &p);
/// Largest part if there are no ones, otherwise mu - ones.
int crank_of(const Partition &p);

/// All partitions of n, largest-first lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap);

/// p(n) by Euler's pentagonal recurrence (memoized).
Integer partition_count(std::int64_t n);

/// sum p(n) q^n + O(q^prec).
IntSeries partition_series(std::int64_t prec);

enum class Stat { rank, crank };

std::string stat_name(Stat s);

/// sum q^{n^2} / ((zq)_n (z^{-1}q)_n) with z in Z[z]/(z^M - 1).
Series<CyclicLaurent> rank_count_series(std::size_t M, std::int64_t prec);

/// prod (1 - q^n) / ((1 - z q^n)(1 - z^{-1} q^n)) with z in Z[z]/(z^M - 1).
/// The q^1 coefficient is z + z^{-1} - 1, not the combinatorial crank count.
Series<CyclicLaurent> crank_count_series(std::size_t M, std::int64_t prec);

/// Memoized rank_count_series / crank_count_series.
Series<CyclicLaurent> count_series(Stat stat, std::size_t M, std::int64_t prec);

/// Fixed-precision snapshot of one count series.
class CountTable {
public:
    CountTable(Stat stat, std::size_t M, std::int64_t prec);

    [[nodiscard]] Stat stat() const { return stat_; }
    [[nodiscard]] std::size_t modulus() const { return series_.zero().modulus(); }
    [[nodiscard]] std::int64_t prec() const { return series_.prec(); }
    [[nodiscard]] const Series<CyclicLaurent> &series() const { return series_; }
    /// N(a,M;n) or C(a,M;n); WindowError when n >= prec().
    [[nodiscard]] Integer count(std::int64_t a, std::int64_t n) const;

private:
    Stat stat_;
    Series<CyclicLaurent> series_;
};

/// N(a,M;n) or C(a,M;n) from the memoized generating function.
Integer residue_count(Stat stat, std::int64_t a, std::size_t M, std::int64_t n);

/// sum_n N(a,M;n) q^n (or the crank analogue) as an integer series.
IntSeries residue_series(Stat stat, std::int64_t a, std::size_t M, std::int64_t prec);

/// D(a,M) or D_C(a,M): sum (count - p(n)/M) q^n.
RatSeries deviation_series(Stat stat, std::int64_t a, std::size_t M, std::int64_t prec);

void clear_count_caches();

} // namespace qseries
