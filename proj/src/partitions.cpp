#include "qseries/partitions.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace qseries {

namespace {

void check_modulus(std::size_t M)
{
    if (M == 0)
        throw DomainError("modulus must be positive");
}

std::size_t residue_index(std::int64_t a, std::size_t M)
{
    if (a < 0 || a >= static_cast<std::int64_t>(M))
        throw DomainError("residue " + std::to_string(a) + " outside [0," + std::to_string(M) + ")");
    return static_cast<std::size_t>(a);
}

void enumerate_into(int remaining, int max_part, std::vector<int> &current, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

struct CountCache {
    std::shared_mutex mu;
    std::map<std::pair<Stat, std::size_t>, Series<CyclicLaurent>> map;
};

CountCache &count_cache()
{
    static CountCache c;
    return c;
}

struct PartitionTable {
    std::mutex mu;
    std::vector<Integer> values{Integer(1)};
};

PartitionTable &partition_table()
{
    static PartitionTable t;
    return t;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::ones() const
{
    int n = 0;
    for (int p : parts_)
        n += p == 1;
    return n;
}

int Partition::mu() const
{
    const int nu = ones();
    int n = 0;
    for (int p : parts_)
        n += p > nu;
    return n;
}

std::string Partition::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

int rank_of(const Partition &p)
{
    if (p.empty())
        throw DomainError("rank of the empty partition is undefined");
    return p.largest() - static_cast<int>(p.parts().size());
}

int crank_of(const Partition &p)
{
    if (p.empty())
        throw DomainError("crank of the empty partition is undefined");
    const int nu = p.ones();
    return nu == 0 ? p.largest() : p.mu() - nu;
}

std::vector<Partition> enumerate_partitions(int n, int cap)
{
    if (n < 0)
        throw DomainError("cannot enumerate partitions of a negative number");
    if (n > cap)
        throw DomainError("enumeration of n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_into(n, n, current, out);
    return out;
}

Integer partition_count(std::int64_t n)
{
    if (n < 0)
        return 0;
    auto &table = partition_table();
    std::lock_guard lock(table.mu);
    auto &p = table.values;
    while (static_cast<std::int64_t>(p.size()) <= n) {
        const std::int64_t m = static_cast<std::int64_t>(p.size());
        Integer total = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            const bool add = k % 2 == 1;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            if (add)
                total += p[static_cast<std::size_t>(m - g1)];
            else
                total -= p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) {
                if (add)
                    total += p[static_cast<std::size_t>(m - g2)];
                else
                    total -= p[static_cast<std::size_t>(m - g2)];
            }
        }
        p.push_back(total);
    }
    return p[static_cast<std::size_t>(n)];
}

IntSeries partition_series(std::int64_t prec)
{
    if (prec <= 0)
        return IntSeries(Integer(0), prec);
    partition_count(prec - 1);
    std::vector<Integer> c;
    c.reserve(static_cast<std::size_t>(prec));
    for (std::int64_t n = 0; n < prec; ++n)
        c.push_back(partition_count(n));
    return IntSeries(Integer(0), 0, prec, std::move(c));
}

std::string stat_name(Stat s) { return s == Stat::rank ? "rank" : "crank"; }

Series<CyclicLaurent> rank_count_series(std::size_t M, std::int64_t prec)
{
    check_modulus(M);
    const CyclicLaurent zero(M);
    const CyclicLaurent z = cyclic_embed(1, M);
    const CyclicLaurent zinv = cyclic_embed(-1, M);
    Series<CyclicLaurent> sum = Series<CyclicLaurent>::one(zero, prec);
    Series<CyclicLaurent> recip = sum;
    for (std::int64_t n = 1; n * n < prec; ++n) {
        recip = recip.div_binomial(z, n).div_binomial(zinv, n);
        sum = sum + recip.shift(n * n).truncated(prec);
    }
    return sum;
}

Series<CyclicLaurent> crank_count_series(std::size_t M, std::int64_t prec)
{
    check_modulus(M);
    const CyclicLaurent zero(M);
    const CyclicLaurent one = cyclic_embed(0, M);
    const CyclicLaurent z = cyclic_embed(1, M);
    const CyclicLaurent zinv = cyclic_embed(-1, M);
    Series<CyclicLaurent> acc = Series<CyclicLaurent>::one(zero, prec);
    for (std::int64_t n = 1; n < prec; ++n)
        acc = acc.mul_binomial(one, n).div_binomial(z, n).div_binomial(zinv, n);
    return acc;
}

Series<CyclicLaurent> count_series(Stat stat, std::size_t M, std::int64_t prec)
{
    check_modulus(M);
    auto &cache = count_cache();
    const auto key = std::make_pair(stat, M);
    {
        std::shared_lock lock(cache.mu);
        auto it = cache.map.find(key);
        if (it != cache.map.end() && it->second.prec() >= prec)
            return it->second.truncated(prec);
    }
    auto s = stat == Stat::rank ? rank_count_series(M, prec) : crank_count_series(M, prec);
    std::unique_lock lock(cache.mu);
    auto it = cache.map.find(key);
    if (it == cache.map.end())
        cache.map.emplace(key, s);
    else if (it->second.prec() < prec)
        it->second = s;
    return s;
}

CountTable::CountTable(Stat stat, std::size_t M, std::int64_t prec)
    : stat_(stat), series_(count_series(stat, M, prec))
{
}

Integer CountTable::count(std::int64_t a, std::int64_t n) const
{
    const std::size_t idx = residue_index(a, modulus());
    if (n < 0)
        return 0;
    return series_.coeff(n)[idx];
}

Integer residue_count(Stat stat, std::int64_t a, std::size_t M, std::int64_t n)
{
    const std::size_t idx = residue_index(a, M);
    if (n < 0)
        return 0;
    return count_series(stat, M, n + 1).coeff(n)[idx];
}

IntSeries residue_series(Stat stat, std::int64_t a, std::size_t M, std::int64_t prec)
{
    return component(count_series(stat, M, prec), residue_index(a, M));
}

RatSeries deviation_series(Stat stat, std::int64_t a, std::size_t M, std::int64_t prec)
{
    const Rational inv_m(Integer(1), Integer(static_cast<unsigned long>(M)));
    return to_rational(residue_series(stat, a, M, prec)) - inv_m * to_rational(partition_series(prec));
}

void clear_count_caches()
{
    auto &cache = count_cache();
    std::unique_lock lock(cache.mu);
    cache.map.clear();
}

} // namespace qseries
