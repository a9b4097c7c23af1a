#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "qseries/partitions.hpp"
#include "qseries/series_io.hpp"

using namespace qseries;

namespace {

std::string read_golden(const std::string &name)
{
    std::ifstream in(std::string(QSERIES_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Integer> enumerated_counts(int n, std::size_t M, Stat stat)
{
    std::vector<Integer> c(M, Integer(0));
    for (const auto &p : enumerate_partitions(n)) {
        int s = stat == Stat::rank ? rank_of(p) : crank_of(p);
        c[static_cast<std::size_t>(residue(s, static_cast<std::int64_t>(M)))] += 1;
    }
    return c;
}

} // namespace

TEST_CASE("enumerate_partitions")
{
    auto four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == Partition({4}));
    CHECK(four[1] == Partition({3, 1}));
    CHECK(four[2] == Partition({2, 2}));
    CHECK(four[3] == Partition({2, 1, 1}));
    CHECK(four[4] == Partition({1, 1, 1, 1}));
    auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    CHECK(enumerate_partitions(9).size() == 30);
    CHECK_THROWS_AS(enumerate_partitions(46), DomainError);
    CHECK(enumerate_partitions(12, 12).size() == 77);
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
}

TEST_CASE("partition_count")
{
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(100) == Integer("190569292"));
    for (int n = 0; n <= 30; ++n)
        CHECK(partition_count(n) == static_cast<long>(enumerate_partitions(n).size()));
    for (int n = 4; n <= 200; n += 5)
        CHECK(partition_count(n) % 5 == 0);
    CHECK(partition_series(120) == atom_series(ThetaAtom::Jm(1), 120).invert());
}

TEST_CASE("rank and crank of the partitions of 4")
{
    std::multiset<int> ranks, cranks;
    for (const auto &p : enumerate_partitions(4)) {
        ranks.insert(rank_of(p));
        cranks.insert(crank_of(p));
    }
    CHECK(ranks == std::multiset<int>{3, 1, 0, -1, -3});
    CHECK(cranks == std::multiset<int>{4, 0, 2, -2, -4});
    CHECK(crank_of(Partition({1})) == -1);
    CHECK(rank_of(Partition({4})) == 3);
    CHECK(rank_of(Partition({1, 1, 1, 1})) == -3);
    CHECK_THROWS_AS(rank_of(Partition()), DomainError);
    CHECK_THROWS_AS(crank_of(Partition()), DomainError);
}

TEST_CASE("rank_count_series")
{
    auto s = rank_count_series(5, 40);
    for (std::size_t a = 0; a < 5; ++a)
        CHECK(s.coeff(4)[a] == 1);
    CHECK(s.coeff(0) == cyclic_embed(0, 5));
    for (std::int64_t n = 0; n < 40; ++n)
        for (std::size_t a = 1; a < 5; ++a)
            CHECK(s.coeff(n)[a] == s.coeff(n)[5 - a]);
}

TEST_CASE("crank_count_series and the q^1 anomaly")
{
    auto s = crank_count_series(5, 40);
    for (std::size_t a = 0; a < 5; ++a)
        CHECK(s.coeff(4)[a] == 1);
    CHECK(crank_count_series(4, 5).coeff(1) == CyclicLaurent(4, {-1, 1, 0, 1}));
}

TEST_CASE("generating functions agree with enumeration")
{
    for (std::size_t M : {4u, 5u, 7u, 8u, 11u}) {
        CountTable ranks(Stat::rank, M, 36);
        CountTable cranks(Stat::crank, M, 36);
        for (int n = 1; n <= 35; ++n) {
            auto r = enumerated_counts(n, M, Stat::rank);
            for (std::size_t a = 0; a < M; ++a)
                CHECK(ranks.count(static_cast<std::int64_t>(a), n) == r[a]);
            if (n < 2)
                continue;
            auto c = enumerated_counts(n, M, Stat::crank);
            for (std::size_t a = 0; a < M; ++a)
                CHECK(cranks.count(static_cast<std::int64_t>(a), n) == c[a]);
        }
    }
}

TEST_CASE("column sums and symmetry")
{
    for (std::size_t M : {4u, 5u, 7u, 8u, 11u}) {
        for (Stat stat : {Stat::rank, Stat::crank}) {
            auto s = count_series(stat, M, 120);
            for (std::int64_t n = 0; n < 120; ++n) {
                CHECK(s.coeff(n).augmentation() == partition_count(n));
                for (std::size_t a = 1; a < M; ++a)
                    CHECK(s.coeff(n)[a] == s.coeff(n)[M - a]);
            }
        }
    }
}

TEST_CASE("residue_count")
{
    for (std::int64_t n = 4; n <= 200; n += 5)
        for (std::int64_t a = 0; a < 5; ++a)
            CHECK(residue_count(Stat::rank, a, 5, n) * 5 == partition_count(n));
    for (std::int64_t n = 6; n <= 150; n += 11)
        for (std::int64_t a = 0; a < 11; ++a)
            CHECK(residue_count(Stat::crank, a, 11, n) * 11 == partition_count(n));
    for (std::int64_t n = 0; n <= 300; n += 2)
        CHECK(residue_count(Stat::rank, 2, 4, n) == residue_count(Stat::crank, 1, 4, n));
    CountTable t(Stat::rank, 4, 10);
    CHECK_THROWS_AS((void)t.count(0, 10), WindowError);
    CHECK_THROWS_AS((void)t.count(4, 3), DomainError);
}

TEST_CASE("deviation_series")
{
    for (std::size_t M : {4u, 5u, 7u, 8u}) {
        for (Stat stat : {Stat::rank, Stat::crank}) {
            RatSeries sum(Rational(0), 100);
            for (std::size_t a = 0; a < M; ++a)
                sum = sum + deviation_series(stat, static_cast<std::int64_t>(a), M, 100);
            CHECK(sum.is_zero_through_prec());
        }
    }
    for (std::int64_t a = 0; a < 5; ++a)
        CHECK(deviation_series(Stat::rank, a, 5, 150).dissect(5, 4).is_zero_through_prec());
    CHECK(deviation_series(Stat::rank, 0, 4, 10).coeff(0) == Rational(Integer(3), Integer(4)));
    CHECK(deviation_series(Stat::rank, 1, 4, 10).coeff(0) == Rational(Integer(-1), Integer(4)));
    CHECK(deviation_series(Stat::rank, 1, 4, 100) == deviation_series(Stat::rank, 3, 4, 100));
    CHECK(deviation_series(Stat::crank, 1, 4, 100) == deviation_series(Stat::crank, 3, 4, 100));
    for (std::int64_t a = 1; a < 4; ++a) {
        CHECK(deviation_series(Stat::rank, a, 8, 100) == deviation_series(Stat::rank, 8 - a, 8, 100));
        CHECK(deviation_series(Stat::crank, a, 7, 100) == deviation_series(Stat::crank, 7 - a, 7, 100));
    }
}

TEST_CASE("golden count tables from enumeration")
{
    for (std::size_t M : {5u, 8u}) {
        auto r = series_from_text<CyclicLaurent>(read_golden("rank_counts_M" + std::to_string(M) + "_30.txt"));
        CHECK(r == count_series(Stat::rank, M, 30));
        auto c = series_from_text<CyclicLaurent>(read_golden("crank_counts_M" + std::to_string(M) + "_30.txt"));
        CHECK(c == count_series(Stat::crank, M, 30));
    }
    CHECK(series_from_text<Rational>(read_golden("D_0_4_35.txt")) == deviation_series(Stat::rank, 0, 4, 35));
    CHECK(series_from_text<Rational>(read_golden("DC_1_8_35.txt")) == deviation_series(Stat::crank, 1, 8, 35));
}
