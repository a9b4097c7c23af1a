#include <doctest.h>

#include <random>

#include "qseries/error.hpp"
#include "qseries/ring.hpp"

using namespace qseries;

namespace {

Rational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 500);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

CyclicLaurent random_cyclic(std::mt19937_64 &rng, std::size_t m)
{
    std::uniform_int_distribution<long> d(-50, 50);
    std::vector<Integer> c;
    for (std::size_t i = 0; i < m; ++i)
        c.emplace_back(d(rng));
    return CyclicLaurent(m, std::move(c));
}

bool lowest_terms(const Rational &r)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return g == 1 && r.den() > 0;
}

} // namespace

TEST_CASE("rational_arith examples")
{
    CHECK(Rational(Integer(1), Integer(3)) + Rational(Integer(1), Integer(6)) == Rational(Integer(1), Integer(2)));
    CHECK((Rational(Integer(1), Integer(3)) + Rational(Integer(1), Integer(6))).str() == "1/2");
    Rational x(Integer(-7), Integer(12));
    CHECK(x * Rational(1) == x);
    CHECK(Rational(5) - Rational(4) == Rational(1));
    CHECK((Rational(5) - Rational(4)).str() == "1/1");
    CHECK(Rational().str() == "0/1");
    CHECK(Rational(Integer(6), Integer(-4)).str() == "-3/2");
}

TEST_CASE("rational division by zero is an error")
{
    CHECK_THROWS_AS(Rational(3) / Rational(0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DivisionByZeroError);
}

TEST_CASE("rational parse")
{
    CHECK(Rational::parse("-3/4") == Rational(Integer(-3), Integer(4)));
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/x"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZeroError);
}

TEST_CASE("rational field axioms on random triples")
{
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 300; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(lowest_terms(a * b + c));
        CHECK(lowest_terms(a - b));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(lowest_terms(a / b));
        }
        Rational acc = c;
        add_mul(acc, a, b);
        CHECK(acc == c + a * b);
    }
}

TEST_CASE("cyclic_mul examples")
{
    CHECK(cyclic_embed(1, 4) * cyclic_embed(3, 4) == cyclic_embed(0, 4));
    CyclicLaurent ones(5, {1, 1, 1, 1, 1});
    CHECK((ones * ones) == CyclicLaurent(5, {5, 5, 5, 5, 5}));
    CyclicLaurent zz(3, {0, 1, 1});
    CHECK((zz * zz) == CyclicLaurent(3, {2, 1, 1}));
}

TEST_CASE("cyclic modulus mismatch")
{
    CHECK_THROWS_AS(cyclic_embed(1, 4) * cyclic_embed(1, 5), RingMismatchError);
    CHECK_THROWS_AS(cyclic_embed(1, 4) + cyclic_embed(1, 5), RingMismatchError);
    CHECK_THROWS_AS(CyclicLaurent(3, {1, 2}), DomainError);
}

TEST_CASE("cyclic_embed examples")
{
    CHECK(cyclic_embed(0, 7) == CyclicLaurent(7, {1, 0, 0, 0, 0, 0, 0}));
    CHECK(cyclic_embed(-1, 4) == CyclicLaurent(4, {0, 0, 0, 1}));
    CHECK(cyclic_embed(10, 4) == CyclicLaurent(4, {0, 0, 1, 0}));
    CHECK(cyclic_embed(3, 4).str() == "[0 0 0 1]");
}

TEST_CASE("cyclic ring properties")
{
    std::mt19937_64 rng(77);
    for (std::size_t m : {1u, 4u, 5u, 7u, 8u, 11u}) {
        for (int i = 0; i < 40; ++i) {
            auto x = random_cyclic(rng, m), y = random_cyclic(rng, m), w = random_cyclic(rng, m);
            CHECK(x * y == y * x);
            CHECK((x * y) * w == x * (y * w));
            CHECK(x * (y + w) == x * y + x * w);
            CHECK((x * y).augmentation() == x.augmentation() * y.augmentation());
            CHECK(x * cyclic_embed(0, m) == x);
        }
        std::uniform_int_distribution<int> e(-30, 30);
        for (int i = 0; i < 40; ++i) {
            int a = e(rng), b = e(rng);
            CHECK(cyclic_embed(a, m) * cyclic_embed(b, m) == cyclic_embed(a + b, m));
            CHECK(cyclic_embed(a, m).rotated(b) == cyclic_embed(a + b, m));
        }
    }
}

TEST_CASE("cyclic unit inverse of signed monomials")
{
    auto u = RingTraits<CyclicLaurent>::unit_inverse(-cyclic_embed(3, 8));
    REQUIRE(u);
    CHECK(*u * -cyclic_embed(3, 8) == cyclic_embed(0, 8));
    CHECK_FALSE(RingTraits<CyclicLaurent>::unit_inverse(CyclicLaurent(4, {1, 1, 0, 0})));
    CHECK_FALSE(RingTraits<Integer>::unit_inverse(Integer(2)));
    CHECK(*RingTraits<Integer>::unit_inverse(Integer(-1)) == -1);
}
