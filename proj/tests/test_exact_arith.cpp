#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratdist/exact_arith.hpp"

using namespace ratdist;

namespace {

BigRational q(long n, long d = 1) {
    BigRational v(n, d);
    v.canonicalize();
    return v;
}

int naive_legendre(long a, long p) {
    const long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    for (long y = 1; y < p; ++y)
        if (y * y % p == r) return 1;
    return -1;
}

}  // namespace

TEST_CASE("rational squares") {
    CHECK(is_rational_square(q(25, 16)) == q(5, 4));
    CHECK_FALSE(is_rational_square(2));
    CHECK(is_rational_square(q(41616, 14641)) == q(204, 121));
    CHECK_FALSE(is_rational_square(-4));
    CHECK(is_rational_square(0) == BigRational(0));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    for (int i = 0; i < 500; ++i) {
        const BigRational x = q(num(rng), den(rng));
        CHECK(is_rational_square(x * x) == abs(x));
        if (x > 0 && !is_rational_square(x)) {
            const auto n = exact_isqrt(x.get_num()), d = exact_isqrt(x.get_den());
            CHECK_FALSE((n && d));
        }
    }
}

TEST_CASE("legendre symbol") {
    CHECK(legendre_symbol(2, 3) == -1);
    CHECK(legendre_symbol(4, 5) == 1);
    CHECK(legendre_symbol(3, 3) == 0);
    CHECK_THROWS_AS(legendre_symbol(1, 2), PreconditionError);
    CHECK_THROWS_AS(legendre_symbol(1, 9), PreconditionError);
    for (long p : {3L, 5L, 7L, 11L, 13L, 31L, 97L}) {
        for (long a = -40; a <= 40; ++a) CHECK(legendre_symbol(a, p) == naive_legendre(a, p));
        for (long a = 1; a < p; ++a)
            for (long b = 1; b < p; ++b)
                CHECK(legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p));
    }
    BigInt huge("123456789012345678901234567890");
    CHECK(legendre_symbol(huge, 101) == naive_legendre(mpz_class(huge % 101).get_si(), 101));
}

TEST_CASE("primes and valuations") {
    CHECK(primes_up_to(30) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(valuation(48, 2) == 4);
    CHECK(valuation(-75, 5) == 2);
    CHECK(valuation(7, 3) == 0);
}

TEST_CASE("projective pairs are canonical") {
    CHECK(ProjPair(q(3, 4), 1) == ProjPair(3, 4));
    CHECK(ProjPair(-3, -4) == ProjPair(3, 4));
    CHECK(ProjPair(5, 0) == ProjPair(1, 0));
    CHECK(ProjPair(-5, 0).u() == 1);
    CHECK(ProjPair(6, -4).v() == 2);
    CHECK(ProjPair(6, -4).u() == -3);
    CHECK_THROWS_AS(ProjPair(0, 0), PreconditionError);
}

TEST_CASE("slopes from parameters") {
    CHECK(slope_from_parameter(q(1, 2)).slope == ProjPair(3, 4));
    CHECK(slope_from_parameter(q(1, 2)).hyp == BigInt(5));
    CHECK(slope_from_parameter(0).slope == ProjPair(1, 0));
    CHECK(slope_from_parameter(2).slope == ProjPair(-3, 4));

    CHECK(parameters_from_slope(ProjPair(3, 4)) == std::vector<ProjPair>{ProjPair(-2, 1), ProjPair(1, 2)});
    CHECK(parameters_from_slope(ProjPair(1, 1)).empty());
    CHECK(parameters_from_slope(ProjPair(1, 0)) == std::vector<ProjPair>{ProjPair(0, 1), ProjPair(1, 0)});

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 500);
    for (int i = 0; i < 300; ++i) {
        const BigRational t = q(num(rng), den(rng));
        const SlopePair s = slope_from_parameter(t);
        REQUIRE(s.hyp);
        const BigInt u = s.slope.u(), v = s.slope.v();
        CHECK(u * u + v * v == *s.hyp * *s.hyp);
        // (1-t^2 : 2t) as a projective pair, against the defining formula
        CHECK(s.slope == ProjPair(1 - t * t, 2 * t));
        const auto params = parameters_from_slope(s.slope);
        const ProjPair forward(t, 1), swapped(-1, t);
        const bool found = std::find(params.begin(), params.end(), forward) != params.end() ||
                           std::find(params.begin(), params.end(), swapped) != params.end();
        CHECK(found);
    }
}

TEST_CASE("slope membership") {
    CHECK(make_slope(ProjPair(3, 4)).is_pythagorean());
    CHECK_FALSE(make_slope(ProjPair(1, 1)).is_pythagorean());
    CHECK(make_slope(ProjPair(3, 4)).affine() == q(3, 4));
    CHECK_FALSE(make_slope(ProjPair(1, 0)).affine());
}

TEST_CASE("rational text round trip") {
    CHECK(parse_rational("-7/2") == q(-7, 2));
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational("12") == 12);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        const BigRational x = q(num(rng), den(rng));
        CHECK(parse_rational(to_string(x)) == x);
    }
    CHECK(to_string(q(4, 2)) == "2");
}
