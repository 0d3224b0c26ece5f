#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "ratdist/configmap.hpp"

using namespace ratdist;

namespace {

BigRational q(long n, long d = 1) {
    BigRational v(n, d);
    v.canonicalize();
    return v;
}

bool in_orbit(const WProjPoint& lifted, const WProjPoint& p) {
    const auto orbit = gamma_orbit(p);
    return std::find(orbit.begin(), orbit.end(), lifted) != orbit.end();
}

}  // namespace

TEST_CASE("phi on the triangular base point") {
    const MatrixEta eta(1, q(5, 2), 0, q(-3, 7));
    const auto [a1, a2] = phi(eta, WProjPoint(0, 1, 1));
    CHECK(a1.slope == ProjPair(0, 1));
    CHECK(a2.slope == ProjPair(1, 0));
    CHECK(a1.is_pythagorean());
    CHECK(a2.is_pythagorean());
    CHECK(in_orbit(phi_lift(eta, a1, a2), WProjPoint(0, 1, 1)));
    CHECK_THROWS_AS(phi(eta, WProjPoint(0, 3, 1)), PreconditionError);
}

TEST_CASE("lifting a solved sum configuration") {
    const MatrixEta eta(0, 1, 1, q(-3, 4));
    const SlopePair a2 = slope_from_parameter(q(1, 2));  // 3/4
    const SlopePair a1 = make_slope(ProjPair(0, 1));      // 3/4 - 3/4
    REQUIRE(f_contains(eta, a1.slope, a2.slope));
    const WProjPoint p = phi_lift(eta, a1, a2);
    CHECK(h_contains(eta, p));
    CHECK(p.y() > 0);
    CHECK(phi(eta, p) == std::pair{a1, a2});
    CHECK_THROWS_AS(phi_lift(eta, make_slope(ProjPair(1, 1)), a2), PreconditionError);
    CHECK_THROWS_AS(phi_lift(eta, make_slope(ProjPair(1, 2)), a2), PreconditionError);
}

TEST_CASE("phi is Gamma-invariant, lands on F_eta and lifts back into the orbit") {
    std::mt19937_64 gen(31);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    long points = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const BigRational a = q(num(gen), den(gen)), b = q(num(gen), den(gen)), c = q(num(gen), den(gen)),
                          d = q(num(gen), den(gen));
        if (a * d - b * c == 0) continue;
        const MatrixEta eta(a, b, c, d);
        std::set<std::vector<WProjPoint>> orbits;
        std::set<std::pair<SlopePair, SlopePair>> images;
        for (long x = -7; x <= 7; ++x)
            for (long z = 0; z <= 7; ++z) {
                if ((x == 0 && z == 0) || std::gcd(x, z) != 1) continue;
                const auto y = is_rational_square(norm_form(eta, x, z));
                if (!y || *y == 0) continue;
                const WProjPoint p(x, *y, z);
                ++points;
                const auto image = phi(eta, p);
                CHECK(image.first.is_pythagorean());
                CHECK(image.second.is_pythagorean());
                CHECK(f_contains(eta, image.first.slope, image.second.slope));
                for (const auto& member : gamma_orbit(p)) CHECK(phi(eta, member) == image);
                CHECK(in_orbit(phi_lift(eta, image.first, image.second), p));
                const BigInt prod = image.first.slope.u() * image.first.slope.v() * image.second.slope.u() *
                                    image.second.slope.v();
                CHECK(is_degenerate(eta, p) == (prod == 0));
                orbits.insert(gamma_orbit(p));
                images.insert(image);
            }
        CHECK(orbits.size() == images.size());
    }
    CHECK(points > 50);
}
