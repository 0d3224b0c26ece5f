#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "ratdist/three_distance.hpp"

using namespace ratdist;

namespace {

BigRational q(long n, long d = 1) {
    BigRational v(n, d);
    v.canonicalize();
    return v;
}

struct Fibre {
    MatrixEta eta;
    std::vector<WProjPoint> points;
};

// Nonsingular fibres with at least three small rational points.
std::vector<Fibre> fibres(std::size_t want) {
    std::mt19937_64 gen(404);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
    std::vector<Fibre> out;
    while (out.size() < want) {
        const BigRational a = q(num(gen), den(gen)), b = q(num(gen), den(gen)), c = q(num(gen), den(gen)),
                          d = q(num(gen), den(gen));
        if (a * d - b * c == 0) continue;
        const MatrixEta eta(a, b, c, d);
        if (classify_fiber(eta).kind != FiberClass::Kind::Nonsingular) continue;
        Fibre f{eta, {}};
        for (long x = -8; x <= 8; ++x)
            for (long z = 0; z <= 8; ++z) {
                if ((x == 0 && z == 0) || std::gcd(x, z) != 1) continue;
                const auto y = is_rational_square(norm_form(eta, x, z));
                if (!y) continue;
                f.points.emplace_back(x, *y, z);
                if (*y != 0) f.points.emplace_back(x, -*y, z);
            }
        if (f.points.size() >= 3) out.push_back(std::move(f));
    }
    return out;
}

bool distances_ok(const ThreeDistanceSolution& s) {
    const BigRational &x = s.x, &y = s.y;
    return s.d1 >= 0 && s.d2 >= 0 && s.d3 >= 0 && s.d1 * s.d1 == x * x + y * y &&
           s.d2 * s.d2 == x * x + (1 - y) * (1 - y) && s.d3 * s.d3 == (1 - x) * (1 - x) + (1 - y) * (1 - y) &&
           y * (1 - s.t * s.t) == 2 * s.t * x;
}

bool pythagorean(const BigRational& slope, const BigRational& hyp) {
    const auto root = is_rational_square(slope * slope + 1);
    return root && *root == abs(hyp);
}

std::size_t max_numerator_bits(const std::vector<ThreeDistanceSolution>& sols) {
    std::size_t best = 0;
    for (const auto& s : sols) best = std::max(best, mpz_sizeinbase(s.x.get_num_mpz_t(), 2));
    return best;
}

}  // namespace

TEST_CASE("quartic and Weierstrass maps on sampled fibres") {
    for (const auto& f : fibres(60)) {
        const WProjPoint base = f.points.front();
        INFO("eta=" << to_string(f.eta.matrix()) << " base=" << to_string(base));
        const QuarticWeierstrassMaps maps = build_quartic_maps(f.eta, base);
        const Matrix2& m = f.eta.matrix();
        CHECK(maps.curve() == WCurve(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d, f.eta.det() * f.eta.det()));
        CHECK(maps.forward(base).is_infinity());
        CHECK(maps.backward(ECPoint::infinity()) == base);
        for (const auto& p : f.points) {
            INFO("p=" << to_string(p));
            const ECPoint image = maps.forward(p);
            CHECK(on_curve(maps.curve(), image));
            CHECK(maps.backward(image) == p);
        }
        // multiples of a second point go back onto the fibre and round-trip
        const ECPoint g = maps.forward(f.points[1]);
        if (g.is_infinity()) continue;
        for (long k = -5; k <= 5; ++k) {
            INFO("k=" << k);
            const ECPoint kg = ec_scalar_mul(maps.curve(), k, g);
            const WProjPoint back = maps.backward(kg);
            CHECK(h_contains(f.eta, back));
            CHECK(maps.forward(back) == kg);
        }
    }
    CHECK(std::string(QuarticWeierstrassMaps::normalization).size() > 0);
    CHECK_THROWS_AS(build_quartic_maps(MatrixEta(3, 4, -4, 3), WProjPoint(0, 5, 1)), PreconditionError);
    CHECK_THROWS_AS(build_quartic_maps(MatrixEta(1, 5, 0, 3), WProjPoint(0, 2, 1)), PreconditionError);
    const QuarticWeierstrassMaps tri = build_quartic_maps(MatrixEta(1, 5, 0, 3), WProjPoint(0, 1, 1));
    CHECK_THROWS_AS(tri.backward(ECPoint(1, 1)), PreconditionError);
}

TEST_CASE("special branches of the inverse map on triangular fibres") {
    for (const auto& [r, s] : std::vector<std::pair<BigRational, BigRational>>{
             {q(3), q(1)}, {q(-2, 3), q(-1)}, {q(0), q(2)}, {q(0), q(-5, 3)}, {q(5), q(3)}, {q(15, 4), q(4)},
             {q(-7, 2), q(-1, 2)}, {q(1, 2), q(7, 5)}}) {
        const MatrixEta eta(1, r, 0, s);
        const QuarticWeierstrassMaps maps = build_quartic_maps(eta, WProjPoint(0, 1, 1));
        const std::vector<WProjPoint> known{WProjPoint(0, 1, 1), WProjPoint(0, -1, 1), WProjPoint(1, 1, 0),
                                            WProjPoint(1, -1, 0)};
        std::vector<ECPoint> images;
        for (const auto& p : known) {
            INFO("r=" << to_string(r) << " s=" << to_string(s) << " p=" << to_string(p));
            images.push_back(maps.forward(p));
            CHECK(maps.backward(images.back()) == p);
        }
        // sums and differences of the images reach the degenerate lines of the inverse
        for (const auto& a : images)
            for (const auto& b : images)
                for (long k = -4; k <= 4; ++k) {
                    const ECPoint target = ec_add(maps.curve(), a, ec_scalar_mul(maps.curve(), k, b));
                    INFO("r=" << to_string(r) << " s=" << to_string(s) << " target=" << to_string(target));
                    const WProjPoint back = maps.backward(target);
                    CHECK(maps.forward(back) == target);
                }
    }
}

TEST_CASE("the line family") {
    CHECK(eta_of_t(2) == MatrixEta(1, -1, 0, q(7, 3)));
    CHECK(eta_of_t(q(1, 2)) == MatrixEta(1, -1, 0, q(-1, 3)));
    CHECK_THROWS_AS(eta_of_t(1), PreconditionError);
    CHECK_THROWS_AS(eta_of_t(-1), PreconditionError);
    CHECK_THROWS_AS(eta_of_t(0), PreconditionError);
}

TEST_CASE("z-map") {
    CHECK(z_map(2, ProjPair(1, 0)) == std::pair<BigRational, BigRational>{0, 0});
    CHECK(z_map(2, ProjPair(0, 1)) == std::pair<BigRational, BigRational>{q(-3, 4), 1});
    for (const auto& t : {q(2), q(1, 2), q(3), q(-5, 7)})
        CHECK_FALSE(z_map(t, ProjPair(-2 * t, 1 - t * t)));
}

TEST_CASE("three distances") {
    const auto axis = three_distances(0, q(1, 4));
    REQUIRE(axis);
    CHECK((*axis)[0] == q(1, 4));
    CHECK((*axis)[1] == q(3, 4));
    CHECK((*axis)[2] == q(5, 4));
    CHECK_FALSE(three_distances(q(1, 3), q(1, 3)));
}

TEST_CASE("rho examples") {
    CHECK_FALSE(rho(0, 2));
    const auto first = rho(1, 2);
    REQUIRE(first);
    CHECK(first->y == q(-4, 3) * first->x);
    CHECK(distances_ok(*first));
    CHECK(three_distances(first->x, first->y));

    const ThreeDistanceGenerator gen(2);
    long defined = 0;
    std::set<std::pair<BigRational, BigRational>> seen;
    for (long n = 1; n <= 10; ++n) {
        const auto s = gen.solution(n);
        if (!s) continue;
        ++defined;
        seen.insert({s->x, s->y});
        CHECK(distances_ok(*s));
        CHECK_FALSE(is_degenerate(gen.maps().eta(), gen.maps().backward(ec_scalar_mul(
                                                             gen.maps().curve(), n,
                                                             gen.maps().from_triangular(ECPoint(-1, -1))))));
    }
    CHECK(defined >= 9);
    CHECK(seen.size() == static_cast<std::size_t>(defined));
}

TEST_CASE("scans stay exact and grow in height") {
    for (const auto& t : {q(2), q(1, 2), q(3)}) {
        const ThreeDistanceGenerator gen(t);
        const auto s5 = gen.scan(5), s10 = gen.scan(10), s20 = gen.scan(20);
        for (const auto& s : s20) CHECK(distances_ok(s));
        CHECK(s20.size() >= 17);
        CHECK(max_numerator_bits(s5) < max_numerator_bits(s10));
        CHECK(max_numerator_bits(s10) < max_numerator_bits(s20));
    }
}

TEST_CASE("generator points have infinite order") {
    for (const auto& t : {q(2), q(3), q(5), q(1, 2)}) {
        const BigRational m = (1 - t * t) / (2 * t);
        const WCurve curve(m * m + 2, 1);
        const ECPoint p(t, (t + 1) * (t + 1) / 2);
        REQUIRE(on_curve(curve, p));
        CHECK_FALSE(torsion_order(curve, p));
    }
}

TEST_CASE("sum decompositions") {
    for (const auto& target : {q(3, 4), q(-5, 12), q(8, 15), q(0)}) {
        const auto tuples = sum_decompose(target, 4);
        CHECK(tuples.size() == 4);
        std::set<std::vector<BigRational>> distinct;
        for (const auto& tuple : tuples) {
            REQUIRE(tuple.slopes.size() == 2);
            distinct.insert(tuple.slopes);
            CHECK(tuple.slopes[0] + tuple.slopes[1] == target);
            for (std::size_t i = 0; i < 2; ++i) CHECK(pythagorean(tuple.slopes[i], tuple.hyps[i]));
        }
        CHECK(distinct.size() == 4);
    }
}

TEST_CASE("three-term sums") {
    for (const auto& t : {q(7), q(5), q(-3, 2)}) {
        const auto tuples = three_sum(t, 3);
        CHECK(tuples.size() == 3);
        for (const auto& tuple : tuples) {
            REQUIRE(tuple.slopes.size() == 3);
            CHECK(tuple.slopes[1] == tuple.slopes[2]);
            CHECK(tuple.slopes[0] + 2 * tuple.slopes[1] == t);
            for (std::size_t i = 0; i < 3; ++i) CHECK(pythagorean(tuple.slopes[i], tuple.hyps[i]));
        }
    }
    CHECK_THROWS_AS(three_sum(0, 3), PreconditionError);
}

TEST_CASE("three-term products") {
    const ProductSeed seed2 = three_product_seed(2);
    CHECK(seed2.u == 6);
    CHECK(seed2.s == q(24, 35));
    CHECK(on_curve(WCurve(1 + seed2.s * seed2.s, seed2.s * seed2.s), seed2.point));

    const ProductSeed seed1 = three_product_seed(1);
    CHECK(seed1.u == q(5, 6));
    CHECK(seed1.point == ECPoint(q(-12, 11), q(204, 121)));
    CHECK((1 - seed1.u * seed1.u) / (2 * seed1.u) == q(11, 60));

    for (const auto& t : {q(1), q(2), q(-1), q(3, 5)}) {
        const auto tuples = three_product(t, 3);
        CHECK(tuples.size() == 3);
        for (const auto& tuple : tuples) {
            REQUIRE(tuple.slopes.size() == 3);
            CHECK(tuple.slopes[0] * tuple.slopes[1] * tuple.slopes[2] == t);
            for (std::size_t i = 0; i < 3; ++i) CHECK(pythagorean(tuple.slopes[i], tuple.hyps[i]));
        }
    }
    for (const auto& tuple : three_product(1, 3)) CHECK(tuple.slopes[2] == q(11, 60));
    CHECK_THROWS_AS(three_product(0, 3), PreconditionError);
}
