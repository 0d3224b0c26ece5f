#include "ratdist/three_distance.hpp"

#include <set>

namespace ratdist {

namespace {

MatrixEta require_nonsingular(MatrixEta eta) {
    if (classify_fiber(eta).kind != FiberClass::Kind::Nonsingular) {
        throw PreconditionError("quartic maps need a nonsingular fibre");
    }
    return eta;
}

WCurve jacobian_model(const MatrixEta& eta) {
    const auto& [a, b, c, d] = eta.matrix();
    const BigRational det = eta.det();
    return WCurve(a * a + b * b + c * c + d * d, det * det);
}

std::optional<BigRational> hyp_of_affine(const BigRational& alpha) {
    return is_rational_square(alpha * alpha + 1);
}

SlopeTuple make_tuple(std::vector<BigRational> slopes) {
    SlopeTuple out;
    for (const auto& s : slopes) {
        auto h = hyp_of_affine(s);
        if (!h) throw PreconditionError("slope " + to_string(s) + " is not Pythagorean");
        out.hyps.push_back(*h);
    }
    out.slopes = std::move(slopes);
    return out;
}

// Walks the multiples G, 2G, ... of a non-torsion point, pulls each back to
// H_eta and keeps the affine slope pairs until `count` distinct tuples exist.
template <typename MakeTuple>
std::vector<SlopeTuple> collect_from_multiples(const QuarticWeierstrassMaps& maps, const ECPoint& generator,
                                               int count, MakeTuple make) {
    if (count <= 0) throw PreconditionError("count must be positive");
    std::set<SlopeTuple> seen;
    std::vector<SlopeTuple> out;
    const long max_multiple = 8L * count + 32;
    ECPoint q = generator;
    for (long n = 1; n <= max_multiple && static_cast<int>(out.size()) < count; ++n) {
        if (!q.is_infinity()) {
            const WProjPoint p = maps.backward(q);
            const auto [alpha1, alpha2] = phi(maps.eta(), p);
            auto a1 = alpha1.affine();
            auto a2 = alpha2.affine();
            if (a1 && a2) {
                SlopeTuple tuple = make(*a1, *a2);
                if (seen.insert(tuple).second) out.push_back(std::move(tuple));
            }
        }
        q = ec_add(maps.curve(), q, generator);
    }
    if (static_cast<int>(out.size()) < count) throw PreconditionError("generator produced too few tuples");
    return out;
}

}  // namespace

QuarticWeierstrassMaps::QuarticWeierstrassMaps(MatrixEta eta, WProjPoint base_point)
    : eta_(require_nonsingular(std::move(eta))),
      base_(std::move(base_point)),
      witness_(reduce_to_triangular(eta_, base_)),
      to_triangular_(eta_, witness_.triangular(), coset_from_witness(witness_)),
      curve_(jacobian_model(eta_)),
      triangular_curve_(e_rs(witness_.r, witness_.s)) {
    if (to_triangular_.apply(base_) != WProjPoint(0, 1, 1)) {
        throw PreconditionError("base point did not reduce to (0:1:1)");
    }
}

ECPoint QuarticWeierstrassMaps::forward_triangular(const WProjPoint& p) const {
    const BigRational& r = witness_.r;
    const BigRational& s = witness_.s;
    const BigRational s2 = s * s;
    if (sgn(p.x()) == 0) {
        // (0:+-1:1)
        if (sgn(p.y()) > 0) return ECPoint::infinity();
        return {-s2, r * s2};
    }
    const BigRational x(p.x()), z(p.z());
    const BigRational& y = p.y();
    const BigRational x2 = x * x;
    const BigRational big_x = (2 * (y + z * z) + 4 * r * x * z) / x2;
    const BigRational big_y = z * (4 * (y + z * z) + 8 * r * x * z + (8 * s2 - 4) * x2) / (x2 * x);
    return {(big_x - 2) / 4, (big_y + 2 * r * big_x - 4 * r) / 8};
}

WProjPoint QuarticWeierstrassMaps::backward_triangular(const ECPoint& q) const {
    if (q.is_infinity()) return WProjPoint(0, 1, 1);
    const BigRational& r = witness_.r;
    const BigRational& s = witness_.s;
    const BigRational big_x = 4 * q.x() + 2;
    const BigRational big_y = 8 * q.y() - 2 * r * big_x + 4 * r;
    if (sgn(big_y) == 0) {
        // the two points at infinity of the quartic go to X = +-2
        if (big_x == 2 || big_x == -2) return WProjPoint(1, big_x / 2, 0);
        // the third point of the line Y = 0 has X = 2 - 4s^2
        const BigRational x = -2 * r / (s * s - 1);
        return WProjPoint(x, -1 - 2 * r * x - (2 * s * s - 1) * x * x, 1);
    }
    const BigRational n = 2 * big_x + 8 * s * s - 4;
    return WProjPoint(n, -big_y * big_y + n * (n * big_x - 4 * r * big_y) / 2, big_y);
}

ECPoint QuarticWeierstrassMaps::from_triangular(const ECPoint& q) const {
    if (q.is_infinity()) return q;
    const BigRational& k = witness_.scale;
    return {q.x() / (k * k), q.y() / (k * k * k)};
}

ECPoint QuarticWeierstrassMaps::forward(const WProjPoint& p) const {
    if (!h_contains(eta_, p)) throw PreconditionError("point " + to_string(p) + " is not on H_eta");
    ECPoint image = from_triangular(forward_triangular(to_triangular_.apply(p)));
    if (!on_curve(curve_, image)) throw PreconditionError("forward image left the Jacobian model");
    return image;
}

WProjPoint QuarticWeierstrassMaps::backward(const ECPoint& q) const {
    if (!on_curve(curve_, q)) throw PreconditionError("point " + to_string(q) + " is not on the Jacobian");
    const BigRational& k = witness_.scale;
    ECPoint tri = q.is_infinity() ? q : ECPoint(q.x() * k * k, q.y() * k * k * k);
    WProjPoint p = to_triangular_.invert(backward_triangular(tri));
    if (!h_contains(eta_, p)) throw PreconditionError("backward image left H_eta");
    return p;
}

QuarticWeierstrassMaps build_quartic_maps(const MatrixEta& eta, const WProjPoint& base_point) {
    return QuarticWeierstrassMaps(eta, base_point);
}

MatrixEta eta_of_t(const BigRational& t) {
    if (sgn(t) == 0 || t == 1 || t == -1) throw PreconditionError("t must avoid {0, 1, -1}");
    return MatrixEta(1, -1, 0, 1 - 2 * t / (1 - t * t));
}

std::optional<std::pair<BigRational, BigRational>> z_map(const BigRational& t, const ProjPair& alpha1) {
    if (sgn(t) == 0 || t == 1 || t == -1) throw PreconditionError("t must avoid {0, 1, -1}");
    const BigRational u1(alpha1.u()), v1(alpha1.v());
    const BigRational one_minus = 1 - t * t;
    const BigRational denom = one_minus * u1 + 2 * t * v1;
    if (sgn(denom) == 0) return std::nullopt;
    return std::pair{BigRational(one_minus * v1 / denom), BigRational(2 * t * v1 / denom)};
}

std::optional<std::array<BigRational, 3>> three_distances(const BigRational& x, const BigRational& y) {
    auto d1 = is_rational_square(x * x + y * y);
    auto d2 = is_rational_square(x * x + (1 - y) * (1 - y));
    auto d3 = is_rational_square((1 - x) * (1 - x) + (1 - y) * (1 - y));
    if (!d1 || !d2 || !d3) return std::nullopt;
    return std::array<BigRational, 3>{*d1, *d2, *d3};
}

ThreeDistanceGenerator::ThreeDistanceGenerator(BigRational t)
    : t_(std::move(t)), eta_(eta_of_t(t_)), maps_(eta_, WProjPoint(0, 1, 1)) {}

std::optional<ThreeDistanceSolution> ThreeDistanceGenerator::from_jacobian_point(const ECPoint& q,
                                                                                 long n) const {
    if (q.is_infinity()) return std::nullopt;
    const WProjPoint p = maps_.backward(q);
    const auto [alpha1, alpha2] = phi(eta_, p);
    const auto& s1 = alpha1.slope;
    const auto& s2 = alpha2.slope;
    if (sgn(s1.u()) == 0 || sgn(s1.v()) == 0 || sgn(s2.u()) == 0 || sgn(s2.v()) == 0) return std::nullopt;
    auto point = z_map(t_, s1);
    if (!point) return std::nullopt;
    auto dist = three_distances(point->first, point->second);
    if (!dist) throw PreconditionError("pipeline produced a point without rational distances");
    return ThreeDistanceSolution{point->first, point->second, (*dist)[0], (*dist)[1], (*dist)[2], t_, n};
}

std::optional<ThreeDistanceSolution> ThreeDistanceGenerator::solution(long n) const {
    if (n == 0) return std::nullopt;
    const ECPoint seed(-1, -1);
    return from_jacobian_point(ec_scalar_mul(maps_.curve(), n, seed), n);
}

std::vector<ThreeDistanceSolution> ThreeDistanceGenerator::scan(long n_max) const {
    std::vector<ThreeDistanceSolution> out;
    std::set<std::pair<BigRational, BigRational>> seen;
    const ECPoint seed(-1, -1);
    ECPoint q;
    for (long n = 1; n <= n_max; ++n) {
        q = ec_add(maps_.curve(), q, seed);
        auto sol = from_jacobian_point(q, n);
        if (sol && seen.emplace(sol->x, sol->y).second) out.push_back(std::move(*sol));
    }
    return out;
}

std::optional<ThreeDistanceSolution> rho(long n, const BigRational& t) {
    return ThreeDistanceGenerator(t).solution(n);
}

std::vector<SlopeTuple> sum_decompose(const BigRational& alpha3, int count) {
    if (count <= 0) throw PreconditionError("count must be positive");
    if (!hyp_of_affine(alpha3)) throw PreconditionError(to_string(alpha3) + " is not a Pythagorean slope");
    if (sgn(alpha3) == 0) {
        // closed under negation: (alpha, -alpha)
        std::vector<SlopeTuple> out;
        for (int k = 2; static_cast<int>(out.size()) < count; ++k) {
            const BigRational alpha = *slope_from_parameter(BigRational(k)).affine();
            out.push_back(make_tuple({alpha, -alpha}));
        }
        return out;
    }
    // alpha3 = (1-t^2)/(2t); both parameters are affine and avoid {0, +-1}
    const ProjPair param = parameters_from_slope(ProjPair(alpha3, 1)).front();
    const BigRational t(param.u(), param.v());
    const MatrixEta eta(0, 1, 1, -alpha3);
    const QuarticWeierstrassMaps maps(eta, WProjPoint(0, 1, 1));
    const ECPoint generator(t, (t + 1) * (t + 1) / 2);
    if (!on_curve(maps.curve(), generator)) throw PreconditionError("sum generator is off the Jacobian");
    return collect_from_multiples(maps, generator, count, [](const BigRational& a1, const BigRational& a2) {
        return make_tuple({a1, a2});
    });
}

std::vector<SlopeTuple> three_sum(const BigRational& t, int count) {
    if (sgn(t) == 0) throw PreconditionError("three_sum needs t != 0; use sum_decompose(0)");
    const MatrixEta eta(0, 1, 2, -t);
    const QuarticWeierstrassMaps maps(eta, WProjPoint(0, 2, 1));
    const auto& w = maps.witness();
    if (classify_minus1_point(w.r, w.s) != TorsionVerdict::NonTorsion) {
        throw PreconditionError("(-1, r) is torsion on the reduced curve");
    }
    const ECPoint generator = maps.from_triangular(ECPoint(-1, w.r));
    return collect_from_multiples(maps, generator, count, [](const BigRational& a1, const BigRational& a2) {
        return make_tuple({a1, a2, a2});
    });
}

ProductSeed three_product_seed(const BigRational& t) {
    if (sgn(t) == 0) throw PreconditionError("three_product needs t != 0");
    ProductSeed seed;
    const BigRational t2 = t * t;
    if (t2 == 1) {
        seed.u = BigRational(5, 6);
        seed.point = ECPoint(BigRational(-12, 11), BigRational(204, 121));
    } else {
        seed.u = t2 + 2;
        const BigRational d = t2 + 3;
        seed.point = ECPoint(t2 * (t2 + 1) * (t2 + 1) * (t2 + 2) / (d * d),
                             t2 * (t2 + 2) * (t2 * t2 * t2 * t2 + 4 * t2 * t2 * t2 + 6 * t2 * t2 + 8 * t2 + 9) /
                                 (d * d * d));
    }
    seed.s = -t * 2 * seed.u / (1 - seed.u * seed.u);
    return seed;
}

std::vector<SlopeTuple> three_product(const BigRational& t, int count) {
    const ProductSeed seed = three_product_seed(t);
    const MatrixEta eta(1, 0, 0, seed.s);
    const QuarticWeierstrassMaps maps(eta, WProjPoint(0, 1, 1));
    if (!on_curve(maps.curve(), seed.point)) throw PreconditionError("product seed is off the curve");
    const BigRational multiplier = (1 - seed.u * seed.u) / (2 * seed.u);
    return collect_from_multiples(maps, seed.point, count,
                                  [&](const BigRational& a1, const BigRational& a2) {
                                      return make_tuple({a1, a2, multiplier});
                                  });
}

}  // namespace ratdist
