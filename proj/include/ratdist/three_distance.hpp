#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "ratdist/configmap.hpp"
#include "ratdist/elliptic.hpp"
#include "ratdist/reduction.hpp"

namespace ratdist {

/// Birational maps between a soluble nonsingular fibre H_eta and its
/// Jacobian y^2 = x^3 + (a^2+b^2+c^2+d^2) x^2 + (ad-bc)^2 x, anchored so that
/// the base point goes to the point at infinity.
///
/// Construction: reduce eta to (1, r; 0, s) with the base point, which the
/// coset isomorphism sends to (0:1:1). On the triangular fibre the quartic
/// v^2 = u^4 - 4r u^3 + (4r^2+4s^2-2) u^2 + 4r u + 1 has the rational point
/// (0, 1); the classical anchored quartic-to-Weierstrass substitution followed
/// by X = 4x + 2, Y = 8y - 2rX + 4r lands exactly on E_{r,s}, and
/// (x, y) -> (x / scale^2, y / scale^3) carries E_{r,s} onto the Jacobian
/// model of eta.
class QuarticWeierstrassMaps {
public:
    static constexpr std::string_view normalization =
        "triangular-reduction+anchored-quartic(0:1:1)->O";

    /// Throws PreconditionError for singular fibres or off-curve base points.
    QuarticWeierstrassMaps(MatrixEta eta, WProjPoint base_point);

    const MatrixEta& eta() const { return eta_; }
    const WProjPoint& base_point() const { return base_; }
    const WCurve& curve() const { return curve_; }
    const ReductionWitness& witness() const { return witness_; }

    /// H_eta -> Jacobian. Throws PreconditionError off-curve.
    ECPoint forward(const WProjPoint& p) const;
    /// Jacobian -> H_eta. Throws PreconditionError off-curve.
    WProjPoint backward(const ECPoint& q) const;

    /// Carries a point of E_{r,s} (from the witness) onto curve().
    ECPoint from_triangular(const ECPoint& q) const;

private:
    ECPoint forward_triangular(const WProjPoint& p) const;
    WProjPoint backward_triangular(const ECPoint& q) const;

    MatrixEta eta_;
    WProjPoint base_;
    ReductionWitness witness_;
    CosetIsomorphism to_triangular_;
    WCurve curve_;
    WCurve triangular_curve_;
};

QuarticWeierstrassMaps build_quartic_maps(const MatrixEta& eta, const WProjPoint& base_point);

/// (1, -1; 0, 1 - 2t/(1-t^2)); rejects t in {0, 1, -1}.
MatrixEta eta_of_t(const BigRational& t);

struct ThreeDistanceSolution {
    BigRational x, y;
    BigRational d1, d2, d3;  // to (0,0), (0,1), (1,1)
    BigRational t;
    long n;
};

/// ((1-t^2) v1 / D, 2t v1 / D) with D = (1-t^2) u1 + 2t v1; nullopt iff D = 0.
std::optional<std::pair<BigRational, BigRational>> z_map(const BigRational& t, const ProjPair& alpha1);

/// Exact distances from (x, y) to (0,0), (0,1), (1,1) when all are rational.
std::optional<std::array<BigRational, 3>> three_distances(const BigRational& x, const BigRational& y);

/// The rho_n family on the line y = 2t/(1-t^2) x for one fixed t.
class ThreeDistanceGenerator {
public:
    explicit ThreeDistanceGenerator(BigRational t);

    const BigRational& t() const { return t_; }
    const QuarticWeierstrassMaps& maps() const { return maps_; }

    /// nullopt when the pipeline is undefined at n (zero section, excluded
    /// point of the z-map, or a degenerate configuration).
    std::optional<ThreeDistanceSolution> solution(long n) const;

    /// Defined solutions for n = 1..n_max, deduplicated by exact point equality.
    std::vector<ThreeDistanceSolution> scan(long n_max) const;

private:
    std::optional<ThreeDistanceSolution> from_jacobian_point(const ECPoint& q, long n) const;

    BigRational t_;
    MatrixEta eta_;
    QuarticWeierstrassMaps maps_;
};

std::optional<ThreeDistanceSolution> rho(long n, const BigRational& t);

/// A tuple of affine Pythagorean slopes with their witnesses sqrt(alpha^2+1).
struct SlopeTuple {
    std::vector<BigRational> slopes;
    std::vector<BigRational> hyps;

    friend bool operator<(const SlopeTuple& l, const SlopeTuple& r) { return l.slopes < r.slopes; }
    friend bool operator==(const SlopeTuple& l, const SlopeTuple& r) { return l.slopes == r.slopes; }
};

/// count distinct pairs (a1, a2) of affine Pythagorean slopes with a1 + a2 = alpha3.
std::vector<SlopeTuple> sum_decompose(const BigRational& alpha3, int count);

/// count distinct triples (a1, a2, a2) with a1 + 2 a2 = t; t != 0.
std::vector<SlopeTuple> three_sum(const BigRational& t, int count);

/// count distinct triples (a1, a2, m) with a1 a2 m = t; t != 0.
std::vector<SlopeTuple> three_product(const BigRational& t, int count);

/// Seed point used by three_product on y^2 = x^3 + (1+s^2) x^2 + s^2 x.
struct ProductSeed {
    BigRational u;  // the auxiliary parameter; the multiplier is (1-u^2)/(2u)
    BigRational s;
    ECPoint point;
};
ProductSeed three_product_seed(const BigRational& t);

}  // namespace ratdist
