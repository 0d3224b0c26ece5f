#pragma once

#include "ratdist/curve_family.hpp"

namespace ratdist {

/// Certificate that eta lies in the double coset of the triangular matrix
/// (1, r; 0, s): scale * r1 * eta * r2 == (1, r; 0, s) exactly, with r1, r2
/// special orthogonal.
struct ReductionWitness {
    BigRational r;
    BigRational s;
    Matrix2 r1;
    Matrix2 r2;
    BigRational scale;

    MatrixEta triangular() const { return MatrixEta(1, r, 0, s); }
};

/// Reduces H_eta to triangular form using a rational point p on it.
ReductionWitness reduce_to_triangular(const MatrixEta& eta, const WProjPoint& p);

/// Rational half-angle parameters of an orthogonal matrix
/// R = (u, -v; eps v, eps u) with u = (t^2-s^2)/(t^2+s^2), v = 2st/(t^2+s^2).
/// (s, t) are coprime integers with t >= 0, normalised from s/t = v/(1+u).
struct OrthogonalParams {
    BigInt s;
    BigInt t;
    int eps;
};

OrthogonalParams so2_parameter(const Matrix2& rot);

/// Double-coset data eta' = lambda * r1 * eta * r2^{-1}.
struct CosetData {
    BigRational lambda;
    Matrix2 r1;
    Matrix2 r2;
};

/// Coset data that carries eta onto witness.triangular().
CosetData coset_from_witness(const ReductionWitness& w);

/// The Gamma-equivariant isomorphism H_eta -> H_eta' induced by coset data,
/// (x:y:z) -> (eps(tx+sz) : lambda(s^2+t^2) y : tz - sx).
class CosetIsomorphism {
public:
    /// Throws PreconditionError if eta' != lambda r1 eta r2^{-1} or r1, r2 are
    /// not orthogonal.
    CosetIsomorphism(MatrixEta source, MatrixEta target, CosetData coset);

    const MatrixEta& source() const { return source_; }
    const MatrixEta& target() const { return target_; }

    WProjPoint apply(const WProjPoint& p) const;
    WProjPoint invert(const WProjPoint& q) const;

private:
    MatrixEta source_;
    MatrixEta target_;
    BigRational lambda_;
    OrthogonalParams params_;
};

/// Checked single-point transport; throws if p is not on H_eta.
WProjPoint transport_point(const MatrixEta& eta, const MatrixEta& eta_prime, const CosetData& coset,
                           const WProjPoint& p);

}  // namespace ratdist
