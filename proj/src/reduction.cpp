#include "ratdist/reduction.hpp"

namespace ratdist {

ReductionWitness reduce_to_triangular(const MatrixEta& eta, const WProjPoint& p) {
    if (!h_contains(eta, p)) throw PreconditionError("point " + to_string(p) + " is not on H_eta");
    const auto& [a, b, c, d] = eta.matrix();
    const BigRational x0(p.x()), z0(p.z());
    const BigRational& y0 = p.y();
    const BigRational norm = z0 * z0 + x0 * x0;
    // Both are impossible over Q for an on-curve point of an invertible eta.
    if (sgn(norm) == 0) throw PreconditionError("x0^2 + z0^2 = 0 on a rational point");
    if (sgn(y0) == 0) throw PreconditionError("y0 = 0 on a rational point of an invertible fiber");

    const BigRational u = z0 * z0 - x0 * x0;
    const BigRational v = 2 * x0 * z0;
    const BigRational y2 = y0 * y0;

    ReductionWitness w;
    w.r = ((a * b + c * d) * (u * u - v * v) - (a * a - b * b + c * c - d * d) * u * v) / y2;
    w.s = eta.det() * norm * norm / y2;

    const BigRational first = a * u + b * v;
    const BigRational second = c * u + d * v;
    w.r1 = Matrix2{first / y0, second / y0, -second / y0, first / y0};
    w.r2 = Matrix2{u / norm, -v / norm, v / norm, u / norm};
    w.scale = norm / y0;

    if (!(w.scale * (w.r1 * eta.matrix() * w.r2) == w.triangular().matrix())) {
        throw PreconditionError("reduction identity failed");  // unreachable for on-curve input
    }
    return w;
}

OrthogonalParams so2_parameter(const Matrix2& rot) {
    if (!rot.is_orthogonal()) throw PreconditionError("matrix is not orthogonal");
    const int eps = sgn(rot.det());
    const BigRational& u = rot.a;
    const BigRational v = -rot.b;
    if (u == -1) return {1, 0, eps};
    // s/t = v / (1 + u)
    const BigRational w = v / (1 + u);
    return {w.get_num(), w.get_den(), eps};
}

CosetData coset_from_witness(const ReductionWitness& w) {
    return {w.scale, w.r1, w.r2.transpose()};
}

CosetIsomorphism::CosetIsomorphism(MatrixEta source, MatrixEta target, CosetData coset)
    : source_(std::move(source)), target_(std::move(target)), lambda_(std::move(coset.lambda)) {
    if (sgn(lambda_) == 0) throw PreconditionError("coset scalar must be nonzero");
    if (!coset.r1.is_orthogonal() || !coset.r2.is_orthogonal()) {
        throw PreconditionError("coset factors must be orthogonal");
    }
    if (!(lambda_ * (coset.r1 * source_.matrix() * coset.r2.transpose()) == target_.matrix())) {
        throw PreconditionError("eta' is not lambda r1 eta r2^{-1}");
    }
    params_ = so2_parameter(coset.r2);
}

WProjPoint CosetIsomorphism::apply(const WProjPoint& p) const {
    const BigRational x(p.x()), z(p.z());
    const BigRational s(params_.s), t(params_.t);
    return WProjPoint(params_.eps * (t * x + s * z), lambda_ * (s * s + t * t) * p.y(), t * z - s * x);
}

WProjPoint CosetIsomorphism::invert(const WProjPoint& q) const {
    // (X, Z) = (eps(tx+sz), tz-sx)  =>  N x = t eps X - s Z, N z = s eps X + t Z
    const BigRational xx(q.x()), zz(q.z());
    const BigRational s(params_.s), t(params_.t);
    const BigRational n = s * s + t * t;
    const BigRational ex = params_.eps * xx;
    // representative (N x, N^2 y, N z) with y = Y / (lambda N)
    return WProjPoint(t * ex - s * zz, n * q.y() / lambda_, s * ex + t * zz);
}

WProjPoint transport_point(const MatrixEta& eta, const MatrixEta& eta_prime, const CosetData& coset,
                           const WProjPoint& p) {
    if (!h_contains(eta, p)) throw PreconditionError("point " + to_string(p) + " is not on H_eta");
    return CosetIsomorphism(eta, eta_prime, coset).apply(p);
}

}  // namespace ratdist
