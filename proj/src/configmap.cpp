#include "ratdist/configmap.hpp"

namespace ratdist {

std::pair<SlopePair, SlopePair> phi(const MatrixEta& eta, const WProjPoint& p) {
    if (!h_contains(eta, p)) throw PreconditionError("point " + to_string(p) + " is not on H_eta");
    const BigRational x(p.x()), z(p.z());
    const BigRational u = z * z - x * x;
    const BigRational v = 2 * x * z;
    SlopePair alpha1 = make_slope(ProjPair(-eta.c() * u - eta.d() * v, eta.a() * u + eta.b() * v));
    SlopePair alpha2 = make_slope(ProjPair(u, v));
    return {std::move(alpha1), std::move(alpha2)};
}

WProjPoint phi_lift(const MatrixEta& eta, const SlopePair& alpha1, const SlopePair& alpha2) {
    if (!alpha1.is_pythagorean() || !alpha2.is_pythagorean()) {
        throw PreconditionError("phi_lift needs two Pythagorean slopes");
    }
    if (!f_contains(eta, alpha1.slope, alpha2.slope)) throw PreconditionError("slope pair is not on F_eta");

    const ProjPair xz = parameters_from_slope(alpha2.slope).front();
    const ProjPair xz1 = parameters_from_slope(alpha1.slope).front();
    const BigRational x(xz.u()), z(xz.v());
    const BigRational x1(xz1.u()), z1(xz1.v());

    // eta (z^2-x^2, 2xz)^t = lambda (-2x'z', z'^2-x'^2)^t
    const BigRational image0 = eta.a() * (z * z - x * x) + eta.b() * 2 * x * z;
    const BigRational image1 = eta.c() * (z * z - x * x) + eta.d() * 2 * x * z;
    const BigRational target0 = -2 * x1 * z1;
    const BigRational target1 = z1 * z1 - x1 * x1;
    const BigRational lambda = sgn(target0) != 0 ? BigRational(image0 / target0) : BigRational(image1 / target1);
    if (image0 != lambda * target0 || image1 != lambda * target1) {
        throw PreconditionError("inconsistent lift scalar");
    }
    BigRational y = lambda * (z1 * z1 + x1 * x1);
    if (sgn(y) < 0) y = -y;
    return WProjPoint(x, y, z);
}

}  // namespace ratdist
