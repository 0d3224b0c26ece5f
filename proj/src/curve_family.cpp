#include "ratdist/curve_family.hpp"

#include <algorithm>
#include <set>

namespace ratdist {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

BigRational quad_u(const BigRational& x, const BigRational& z) { return z * z - x * x; }
BigRational quad_v(const BigRational& x, const BigRational& z) { return 2 * x * z; }

}  // namespace

bool Matrix2::is_orthogonal() const {
    return (*this) * transpose() == identity();
}

Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

Matrix2 operator*(const BigRational& k, const Matrix2& m) {
    return {k * m.a, k * m.b, k * m.c, k * m.d};
}

MatrixEta::MatrixEta(Matrix2 m) : m_(std::move(m)) {
    if (sgn(m_.det()) == 0) throw PreconditionError("eta must be invertible");
}

WProjPoint::WProjPoint(const BigRational& x, const BigRational& y, const BigRational& z) {
    if (sgn(x) == 0 && sgn(z) == 0) {
        throw PreconditionError("weighted point with x = z = 0 is not supported");
    }
    ProjPair xz(x, z);
    // xz = lambda * (x, z); recover lambda from a nonzero coordinate
    BigRational lambda = sgn(x) != 0 ? BigRational(xz.u()) / x : BigRational(xz.v()) / z;
    x_ = xz.u();
    z_ = xz.v();
    y_ = lambda * lambda * y;
}

bool operator<(const WProjPoint& l, const WProjPoint& r) {
    if (l.x_ != r.x_) return l.x_ < r.x_;
    if (l.z_ != r.z_) return l.z_ < r.z_;
    return l.y_ < r.y_;
}

std::string to_string(const WProjPoint& p) {
    return p.x().get_str() + ":" + to_string(p.y()) + ":" + p.z().get_str();
}

std::string to_string(const Matrix2& m) {
    return to_string(m.a) + "," + to_string(m.b) + "," + to_string(m.c) + "," + to_string(m.d);
}

MatrixEta parse_matrix(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) throw ParseError("matrix must be 'a,b,c,d': '" + std::string(text) + "'");
    Matrix2 m{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
              parse_rational(parts[3])};
    return MatrixEta(m);
}

WProjPoint parse_point(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ParseError("point must be 'x:y:z': '" + std::string(text) + "'");
    return WProjPoint(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

std::string to_string(FiberClass::Kind k) {
    switch (k) {
        case FiberClass::Kind::Nonsingular: return "Nonsingular";
        case FiberClass::Kind::SingularSplit: return "SingularSplit";
        case FiberClass::Kind::SingularPointless: return "SingularPointless";
    }
    return "?";
}

BigRational norm_form(const MatrixEta& eta, const BigRational& x, const BigRational& z) {
    const BigRational u = quad_u(x, z);
    const BigRational v = quad_v(x, z);
    const BigRational first = eta.a() * u + eta.b() * v;
    const BigRational second = eta.c() * u + eta.d() * v;
    return first * first + second * second;
}

bool h_contains(const MatrixEta& eta, const WProjPoint& p) {
    return p.y() * p.y() == norm_form(eta, BigRational(p.x()), BigRational(p.z()));
}

BigRational h_discriminant(const MatrixEta& eta) {
    const auto& [a, b, c, d] = eta.matrix();
    const BigRational det = eta.det();
    const BigRational det2 = det * det;
    BigRational plus = (a + d) * (a + d) + (b - c) * (b - c);
    BigRational minus = (a - d) * (a - d) + (b + c) * (b + c);
    return BigRational(65536) * det2 * det2 * plus * minus;
}

FiberClass classify_fiber(const MatrixEta& eta) {
    if (sgn(h_discriminant(eta)) != 0) return {FiberClass::Kind::Nonsingular, std::nullopt};
    // eta eta^t = (a^2+b^2) I, curve is y^2 = (a^2+b^2)(x^2+z^2)^2
    auto lambda = is_rational_square(eta.a() * eta.a() + eta.b() * eta.b());
    if (lambda) return {FiberClass::Kind::SingularSplit, lambda};
    return {FiberClass::Kind::SingularPointless, std::nullopt};
}

WProjPoint sigma1(const WProjPoint& p) {
    return WProjPoint(BigRational(p.x()), -p.y(), BigRational(p.z()));
}

WProjPoint sigma2(const WProjPoint& p) {
    return WProjPoint(BigRational(-p.z()), p.y(), BigRational(p.x()));
}

std::vector<WProjPoint> gamma_orbit(const WProjPoint& p) {
    std::set<WProjPoint> orbit{p, sigma1(p), sigma2(p), sigma1(sigma2(p))};
    return {orbit.begin(), orbit.end()};
}

bool f_contains(const MatrixEta& eta, const ProjPair& alpha1, const ProjPair& alpha2) {
    const BigRational u1(alpha1.u()), v1(alpha1.v()), u2(alpha2.u()), v2(alpha2.v());
    return sgn(BigRational(eta.a() * u1 * u2 + eta.b() * u1 * v2 + eta.c() * v1 * u2 + eta.d() * v1 * v2)) == 0;
}

bool is_degenerate(const MatrixEta& eta, const WProjPoint& p) {
    if (!h_contains(eta, p)) throw PreconditionError("point " + to_string(p) + " is not on H_eta");
    const BigRational x(p.x()), z(p.z());
    const BigRational u = quad_u(x, z);
    const BigRational v = quad_v(x, z);
    const BigRational z2 = z * z, x2 = x * x;
    const BigRational product = x * p.y() * z * (z2 * z2 - x2 * x2) * (eta.a() * u + eta.b() * v) *
                                (eta.c() * u + eta.d() * v);
    return sgn(product) == 0;
}

IntegralScaling integral_scaling(const MatrixEta& eta) {
    BigInt m = 1;
    for (const BigRational* e : {&eta.a(), &eta.b(), &eta.c(), &eta.d()}) {
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), e->get_den_mpz_t());
    }
    const BigRational mq(m);
    return {m, MatrixEta(mq * eta.matrix())};
}

WProjPoint scale_point(const WProjPoint& p, const BigRational& m) {
    return WProjPoint(BigRational(p.x()), m * p.y(), BigRational(p.z()));
}

}  // namespace ratdist
