#include "ratdist/elliptic.hpp"

#include <map>

namespace ratdist {

WCurve::WCurve(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {
    if (sgn(b_) == 0 || a_ * a_ == 4 * b_) throw PreconditionError("singular Weierstrass curve");
}

WCurve e_rs(const BigRational& r, const BigRational& s) {
    return WCurve(1 + r * r + s * s, s * s);
}

std::string to_string(const ECPoint& p) {
    if (p.is_infinity()) return "O";
    return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

bool on_curve(const WCurve& c, const ECPoint& p) {
    return p.is_infinity() || p.y() * p.y() == c.rhs(p.x());
}

ECPoint ec_negate(const ECPoint& p) {
    if (p.is_infinity()) return p;
    return {p.x(), -p.y()};
}

namespace {

ECPoint add_unchecked(const WCurve& c, const ECPoint& p, const ECPoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    BigRational slope;
    if (p.x() == q.x()) {
        if (p.y() != q.y() || sgn(p.y()) == 0) return ECPoint::infinity();
        slope = (3 * p.x() * p.x() + 2 * c.a() * p.x() + c.b()) / (2 * p.y());
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    BigRational x3 = slope * slope - c.a() - p.x() - q.x();
    BigRational y3 = slope * (p.x() - x3) - p.y();
    return {std::move(x3), std::move(y3)};
}

void require_on_curve(const WCurve& c, const ECPoint& p) {
    if (!on_curve(c, p)) throw PreconditionError("point " + to_string(p) + " is not on the curve");
}

}  // namespace

ECPoint ec_add(const WCurve& c, const ECPoint& p, const ECPoint& q) {
    require_on_curve(c, p);
    require_on_curve(c, q);
    return add_unchecked(c, p, q);
}

ECPoint ec_scalar_mul(const WCurve& c, long n, const ECPoint& p) {
    require_on_curve(c, p);
    ECPoint base = n < 0 ? ec_negate(p) : p;
    unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    ECPoint acc;
    while (k != 0) {
        if (k & 1UL) acc = add_unchecked(c, acc, base);
        k >>= 1;
        if (k != 0) base = add_unchecked(c, base, base);
    }
    return acc;
}

BigRational division_poly_at(int ell, const WCurve& c, const BigRational& x) {
    if (ell != 2 && ell != 3 && ell != 4 && ell != 6 && ell != 8 && ell != 12) {
        throw PreconditionError("division polynomial index must be one of 2,3,4,6,8,12");
    }
    // a1 = a3 = a6 = 0, a2 = A, a4 = B
    const BigRational b2 = 4 * c.a();
    const BigRational b4 = 2 * c.b();
    const BigRational b8 = -c.b() * c.b();
    const BigRational psi2_sq = 4 * c.rhs(x);
    const BigRational x2 = x * x;

    // f_n: psi_n = f_n for odd n, psi_n = psi_2 f_n for even n.
    std::map<int, BigRational> f;
    f[0] = 0;
    f[1] = 1;
    f[2] = 1;
    f[3] = 3 * x2 * x2 + b2 * x2 * x + 3 * b4 * x2 + b8;
    f[4] = 2 * x2 * x2 * x2 + b2 * x2 * x2 * x + 5 * b4 * x2 * x2 + 10 * b8 * x2 + b2 * b8 * x + b4 * b8;
    const BigRational psi2_4 = psi2_sq * psi2_sq;

    auto get = [&](auto&& self, int n) -> BigRational {
        if (auto it = f.find(n); it != f.end()) return it->second;
        const int m = n / 2;
        BigRational val;
        if (n % 2 == 1) {
            BigRational fm = self(self, m), fm1 = self(self, m + 1), fm2 = self(self, m + 2),
                        fmm1 = self(self, m - 1);
            BigRational lhs = fm2 * fm * fm * fm;
            BigRational rhs = fmm1 * fm1 * fm1 * fm1;
            if (m % 2 == 0) {
                lhs *= psi2_4;
            } else {
                rhs *= psi2_4;
            }
            val = lhs - rhs;
        } else {
            BigRational fm = self(self, m), fm1 = self(self, m + 1), fm2 = self(self, m + 2),
                        fmm1 = self(self, m - 1), fmm2 = self(self, m - 2);
            val = fm * (fm2 * fmm1 * fmm1 - fmm2 * fm1 * fm1);
        }
        f[n] = val;
        return val;
    };
    BigRational fl = get(get, ell);
    return ell % 2 == 0 ? BigRational(psi2_sq * fl) : fl;
}

std::optional<int> torsion_order(const WCurve& c, const ECPoint& p) {
    require_on_curve(c, p);
    ECPoint acc = p;
    for (int k = 1; k <= 12; ++k) {
        if (acc.is_infinity()) return k;
        acc = add_unchecked(c, acc, p);
    }
    return std::nullopt;
}

std::string to_string(TorsionVerdict v) {
    switch (v) {
        case TorsionVerdict::Order2: return "Order2";
        case TorsionVerdict::Order4: return "Order4";
        case TorsionVerdict::Order8: return "Order8";
        case TorsionVerdict::NonTorsion: return "NonTorsion";
    }
    return "?";
}

TorsionVerdict classify_minus1_point(const BigRational& r, const BigRational& s) {
    if (sgn(s) == 0) throw PreconditionError("s must be nonzero");
    const BigRational s2 = s * s;
    if (sgn(r) == 0 && s2 == 1) throw PreconditionError("(r, s) = (0, +-1) is excluded");
    if (sgn(r) == 0) return TorsionVerdict::Order2;
    if (s2 == 1) return TorsionVerdict::Order4;
    const BigRational lhs = 4 * r * r * s;
    const BigRational rhs = (1 - s2) * (1 - s2);
    if (lhs == rhs || lhs == -rhs) return TorsionVerdict::Order8;
    return TorsionVerdict::NonTorsion;
}

}  // namespace ratdist
