#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratdist/exact_arith.hpp"

namespace ratdist {

/// y^2 = x^3 + A x^2 + B x with B != 0 and A^2 != 4B.
class WCurve {
public:
    WCurve(BigRational a, BigRational b);

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }

    /// x^3 + A x^2 + B x
    BigRational rhs(const BigRational& x) const { return x * (x * x + a_ * x + b_); }

    friend bool operator==(const WCurve& l, const WCurve& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

private:
    BigRational a_, b_;
};

/// E_{r,s}: y^2 = x^3 + (1+r^2+s^2) x^2 + s^2 x.
WCurve e_rs(const BigRational& r, const BigRational& s);

class ECPoint {
public:
    ECPoint() = default;  // the point at infinity
    ECPoint(BigRational x, BigRational y) : affine_(std::pair{std::move(x), std::move(y)}) {}

    static ECPoint infinity() { return {}; }

    bool is_infinity() const { return !affine_; }
    const BigRational& x() const { return affine_->first; }
    const BigRational& y() const { return affine_->second; }

    friend bool operator==(const ECPoint& l, const ECPoint& r) { return l.affine_ == r.affine_; }

private:
    std::optional<std::pair<BigRational, BigRational>> affine_;
};

std::string to_string(const ECPoint& p);

bool on_curve(const WCurve& c, const ECPoint& p);

ECPoint ec_negate(const ECPoint& p);

/// Chord-and-tangent sum. Throws PreconditionError on off-curve input.
ECPoint ec_add(const WCurve& c, const ECPoint& p, const ECPoint& q);

ECPoint ec_scalar_mul(const WCurve& c, long n, const ECPoint& p);

/// Value at x of the ell-th division polynomial with y eliminated.
///
/// Odd ell gives psi_ell(x). Even ell gives psi_ell(x) * psi_2(x), which is
/// a polynomial in x because psi_2^2 = 4(x^3 + A x^2 + B x). Either way the
/// zeros are exactly the x-coordinates of nonzero points killed by ell.
/// Supported ell: 2, 3, 4, 6, 8, 12.
BigRational division_poly_at(int ell, const WCurve& c, const BigRational& x);

/// Least k in 1..12 with kP = O, or nullopt (infinite order: Mazur's bound).
std::optional<int> torsion_order(const WCurve& c, const ECPoint& p);

enum class TorsionVerdict { Order2, Order4, Order8, NonTorsion };

std::string to_string(TorsionVerdict v);

/// Order of (-1, r) on E_{r,s}. Requires s != 0 and (r, s) != (0, +-1).
TorsionVerdict classify_minus1_point(const BigRational& r, const BigRational& s);

}  // namespace ratdist
