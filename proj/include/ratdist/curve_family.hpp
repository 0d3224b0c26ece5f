#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratdist/exact_arith.hpp"

namespace ratdist {

/// Plain 2x2 rational matrix (a b; c d).
struct Matrix2 {
    BigRational a, b, c, d;

    static Matrix2 identity() { return {1, 0, 0, 1}; }

    BigRational det() const { return a * d - b * c; }
    Matrix2 transpose() const { return {a, c, b, d}; }
    bool is_orthogonal() const;

    friend Matrix2 operator*(const Matrix2& l, const Matrix2& r);
    friend Matrix2 operator*(const BigRational& k, const Matrix2& m);
    friend bool operator==(const Matrix2& l, const Matrix2& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
    }
};

/// The curve parameter: an invertible 2x2 rational matrix.
class MatrixEta {
public:
    explicit MatrixEta(Matrix2 m);
    MatrixEta(BigRational a, BigRational b, BigRational c, BigRational d)
        : MatrixEta(Matrix2{std::move(a), std::move(b), std::move(c), std::move(d)}) {}

    const Matrix2& matrix() const { return m_; }
    const BigRational& a() const { return m_.a; }
    const BigRational& b() const { return m_.b; }
    const BigRational& c() const { return m_.c; }
    const BigRational& d() const { return m_.d; }
    BigRational det() const { return m_.det(); }

    friend bool operator==(const MatrixEta& l, const MatrixEta& r) { return l.m_ == r.m_; }

private:
    Matrix2 m_;
};

/// A point (x:y:z) of the weighted projective plane with weights (1,2,1).
///
/// Stored canonically: x, z coprime integers, z > 0 (or z = 0 and x = 1),
/// y rescaled by the square of the clearing factor. (x, z) = (0, 0) is
/// rejected since no such point lies on any curve of the family.
class WProjPoint {
public:
    WProjPoint(const BigRational& x, const BigRational& y, const BigRational& z);

    const BigInt& x() const { return x_; }
    const BigRational& y() const { return y_; }
    const BigInt& z() const { return z_; }

    friend bool operator==(const WProjPoint& l, const WProjPoint& r) {
        return l.x_ == r.x_ && l.z_ == r.z_ && l.y_ == r.y_;
    }
    friend bool operator<(const WProjPoint& l, const WProjPoint& r);

private:
    BigInt x_;
    BigRational y_;
    BigInt z_;
};

std::string to_string(const WProjPoint& p);
std::string to_string(const Matrix2& m);

/// "a,b,c,d" and "x:y:z" text forms.
MatrixEta parse_matrix(std::string_view text);
WProjPoint parse_point(std::string_view text);

struct FiberClass {
    enum class Kind { Nonsingular, SingularSplit, SingularPointless };
    Kind kind;
    std::optional<BigRational> lambda;  // set for SingularSplit, lambda > 0
};

std::string to_string(FiberClass::Kind k);

/// (a(z^2-x^2)+2bxz)^2 + (c(z^2-x^2)+2dxz)^2
BigRational norm_form(const MatrixEta& eta, const BigRational& x, const BigRational& z);

bool h_contains(const MatrixEta& eta, const WProjPoint& p);

/// 2^16 det^4 ((a+d)^2+(b-c)^2)((a-d)^2+(b+c)^2)
BigRational h_discriminant(const MatrixEta& eta);

FiberClass classify_fiber(const MatrixEta& eta);

WProjPoint sigma1(const WProjPoint& p);  // y -> -y
WProjPoint sigma2(const WProjPoint& p);  // (x:z) -> (-z:x)

/// Orbit under <sigma1, sigma2>, sorted and deduplicated.
std::vector<WProjPoint> gamma_orbit(const WProjPoint& p);

/// a u1 u2 + b u1 v2 + c v1 u2 + d v1 v2 == 0
bool f_contains(const MatrixEta& eta, const ProjPair& alpha1, const ProjPair& alpha2);

/// Vanishing of x y z (z^4-x^4)(a(z^2-x^2)+2bxz)(c(z^2-x^2)+2dxz).
/// Throws PreconditionError if p is not on H_eta.
bool is_degenerate(const MatrixEta& eta, const WProjPoint& p);

/// Smallest positive integer m with m*eta integral.
struct IntegralScaling {
    BigInt multiplier;
    MatrixEta eta;
};
IntegralScaling integral_scaling(const MatrixEta& eta);

/// The isomorphism H_eta -> H_{m eta}, (x:y:z) -> (x:my:z).
WProjPoint scale_point(const WProjPoint& p, const BigRational& m);

}  // namespace ratdist
