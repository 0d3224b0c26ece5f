#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ratdist/errors.hpp"

namespace ratdist {

using BigInt = mpz_class;
using BigRational = mpq_class;  // gmp keeps this canonical: reduced, den > 0

/// Nonnegative exact square root of n if n is a perfect square.
std::optional<BigInt> exact_isqrt(const BigInt& n);

/// Nonnegative rational square root of q, or nullopt if q is not a square.
std::optional<BigRational> is_rational_square(const BigRational& q);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// p-adic valuation of a nonzero integer.
int valuation(const BigInt& n, std::int64_t p);

/// Legendre symbol (a/p) for an odd prime p; throws PreconditionError otherwise.
int legendre_symbol(const BigInt& a, std::int64_t p);

/// A point of P^1(Q) stored as coprime integers with the last nonzero
/// coordinate positive.
class ProjPair {
public:
    ProjPair(const BigRational& u, const BigRational& v);

    const BigInt& u() const { return u_; }
    const BigInt& v() const { return v_; }

    friend bool operator==(const ProjPair& l, const ProjPair& r) {
        return l.u_ == r.u_ && l.v_ == r.v_;
    }
    friend bool operator<(const ProjPair& l, const ProjPair& r) {
        if (l.u_ != r.u_) return l.u_ < r.u_;
        return l.v_ < r.v_;
    }

private:
    BigInt u_, v_;
};

/// An element (u:v) of P^1 tagged with membership in the set of
/// Pythagorean slopes: hyp holds sqrt(u^2+v^2) when it is rational.
struct SlopePair {
    ProjPair slope;
    std::optional<BigInt> hyp;

    bool is_pythagorean() const { return hyp.has_value(); }
    /// Affine value u/v; nullopt at (1:0).
    std::optional<BigRational> affine() const;

    friend bool operator==(const SlopePair& l, const SlopePair& r) { return l.slope == r.slope; }
    friend bool operator<(const SlopePair& l, const SlopePair& r) { return l.slope < r.slope; }
};

SlopePair make_slope(const ProjPair& p);

/// (1-t^2 : 2t), always Pythagorean with witness 1+t^2 before scaling.
SlopePair slope_from_parameter(const BigRational& t);

/// All (x:z) with (z^2-x^2 : 2xz) = alpha; two when u^2+v^2 is a nonzero
/// square, else empty. Sorted lexicographically.
std::vector<ProjPair> parameters_from_slope(const ProjPair& alpha);

/// "n/d" with the denominator omitted when it is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& n);
std::string to_string(const ProjPair& p);

/// Parses "n", "-n" or "n/d" with d != 0. Throws ParseError.
BigRational parse_rational(std::string_view text);

}  // namespace ratdist
