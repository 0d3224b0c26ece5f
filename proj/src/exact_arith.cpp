#include "ratdist/exact_arith.hpp"

#include <algorithm>
#include <cctype>

namespace ratdist {

std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (sgn(n) < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

std::optional<BigRational> is_rational_square(const BigRational& q) {
    if (sgn(q) < 0) return std::nullopt;
    auto num = exact_isqrt(q.get_num());
    if (!num) return std::nullopt;
    auto den = exact_isqrt(q.get_den());
    if (!den) return std::nullopt;
    BigRational root(*num, *den);
    root.canonicalize();
    return root;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

int valuation(const BigInt& n, std::int64_t p) {
    if (sgn(n) == 0) throw PreconditionError("valuation of zero");
    BigInt m = n;
    const BigInt bp = static_cast<long>(p);
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), bp.get_mpz_t()) != 0) {
        m /= bp;
        ++v;
    }
    return v;
}

int legendre_symbol(const BigInt& a, std::int64_t p) {
    if (p == 2 || !is_prime(p)) throw PreconditionError("legendre_symbol needs an odd prime modulus");
    BigInt bp = static_cast<long>(p);
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), bp.get_mpz_t());
    return mpz_legendre(r.get_mpz_t(), bp.get_mpz_t());
}

ProjPair::ProjPair(const BigRational& u, const BigRational& v) {
    if (sgn(u) == 0 && sgn(v) == 0) throw PreconditionError("(0:0) is not a point of P^1");
    BigInt l;
    mpz_lcm(l.get_mpz_t(), u.get_den_mpz_t(), v.get_den_mpz_t());
    BigRational su = u * l;
    BigRational sv = v * l;
    u_ = su.get_num();
    v_ = sv.get_num();
    BigInt g;
    mpz_gcd(g.get_mpz_t(), u_.get_mpz_t(), v_.get_mpz_t());
    u_ /= g;
    v_ /= g;
    if (sgn(v_) < 0 || (sgn(v_) == 0 && sgn(u_) < 0)) {
        u_ = -u_;
        v_ = -v_;
    }
}

std::optional<BigRational> SlopePair::affine() const {
    if (sgn(slope.v()) == 0) return std::nullopt;
    BigRational q(slope.u(), slope.v());
    q.canonicalize();
    return q;
}

SlopePair make_slope(const ProjPair& p) {
    return SlopePair{p, exact_isqrt(p.u() * p.u() + p.v() * p.v())};
}

SlopePair slope_from_parameter(const BigRational& t) {
    return make_slope(ProjPair(BigRational(1 - t * t), BigRational(2 * t)));
}

std::vector<ProjPair> parameters_from_slope(const ProjPair& alpha) {
    const BigInt& u = alpha.u();
    const BigInt& v = alpha.v();
    std::vector<ProjPair> out;
    if (sgn(v) == 0) {
        // 2xz = 0: one of the axes.
        out.emplace_back(BigRational(0), BigRational(1));
        out.emplace_back(BigRational(1), BigRational(0));
    } else {
        auto h = exact_isqrt(u * u + v * v);
        if (!h) return out;
        // v t^2 + 2u t - v = 0 with t = x/z
        out.emplace_back(BigRational(-u + *h), BigRational(v));
        out.emplace_back(BigRational(-u - *h), BigRational(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const BigRational& q) { return q.get_str(); }
std::string to_string(const BigInt& n) { return n.get_str(); }
std::string to_string(const ProjPair& p) { return p.u().get_str() + ":" + p.v().get_str(); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    if (num[0] == '+') num.remove_prefix(1);
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (sgn(d) == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace ratdist
