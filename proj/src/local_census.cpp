#include "ratdist/local_census.hpp"

#include <random>
#include <stdexcept>

namespace ratdist {

namespace {

using Poly = std::vector<BigInt>;  // ascending coefficients

Poly multiply(const Poly& l, const Poly& r) {
    Poly out(l.size() + r.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < l.size(); ++i) {
        for (std::size_t j = 0; j < r.size(); ++j) out[i + j] += l[i] * r[j];
    }
    return out;
}

Poly add(const Poly& l, const Poly& r) {
    Poly out(std::max(l.size(), r.size()), BigInt(0));
    for (std::size_t i = 0; i < l.size(); ++i) out[i] += l[i];
    for (std::size_t i = 0; i < r.size(); ++i) out[i] += r[i];
    return out;
}

BigInt evaluate(const Poly& f, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly derivative(const Poly& f) {
    Poly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
    if (out.empty()) out.push_back(0);
    return out;
}

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

BigInt integer_discriminant(const IntMatrix& m) {
    const BigRational delta = h_discriminant(m.to_eta());
    return delta.get_num();  // integral for integral eta
}

// One chart of P^1: the quartic restricted to z = 1 (u = x) or to x = 1 (u = z).
struct Chart {
    Poly quartic;
    Poly root_poly;  // squarefree polynomial with the same roots
    BigInt start;
    int start_level;
};

std::vector<Chart> charts(const IntMatrix& m, bool singular) {
    const BigInt a = big(m.a), b = big(m.b), c = big(m.c), d = big(m.d);
    // z = 1: z^2 - x^2 = 1 - u^2, 2xz = 2u
    Poly first0{a, 2 * b, -a};
    Poly second0{c, 2 * d, -c};
    // x = 1: z^2 - x^2 = w^2 - 1, 2xz = 2w
    Poly first1{-a, 2 * b, a};
    Poly second1{-c, 2 * d, c};
    Poly q0 = add(multiply(first0, first0), multiply(second0, second0));
    Poly q1 = add(multiply(first1, first1), multiply(second1, second1));
    const Poly circle{1, 0, 1};
    return {Chart{q0, singular ? circle : q0, 0, 0}, Chart{q1, singular ? circle : q1, 0, 1}};
}

bool unit_is_square(const BigInt& unit, std::int64_t p) {
    if (p == 2) {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), unit.get_mpz_t(), 8);
        return r == 1;
    }
    return legendre_symbol(unit, p) == 1;
}

BigInt pow_big(std::int64_t p, int k) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

bool obstruction_holds(const IntMatrix& eta, std::int64_t p) {
    if (p == 2) return false;
    if (eta.det() % p != 0) return false;
    const BigInt a = big(eta.a), b = big(eta.b), c = big(eta.c);
    return legendre_symbol(a * a + b * b, p) == -1 && legendre_symbol(a * a + c * c, p) == -1;
}

ModpCount count_obstruction_free_modp(std::int64_t p) {
    if (p == 2 || !is_prime(p)) throw PreconditionError("count_obstruction_free_modp needs an odd prime");
    std::vector<bool> nonresidue(static_cast<std::size_t>(p), true);
    nonresidue[0] = false;
    for (std::int64_t x = 1; x < p; ++x) nonresidue[static_cast<std::size_t>(x * x % p)] = false;

    std::int64_t total = 0;
    std::int64_t satisfying = 0;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c)
                for (std::int64_t d = 0; d < p; ++d) {
                    if ((a | b | c | d) == 0 || (a * d - b * c) % p != 0) continue;
                    ++total;
                    if (nonresidue[static_cast<std::size_t>((a * a + b * b) % p)] &&
                        nonresidue[static_cast<std::size_t>((a * a + c * c) % p)]) {
                        ++satisfying;
                    }
                }
    const ModpCount out{total - satisfying, total};
    if (out.total != (p + 1) * (p + 1) * (p - 1) || 4 * p * out.nonsatisfying > (3 * p + 4) * out.total) {
        throw std::logic_error("mod-p obstruction count violates its bound");
    }
    return out;
}

std::string to_string(LocalVerdict v) {
    switch (v) {
        case LocalVerdict::SolubleAtP: return "SolubleAtP";
        case LocalVerdict::InsolubleAtP: return "InsolubleAtP";
        case LocalVerdict::UnknownAtP: return "UnknownAtP";
    }
    return "?";
}

std::string to_string(PrimeVerdict v) {
    switch (v) {
        case PrimeVerdict::ObstructionInsoluble: return "ObstructionInsoluble";
        case PrimeVerdict::SolubleAtP: return "SolubleAtP";
        case PrimeVerdict::InsolubleAtP: return "InsolubleAtP";
        case PrimeVerdict::UnknownAtP: return "UnknownAtP";
    }
    return "?";
}

int default_k_max(const IntMatrix& eta, std::int64_t p) {
    if (eta.det() == 0) throw PreconditionError("eta must be invertible");
    const BigInt delta = integer_discriminant(eta);
    if (sgn(delta) != 0) return valuation(16 * delta, p) + 3;
    const BigInt a = big(eta.a), b = big(eta.b);
    return valuation(16 * (a * a + b * b), p) + 3;
}

LocalVerdict soluble_at_p(const IntMatrix& eta, std::int64_t p, std::optional<int> k_max) {
    if (eta.det() == 0) throw PreconditionError("eta must be invertible");
    if (!is_prime(p)) throw PreconditionError("p must be prime");
    const int limit = k_max.value_or(default_k_max(eta, p));
    const bool singular = sgn(integer_discriminant(eta)) == 0;

    bool unknown = false;
    for (const Chart& chart : charts(eta, singular)) {
        const Poly root_deriv = derivative(chart.root_poly);
        struct Node {
            BigInt u0;
            int level;
        };
        std::vector<Node> stack;
        // residue classes u = u0 mod p^level; level 0 is all of Z_p
        if (chart.start_level == 0) {
            for (std::int64_t j = p - 1; j >= 0; --j) stack.push_back({big(j), 1});
        } else {
            stack.push_back({chart.start, chart.start_level});
        }
        while (!stack.empty()) {
            Node node = std::move(stack.back());
            stack.pop_back();
            const BigInt value = evaluate(chart.quartic, node.u0);
            if (sgn(value) == 0) return LocalVerdict::SolubleAtP;  // y = 0
            const int v = valuation(value, p);
            if (v < node.level) {
                if (v % 2 == 1) continue;
                // valuation and the leading unit digits are fixed on the class
                const int needed = p == 2 ? 3 : 1;
                if (v + needed <= node.level) {
                    if (unit_is_square(value / pow_big(p, v), p)) return LocalVerdict::SolubleAtP;
                    continue;
                }
            }
            // a root of the quartic near u0 gives the point (u : 0 : 1)
            const BigInt g = evaluate(chart.root_poly, node.u0);
            const BigInt dg = evaluate(root_deriv, node.u0);
            if (sgn(g) == 0) return LocalVerdict::SolubleAtP;
            if (sgn(dg) != 0 && valuation(g, p) > 2 * valuation(dg, p)) return LocalVerdict::SolubleAtP;
            if (node.level >= limit) {
                unknown = true;
                continue;
            }
            const BigInt step = pow_big(p, node.level);
            for (std::int64_t j = p - 1; j >= 0; --j) {
                stack.push_back({node.u0 + step * big(j), node.level + 1});
            }
        }
    }
    return unknown ? LocalVerdict::UnknownAtP : LocalVerdict::InsolubleAtP;
}

bool soluble_real(const MatrixEta& eta) {
    if (classify_fiber(eta).kind != FiberClass::Kind::Nonsingular) {
        throw PreconditionError("soluble_real is defined for nonsingular fibres");
    }
    // the right side is a sum of two squares, positive wherever eta (z^2-x^2, 2xz) != 0
    return true;
}

CensusRecord census_record(const IntMatrix& eta, std::int64_t prime_bound, std::optional<int> k_max) {
    CensusRecord record{eta, eta.det(), {}, false};
    if (record.det == 0) throw PreconditionError("eta must be invertible");
    const BigInt delta = integer_discriminant(eta);
    const bool singular = sgn(delta) == 0;
    for (std::int64_t p : primes_up_to(prime_bound)) {
        if (!singular && mpz_divisible_ui_p(delta.get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
        PrimeVerdict verdict;
        if (obstruction_holds(eta, p)) {
            verdict = PrimeVerdict::ObstructionInsoluble;
        } else {
            switch (soluble_at_p(eta, p, k_max)) {
                case LocalVerdict::SolubleAtP: verdict = PrimeVerdict::SolubleAtP; break;
                case LocalVerdict::InsolubleAtP: verdict = PrimeVerdict::InsolubleAtP; break;
                default: verdict = PrimeVerdict::UnknownAtP; break;
            }
        }
        if (verdict == PrimeVerdict::ObstructionInsoluble || verdict == PrimeVerdict::InsolubleAtP) {
            record.locally_ruled_out = true;
        }
        record.verdicts.emplace_back(p, verdict);
    }
    return record;
}

BigRational CensusSummary::fraction() const {
    if (examined == 0) return 0;
    BigRational q(big(survivors), big(examined));
    q.canonicalize();
    return q;
}

CensusSummary census_box(const CensusOptions& options, const std::function<void(const CensusRecord&)>& sink) {
    if (options.box <= 0) throw PreconditionError("box size X must be positive");
    if (options.sample && *options.sample <= 0) throw PreconditionError("sample size must be positive");
    CensusSummary summary{options.box, options.prime_bound, options.sample.has_value(), options.seed, 0, 0, 0};

    auto visit = [&](const IntMatrix& m) {
        CensusRecord record = census_record(m, options.prime_bound, options.k_max);
        ++summary.examined;
        if (!record.locally_ruled_out) ++summary.survivors;
        for (const auto& [p, v] : record.verdicts) {
            if (v == PrimeVerdict::ObstructionInsoluble) {
                ++summary.obstructed;
                break;
            }
        }
        if (sink) sink(record);
    };

    const std::int64_t x = options.box;
    if (options.sample) {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::int64_t> entry(-x, x);
        while (summary.examined < *options.sample) {
            IntMatrix m{entry(rng), entry(rng), entry(rng), entry(rng)};
            if (m.det() != 0) visit(m);
        }
    } else {
        for (std::int64_t a = -x; a <= x; ++a)
            for (std::int64_t b = -x; b <= x; ++b)
                for (std::int64_t c = -x; c <= x; ++c)
                    for (std::int64_t d = -x; d <= x; ++d) {
                        IntMatrix m{a, b, c, d};
                        if (m.det() != 0) visit(m);
                    }
    }
    return summary;
}

}  // namespace ratdist
