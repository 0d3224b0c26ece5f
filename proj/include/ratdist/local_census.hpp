#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ratdist/curve_family.hpp"

namespace ratdist {

/// Integer matrix (a b; c d) with nonzero determinant.
struct IntMatrix {
    std::int64_t a, b, c, d;

    std::int64_t det() const { return a * d - b * c; }
    MatrixEta to_eta() const { return MatrixEta(BigRational(a), BigRational(b), BigRational(c), BigRational(d)); }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// p | ad - bc and both a^2+b^2, a^2+c^2 are non-residues mod p. When true,
/// H_eta has no Q_p-point. Always false for p = 2.
bool obstruction_holds(const IntMatrix& eta, std::int64_t p);

struct ModpCount {
    std::int64_t nonsatisfying;
    std::int64_t total;
};

/// Exhaustive count over nonzero (a,b,c,d) mod p with ad = bc of the
/// quadruples that fail the non-residue condition; total is (p+1)^2 (p-1).
ModpCount count_obstruction_free_modp(std::int64_t p);

enum class LocalVerdict { SolubleAtP, InsolubleAtP, UnknownAtP };

std::string to_string(LocalVerdict v);

/// Precision at which soluble_at_p verdicts are final.
int default_k_max(const IntMatrix& eta, std::int64_t p);

/// Decides H_eta(Q_p) != {} by refining primitive residue classes (x:z)
/// mod p^k for k <= k_max. Insoluble only when the search is exhaustive.
LocalVerdict soluble_at_p(const IntMatrix& eta, std::int64_t p, std::optional<int> k_max = std::nullopt);

/// Real solubility; requires a nonsingular fibre.
bool soluble_real(const MatrixEta& eta);

enum class PrimeVerdict { ObstructionInsoluble, SolubleAtP, InsolubleAtP, UnknownAtP };

std::string to_string(PrimeVerdict v);

struct CensusRecord {
    IntMatrix eta;
    std::int64_t det;
    std::vector<std::pair<std::int64_t, PrimeVerdict>> verdicts;
    bool locally_ruled_out;
};

/// Verdicts for one matrix at every prime <= prime_bound where insolubility
/// is possible (primes dividing the discriminant, or all primes for a
/// singular fibre). Other primes have smooth reduction and are soluble.
CensusRecord census_record(const IntMatrix& eta, std::int64_t prime_bound,
                           std::optional<int> k_max = std::nullopt);

struct CensusOptions {
    std::int64_t box = 1;  // entries in [-box, box]
    std::int64_t prime_bound = 50;
    std::optional<int> k_max;
    std::optional<std::int64_t> sample;  // exhaustive when unset
    std::uint64_t seed = 0;
};

struct CensusSummary {
    std::int64_t box;
    std::int64_t prime_bound;
    bool sampled;
    std::uint64_t seed;
    std::int64_t examined;   // matrices with det != 0
    std::int64_t survivors;  // no verdict rules them out
    std::int64_t obstructed;
    BigRational fraction() const;
};

/// Streams one record per examined matrix in deterministic order.
CensusSummary census_box(const CensusOptions& options, const std::function<void(const CensusRecord&)>& sink = {});

}  // namespace ratdist
