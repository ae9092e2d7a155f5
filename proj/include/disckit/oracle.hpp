#ifndef DISCKIT_ORACLE_HPP_
#define DISCKIT_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "disckit/jet.hpp"
#include "disckit/unipoly.hpp"

namespace disckit {

/* True iff gcd(f, f', .., f^(m-1)) is nonconstant, i.e. f has a root of
 * multiplicity >= m over the algebraic closure. f must be a nonzero
 * polynomial over Fp with p > deg f. */
bool has_root_of_multiplicity(const UniPoly& f, int m);

struct OracleOptions {
    std::uint64_t budget = 10'000'000;  // max number of enumerated points
    unsigned threads = 1;               // 0 = hardware concurrency
};

enum class MismatchDirection {
    Soundness,     // root of multiplicity >= l+1, but some generator is nonzero
    Completeness,  // all generators vanish, but no root of multiplicity >= l+1
};

struct Mismatch {
    std::vector<std::uint64_t> point;  // (u0, .., u_{d-1})
    MismatchDirection direction;
};

struct VerifyReport {
    int d;
    int l;
    std::uint64_t q;
    ChartId chart;
    std::uint64_t ideal_zero_count = 0;
    std::uint64_t mult_root_count = 0;
    std::vector<Mismatch> mismatches;  // sorted by enumeration index

    std::size_t count(MismatchDirection dir) const;
};

/* Enumerate the monic chart (d, 0) over F_q and compare the zero set of
 * the discriminant ideal with the set of polynomials having a root of
 * multiplicity >= l+1. Requires q prime, q > d, q^d <= budget. */
VerifyReport verify_discriminant_locus(int d, int l, std::uint64_t q, ChartId chart,
                                       const OracleOptions& opts = {});

struct GrowthReport {
    std::uint64_t count_q1;
    std::uint64_t count_q2;
    std::optional<double> ratio;  // undefined when count_q1 == 0
    double expected;              // (q2/q1)^(d-l)
    bool within_tolerance;        // ratio in [expected/3, 3*expected]
};

/* Point counts of the discriminant locus at two field sizes. Two empty
 * loci count as within tolerance. */
GrowthReport dimension_growth_check(int d, int l, std::uint64_t q1, std::uint64_t q2,
                                    const OracleOptions& opts = {});

}  // namespace disckit

#endif  // DISCKIT_ORACLE_HPP_
