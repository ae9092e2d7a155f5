#ifndef DISCKIT_JET_HPP_
#define DISCKIT_JET_HPP_

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "disckit/element.hpp"
#include "disckit/unipoly.hpp"

namespace disckit {

/*
 * Chart U_(i,j) of P(W*) x P^1 for sections of O(d): y_i is inverted
 * (u_k = y_k / y_i, u_i = 1) and x_j is inverted. affine == 0 uses the
 * coordinate t = x1/x0, affine == 1 uses s = x0/x1.
 */
struct ChartId {
    int section;
    int affine;

    friend bool operator==(const ChartId&, const ChartId&) = default;
};

/* ZZ[u0, .., ud] without u_section, or over `scalar` when given. */
Ring chart_ring(int d, int section, const Ring& scalar = Ring::integers());

/* f(t) = u0 + u1 t + .. + t^i + .. + ud t^d     (affine 0)
 * g(s) = u0 s^d + .. + s^(d-i) + .. + ud        (affine 1) */
UniPoly generic_section(int d, ChartId chart, const Ring& scalar = Ring::integers());

/* Order-l Taylor map of the generic section: [f, f'/1!, .., f^(l)/l!]. */
struct JetChartMap {
    int d;
    int l;
    ChartId chart;
    std::vector<UniPoly> components;  // over QQ[u..]
};

JetChartMap taylor_map(int d, int l, ChartId chart);

/* Generators f, f', .., f^(l) of the incidence ideal (unnormalised). */
struct IncidenceIdeal {
    ChartId chart;
    std::vector<UniPoly> gens;  // over ZZ[u..]
};

IncidenceIdeal incidence_ideal(int d, int l, ChartId chart);

struct IdealGens {
    Ring ring;
    std::vector<Element> gens;
};

/* P_j = Res_{d-j, d-j-1}(f^(j), f^(j+1)) for j = 0..l-1, 1 <= l <= d. In
 * the s-chart these are the Q_j built from g. */
IdealGens discriminant_ideal(int d, int l, ChartId chart);

/* Res_{d,d-1}(a, a') for a(t) = y0 + y1 t + .. + yd t^d, ZZ[y0..yd]. */
Element homogeneous_resultant(int d);
/* The irreducible classical discriminant: homogeneous_resultant(d) / yd,
 * of total degree 2d - 2. */
Element homogeneous_classical_discriminant(int d);

enum class ChartRelation {
    IntegerMultiple,     // Q = c * P with c a nonzero integer
    RationalMultiple,    // Q = c * P with c a non-integral rational
    PolynomialMultiple,  // Q = h * P with h a nonconstant polynomial
    Unrelated,
};

const char* to_string(ChartRelation r);

struct ChartComparison {
    int j;
    Element p;  // chart (i, 0)
    Element q;  // chart (i, 1)
    ChartRelation relation;
    int sign = 0;                     // multiples only
    mpq_class factor;                 // |c| for constant multiples
    std::optional<Element> quotient;  // q / p over QQ when it exists
};

struct ChartConsistencyReport {
    int d;
    int l;
    int section;
    std::vector<ChartComparison> rows;

    /* Every Q_j is a nonzero integer multiple of P_j. Vacuous for l = 0. */
    bool all_integer_multiples() const;
};

ChartConsistencyReport chart_consistency(int d, int l, int section);

struct RankTable {
    int rk_jet;  // rk Pr^k(O(d)) = k + 1
    int rk_w;    // rk W (x) O = d + 1
    int rk_q;    // rk Q_{k,d} = d - k
};

RankTable rank_table(int d, int k);

}  // namespace disckit

#endif  // DISCKIT_JET_HPP_
