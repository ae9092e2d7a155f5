#include <gtest/gtest.h>

#include "disckit/error.hpp"
#include "disckit/expr.hpp"
#include "disckit/hom.hpp"
#include "disckit/jet.hpp"
#include "disckit/resultant.hpp"

using namespace disckit;

namespace {

std::string u(int k) { return "u" + std::to_string(k); }

/* u_m -> u_{d-m}: from chart (d-i, 0) to chart (i, 1). */
RingHom reversal(int d, int i) {
    const Ring src = chart_ring(d, d - i), tgt = chart_ring(d, i);
    std::map<std::string, Element> images;
    for (int m = 0; m <= d; ++m)
        if (m != d - i) images.emplace(u(m), Element::variable(tgt, u(d - m)));
    return RingHom(src, tgt, images);
}

}  // namespace

TEST(Charts, GenericSection) {
    EXPECT_EQ(chart_ring(3, 1).to_string(), "ZZ[u0,u2,u3]");
    EXPECT_EQ(print_poly(generic_section(2, {2, 0})), "t^2 + u1*t + u0");
    EXPECT_EQ(print_poly(generic_section(2, {2, 1})), "u0*s^2 + u1*s + 1");
    EXPECT_EQ(print_poly(generic_section(3, {1, 0})), "u3*t^3 + u2*t^2 + t + u0");
    EXPECT_THROW(generic_section(2, {3, 0}), Error);
    EXPECT_THROW(generic_section(2, {0, 2}), Error);
}

TEST(Charts, TaylorMapAndIncidence) {
    const JetChartMap jm = taylor_map(3, 2, {3, 0});
    ASSERT_EQ(jm.components.size(), 3u);
    const Ring r = jm.components[0].coeff_ring();
    EXPECT_EQ(jm.components[2], parse_unipoly("3*t + u2", r, "t"));
    const IncidenceIdeal inc = incidence_ideal(3, 2, {3, 0});
    ASSERT_EQ(inc.gens.size(), 3u);
    EXPECT_EQ(inc.gens[2], parse_unipoly("6*t + 2*u2", inc.gens[2].coeff_ring(), "t"));
    EXPECT_THROW(taylor_map(3, 4, {3, 0}), Error);
}

TEST(DiscriminantIdeal, Examples) {
    const IdealGens d2 = discriminant_ideal(2, 1, {2, 0});
    ASSERT_EQ(d2.gens.size(), 1u);
    EXPECT_EQ(d2.gens[0], parse_element("4*u0 - u1^2", d2.ring));

    const IdealGens d3 = discriminant_ideal(3, 2, {3, 0});
    ASSERT_EQ(d3.gens.size(), 2u);
    EXPECT_EQ(d3.gens[1], parse_element("36*u1 - 12*u2^2", d3.ring));
    EXPECT_EQ(to_string(d3.gens[1]), "-12*u2^2 + 36*u1");

    /* Monic cubic t^3 + b t^2 + c t + e: Res(f, f') = -(b^2c^2 - 4c^3 - 4b^3e - 27e^2 + 18bce). */
    EXPECT_EQ(d3.gens[0],
              parse_element("-(u2^2*u1^2 - 4*u1^3 - 4*u2^3*u0 - 27*u0^2 + 18*u2*u1*u0)", d3.ring));
}

TEST(DiscriminantIdeal, GeneratorsAreNonzeroAndDegreeBounded) {
    for (int d = 1; d <= 5; ++d)
        for (int l = 1; l <= d; ++l)
            for (int i = 0; i <= d; ++i)
                for (int a = 0; a <= 1; ++a) {
                    const IdealGens g = discriminant_ideal(d, l, {i, a});
                    ASSERT_EQ(g.gens.size(), static_cast<std::size_t>(l));
                    for (int j = 0; j < l; ++j) {
                        EXPECT_FALSE(g.gens[j].is_zero());
                        EXPECT_LE(g.gens[j].to_poly().total_degree().value_or(0),
                                  static_cast<std::uint64_t>(2 * (d - j) - 1));
                    }
                }
}

TEST(DiscriminantIdeal, ReversalMapsTChartToSChart) {
    for (int d = 2; d <= 4; ++d)
        for (int i = 0; i <= d; ++i) {
            const RingHom rev = reversal(d, i);
            const IdealGens p = discriminant_ideal(d, d - 1, {d - i, 0});
            const IdealGens q = discriminant_ideal(d, d - 1, {i, 1});
            for (int j = 0; j < d - 1; ++j) EXPECT_EQ(rev(p.gens[j]), q.gens[j]) << d << i << j;
        }
}

TEST(Homogeneous, ClassicalDiscriminant) {
    const Element h2 = homogeneous_classical_discriminant(2);
    EXPECT_EQ(h2, parse_element("4*y0*y2 - y1^2", h2.ring()));
    for (int d = 2; d <= 5; ++d) {
        const Element raw = homogeneous_resultant(d);
        const Element cls = homogeneous_classical_discriminant(d);
        EXPECT_EQ(cls * Element::variable(raw.ring(), "y" + std::to_string(d)), raw);
        EXPECT_EQ(cls.to_poly().total_degree().value(), static_cast<std::uint64_t>(2 * d - 2));
        EXPECT_EQ(raw.to_poly().total_degree().value(), static_cast<std::uint64_t>(2 * d - 1));
    }
    EXPECT_THROW(homogeneous_resultant(1), Error);
}

/* Dehomogenising y_i -> 1 recovers P_0 of chart (i, 0). */
TEST(Homogeneous, DehomogenisesToChartGenerator) {
    for (int d = 2; d <= 4; ++d) {
        const Element raw = homogeneous_resultant(d);
        for (int i = 0; i <= d; ++i) {
            const Ring tgt = chart_ring(d, i);
            std::map<std::string, Element> images;
            for (int k = 0; k <= d; ++k)
                images.emplace("y" + std::to_string(k),
                               k == i ? Element::one(tgt) : Element::variable(tgt, u(k)));
            const RingHom deh(raw.ring(), tgt, images);
            EXPECT_EQ(deh(raw), discriminant_ideal(d, 1, {i, 0}).gens[0]) << d << " " << i;
        }
    }
}

TEST(ChartConsistency, QuadraticRelation) {
    const ChartConsistencyReport r = chart_consistency(2, 1, 2);
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0].relation, ChartRelation::PolynomialMultiple);
    ASSERT_TRUE(r.rows[0].quotient);
    EXPECT_EQ(to_string(*r.rows[0].quotient), "u0");
    EXPECT_FALSE(r.all_integer_multiples());
}

TEST(ChartConsistency, TopGeneratorPicksUpLeadingCoefficient) {
    for (int d = 2; d <= 4; ++d) {
        const ChartConsistencyReport r = chart_consistency(d, 1, d);
        ASSERT_TRUE(r.rows[0].quotient);
        EXPECT_EQ(to_string(*r.rows[0].quotient), "u0");
    }
    EXPECT_TRUE(chart_consistency(3, 0, 3).all_integer_multiples());
}

TEST(Ranks, TableIsAdditive) {
    for (int d = 0; d <= 20; ++d)
        for (int k = 0; k <= d; ++k) {
            const RankTable t = rank_table(d, k);
            EXPECT_EQ(t.rk_jet, k + 1);
            EXPECT_EQ(t.rk_w, t.rk_jet + t.rk_q);
        }
    EXPECT_THROW(rank_table(2, 3), Error);
}
