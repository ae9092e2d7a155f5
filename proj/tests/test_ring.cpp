#include <gtest/gtest.h>

#include "disckit/error.hpp"
#include "disckit/expr.hpp"
#include "disckit/hom.hpp"
#include "support.hpp"

using namespace disckit;
using disckit::gen::Rng;

namespace {

Element el(const char* src, const Ring& r) { return parse_element(src, r); }

std::vector<Ring> sample_rings() {
    return {Ring::integers(),
            Ring::rationals(),
            Ring::prime_field(7),
            Ring::polynomial(Ring::integers(), {"x", "y"}),
            Ring::polynomial(Ring::rationals(), {"u"}),
            Ring::polynomial(Ring::prime_field(5), {"a", "b", "c"})};
}

}  // namespace

TEST(Ring, Construction) {
    EXPECT_EQ(Ring::integers().to_string(), "ZZ");
    EXPECT_EQ(Ring::prime_field(7).to_string(), "Fp(7)");
    EXPECT_EQ(Ring::polynomial(Ring::integers(), {"b", "c"}).to_string(), "ZZ[b,c]");
    EXPECT_TRUE(Ring::rationals().is_field());
    EXPECT_FALSE(Ring::integers().is_field());
    EXPECT_FALSE(Ring::polynomial(Ring::rationals(), {"u"}).is_field());
    EXPECT_EQ(Ring::prime_field(31).characteristic(), 31u);
}

TEST(Ring, RejectsBadParameters) {
    EXPECT_THROW(Ring::prime_field(6), Error);
    EXPECT_THROW(Ring::prime_field(1), Error);
    EXPECT_THROW(Ring::prime_field(std::uint64_t{1} << 31), Error);
    EXPECT_NO_THROW(Ring::prime_field(2147483647));
    EXPECT_THROW(Ring::polynomial(Ring::integers(), {"x", "x"}), Error);
    EXPECT_THROW(Ring::polynomial(Ring::integers(), {"2x"}), Error);
    const Ring zx = Ring::polynomial(Ring::integers(), {"x"});
    EXPECT_THROW(Ring::polynomial(zx, {"y"}), Error);
}

TEST(Ring, PrimeTest) {
    int count = 0;
    for (std::uint64_t n = 0; n < 100; ++n) count += is_prime(n);
    EXPECT_EQ(count, 25);
    EXPECT_TRUE(is_prime(2147483629));
    EXPECT_FALSE(is_prime(2147483649ull));
}

TEST(Ring, ScalarArithmeticModP) {
    const Ring f7 = Ring::prime_field(7);
    EXPECT_EQ(f7.reduce(-1), 6);
    EXPECT_EQ(f7.reduce(mpq_class(1, 3)), 5);
    EXPECT_EQ(f7.mul(3, 5), 1);
    EXPECT_FALSE(f7.scalar_is_unit(0));
    EXPECT_TRUE(Ring::integers().scalar_is_unit(-1));
    EXPECT_FALSE(Ring::integers().scalar_is_unit(2));
}

TEST(Ring, MixingRingsIsAnError) {
    const Ring a = Ring::polynomial(Ring::integers(), {"x"});
    const Ring b = Ring::polynomial(Ring::rationals(), {"x"});
    try {
        (void)(Element::variable(a, "x") + Element::variable(b, "x"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Ring);
    }
}

TEST(MultiPoly, GrlexPrinting) {
    const Ring r = Ring::polynomial(Ring::integers(), {"u0", "u1"});
    std::vector<Term> terms{{{0, 2}, -1}, {{1, 0}, 4}};
    EXPECT_EQ(print_poly(MultiPoly::from_terms(r, terms)), "-u1^2 + 4*u0");
    EXPECT_EQ(to_string(el("x^2*y - 3 + y^3 - x", Ring::polynomial(Ring::integers(), {"x", "y"}))),
              "x^2*y + y^3 - x - 3");
    EXPECT_EQ(to_string(el("1/2*u - 1/3", Ring::polynomial(Ring::rationals(), {"u"}))),
              "1/2*u - 1/3");
}

TEST(MultiPoly, CanonicalFormMergesAndDropsZeros) {
    const Ring r = Ring::polynomial(Ring::prime_field(5), {"x"});
    std::vector<Term> terms{{{1}, 2}, {{1}, 3}, {{0}, 1}};
    const auto p = MultiPoly::from_terms(r, terms);
    EXPECT_EQ(p.num_terms(), 1u);
    EXPECT_TRUE(p.is_constant());
    EXPECT_EQ(p.constant_term(), 1);
}

TEST(MultiPoly, ExactDivision) {
    const Ring r = Ring::polynomial(Ring::integers(), {"x", "y"});
    const Element a = el("x^2 - y^2", r), b = el("x + y", r);
    ASSERT_TRUE(a.try_divide(b));
    EXPECT_EQ(*a.try_divide(b), el("x - y", r));
    EXPECT_FALSE(el("x^2 + 1", r).try_divide(b));
    EXPECT_FALSE(el("x", r).try_divide(el("2", r)));
    EXPECT_THROW(el("x", r).divide_exact(el("y", r)), Error);
}

TEST(Element, Units) {
    const Ring zx = Ring::polynomial(Ring::integers(), {"x"});
    EXPECT_TRUE(el("-1", zx).is_unit());
    EXPECT_FALSE(el("2", zx).is_unit());
    EXPECT_FALSE(el("x", zx).is_unit());
    EXPECT_TRUE(el("2", Ring::polynomial(Ring::rationals(), {"x"})).is_unit());
    EXPECT_TRUE(el("0", zx).is_nilpotent());
}

/* Commutative ring axioms on random elements of every supported ring shape. */
TEST(Element, RingAxiomsProperty) {
    Rng rng(1);
    for (const Ring& r : sample_rings()) {
        for (int trial = 0; trial < 60; ++trial) {
            const Element a = gen::random_element(rng, r);
            const Element b = gen::random_element(rng, r);
            const Element c = gen::random_element(rng, r);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a - a, Element::zero(r));
            EXPECT_EQ(a * Element::one(r), a);
            EXPECT_EQ(a.pow(3), a * a * a);
            if (!b.is_zero()) {
                const auto q = (a * b).try_divide(b);
                ASSERT_TRUE(q.has_value()) << r.to_string();
                EXPECT_EQ(*q, a);
            }
        }
    }
}

TEST(UniPoly, DegreeAndDerivative) {
    const Ring zz = Ring::integers();
    EXPECT_TRUE(UniPoly::zero(zz, "t").degree().is_minus_infinity());
    EXPECT_EQ(to_string(UniPoly::zero(zz, "t").degree()), "-inf");
    const UniPoly f = UniPoly::from_ints(zz, "t", {1, 2, 3, 4});
    EXPECT_EQ(f.degree().value(), 3u);
    EXPECT_EQ(derivative(f), UniPoly::from_ints(zz, "t", {2, 6, 12}));
    EXPECT_EQ(derivative(f, 3), UniPoly::from_ints(zz, "t", {24}));
    EXPECT_TRUE(derivative(f, 4).is_zero());
    const Ring f3 = Ring::prime_field(3);
    EXPECT_TRUE(derivative(UniPoly::from_ints(f3, "t", {0, 0, 0, 1})).is_zero());
}

TEST(UniPoly, VariableClashRejected) {
    const Ring r = Ring::polynomial(Ring::integers(), {"t"});
    EXPECT_THROW(UniPoly(r, "t"), Error);
    EXPECT_THROW(UniPoly(Ring::integers(), "1t"), Error);
}

TEST(UniPoly, DivmodAndGcd) {
    Rng rng(2);
    const Ring q = Ring::rationals();
    for (int trial = 0; trial < 100; ++trial) {
        const UniPoly f = gen::random_unipoly(rng, q, static_cast<int>(gen::uniform(rng, 0, 6)));
        const UniPoly g = gen::random_unipoly(rng, q, static_cast<int>(gen::uniform(rng, 0, 4)));
        const auto [quo, rem] = divmod(f, g);
        EXPECT_EQ(quo * g + rem, f);
        EXPECT_TRUE(rem.is_zero() || rem.degree() < g.degree());
        const UniPoly h = unipoly_gcd(f * g, g);
        EXPECT_EQ(h, make_monic(g));
    }
    EXPECT_THROW(unipoly_gcd(UniPoly::from_ints(Ring::integers(), "t", {1, 1}),
                             UniPoly::from_ints(Ring::integers(), "t", {1})),
                 Error);
}

TEST(UniPoly, ProductDegreeAdditiveOverDomains) {
    Rng rng(3);
    const Ring r = Ring::polynomial(Ring::integers(), {"a"});
    for (int trial = 0; trial < 50; ++trial) {
        const int m = static_cast<int>(gen::uniform(rng, 0, 4));
        const int n = static_cast<int>(gen::uniform(rng, 0, 4));
        const UniPoly f = gen::random_unipoly(rng, r, m), g = gen::random_unipoly(rng, r, n);
        EXPECT_EQ((f * g).degree().value(), static_cast<std::size_t>(m + n));
    }
}

TEST(RingHom, SpecializationIsAHomomorphism) {
    Rng rng(4);
    const Ring src = Ring::polynomial(Ring::integers(), {"x", "y"});
    const Ring tgt = Ring::prime_field(31);
    const RingHom phi(src, tgt, {{"x", Element(tgt, 3L)}, {"y", Element(tgt, 30L)}});
    for (int trial = 0; trial < 50; ++trial) {
        const Element a = gen::random_element(rng, src), b = gen::random_element(rng, src);
        EXPECT_EQ(phi(a + b), phi(a) + phi(b));
        EXPECT_EQ(phi(a * b), phi(a) * phi(b));
    }
    EXPECT_EQ(phi(el("x*y + 1", src)), Element(tgt, 29L));
}

TEST(RingHom, Validation) {
    const Ring zx = Ring::polynomial(Ring::integers(), {"x"});
    EXPECT_THROW(RingHom(Ring::rationals(), Ring::integers()), Error);
    EXPECT_THROW(RingHom(Ring::prime_field(5), Ring::prime_field(7)), Error);
    EXPECT_THROW(RingHom(zx, Ring::integers()), Error);
    const Ring zy = Ring::polynomial(Ring::integers(), {"x", "y"});
    const RingHom inc(zx, zy);
    EXPECT_EQ(inc(el("x + 2", zx)), el("x + 2", zy));
}
