#include <gtest/gtest.h>

#include "disckit/error.hpp"
#include "disckit/expr.hpp"
#include "support.hpp"

using namespace disckit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Internal;
}

}  // namespace

TEST(ParseRing, Syntax) {
    EXPECT_EQ(parse_ring("ZZ"), Ring::integers());
    EXPECT_EQ(parse_ring("QQ"), Ring::rationals());
    EXPECT_EQ(parse_ring("Fp(7)"), Ring::prime_field(7));
    EXPECT_EQ(parse_ring("QQ[u0,u1,u2]").to_string(), "QQ[u0,u1,u2]");
    EXPECT_EQ(parse_ring(" ZZ[ b , c ] ").to_string(), "ZZ[b,c]");
    EXPECT_EQ(kind_of([] { parse_ring("Fp(8)"); }), ErrorKind::Ring);
    EXPECT_EQ(kind_of([] { parse_ring("ZZ[[x]]"); }), ErrorKind::Ring);
    EXPECT_EQ(kind_of([] { parse_ring("RR"); }), ErrorKind::Parse);
}

TEST(ParseExpr, Precedence) {
    const Ring r = Ring::polynomial(Ring::integers(), {"x", "y"});
    EXPECT_EQ(parse_element("x + y*2^3", r), parse_element("x + 8*y", r));
    EXPECT_EQ(parse_element("-x^2", r), parse_element("-(x^2)", r));
    EXPECT_EQ(parse_element("x^2^3", r), parse_element("x^8", r));
    EXPECT_EQ(parse_element("(x+y)^2 - (x - y)^2", r), parse_element("4*x*y", r));
    EXPECT_EQ(parse_element("x - y - x", r), parse_element("-y", r));
}

TEST(ParseExpr, ErrorsCarryPositions) {
    try {
        parse_expr("t^2 +\n  * t");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
        ASSERT_TRUE(e.has_position());
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
    try {
        parse_expr("2 x");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("implicit multiplication"), std::string::npos);
    }
    EXPECT_EQ(kind_of([] { parse_expr("(x + 1"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_expr("x^-1"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_expr(""); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_expr("1/0"); }), ErrorKind::Parse);
}

TEST(ParseExpr, RingMembership) {
    const Ring zb = parse_ring("ZZ[b]");
    EXPECT_EQ(kind_of([&] { parse_element("c + 1", zb); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([&] { parse_element("b/2", zb); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([&] { parse_element("1/2*b", zb); }), ErrorKind::Ring);
    EXPECT_EQ(parse_element("1/3", Ring::prime_field(7)), Element(Ring::prime_field(7), 5L));
    EXPECT_EQ(kind_of([] { parse_element("1/7", Ring::prime_field(7)); }), ErrorKind::Ring);
}

TEST(ParseUniPoly, MainVariable) {
    const Ring r = parse_ring("ZZ[b,c]");
    const UniPoly f = parse_unipoly("t^2 + b*t + c", r, "t");
    EXPECT_EQ(f.degree().value(), 2u);
    EXPECT_EQ(f.coeff(1), Element::variable(r, "b"));
    EXPECT_EQ(print_poly(parse_unipoly("(b+1)*t^2 - b*t + c - 3", r, "t")),
              "(b + 1)*t^2 - b*t + c - 3");
    EXPECT_TRUE(std::holds_alternative<Element>(parse_poly("b*c", r, std::nullopt)));
    EXPECT_TRUE(std::holds_alternative<UniPoly>(parse_poly("b*t", r, std::string("t"))));
}

TEST(Printer, CaretDiagnostic) {
    EXPECT_EQ(caret_diagnostic("t^2+*t", 1, 5), "  t^2+*t\n      ^");
    EXPECT_EQ(caret_diagnostic("a\nbc d", 2, 4), "  bc d\n     ^");
}

TEST(Printer, Scalars) {
    EXPECT_EQ(print_scalar(Ring::rationals(), mpq_class(-3, 4)), "-3/4");
    EXPECT_EQ(print_scalar(Ring::prime_field(5), 4), "4");
    EXPECT_EQ(print_poly(UniPoly::zero(Ring::integers(), "t")), "0");
}

/* parse(print(p)) == p, and printing distinguishes distinct polynomials. */
TEST(Printer, RoundTripProperty) {
    gen::Rng rng(11);
    const std::vector<Ring> rings{parse_ring("ZZ[x,y,z]"), parse_ring("QQ[u0,u1]"),
                                  parse_ring("Fp(7)[a]"), parse_ring("QQ"), parse_ring("ZZ")};
    for (const Ring& r : rings) {
        std::map<std::string, Element> seen;
        for (int trial = 0; trial < 150; ++trial) {
            const Element a = gen::random_element(rng, r, 5, 3, 30);
            const std::string text = to_string(a);
            EXPECT_EQ(parse_element(text, r), a) << text;
            const auto [it, fresh] = seen.emplace(text, a);
            if (!fresh) EXPECT_EQ(it->second, a) << text;
        }
        for (int trial = 0; trial < 50; ++trial) {
            const UniPoly f = gen::random_unipoly(rng, r, static_cast<int>(gen::uniform(rng, 0, 4)));
            EXPECT_EQ(parse_unipoly(print_poly(f), r, "t"), f) << print_poly(f);
        }
    }
}
