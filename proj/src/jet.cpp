#include "disckit/jet.hpp"

#include <string>

#include "disckit/error.hpp"
#include "disckit/hom.hpp"
#include "disckit/resultant.hpp"

namespace disckit {

namespace {

void check_degree(int d) {
    if (d < 1) throw Error(ErrorKind::Parameter, "degree d must be >= 1, got " + std::to_string(d));
}

void check_chart(int d, ChartId chart) {
    check_degree(d);
    if (chart.section < 0 || chart.section > d)
        throw Error(ErrorKind::Parameter, "chart section i must lie in [0, d], got " +
                                              std::to_string(chart.section));
    if (chart.affine != 0 && chart.affine != 1)
        throw Error(ErrorKind::Parameter, "affine chart must be 0 or 1, got " +
                                              std::to_string(chart.affine));
}

void check_order(int d, int l, int lo) {
    if (l < lo || l > d)
        throw Error(ErrorKind::Parameter, "jet order l must lie in [" + std::to_string(lo) +
                                              ", d], got " + std::to_string(l));
}

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace

Ring chart_ring(int d, int section, const Ring& scalar) {
    check_chart(d, {section, 0});
    std::vector<std::string> vars;
    for (int k = 0; k <= d; ++k)
        if (k != section) vars.push_back("u" + std::to_string(k));
    return Ring::polynomial(scalar.scalar_ring(), std::move(vars));
}

UniPoly generic_section(int d, ChartId chart, const Ring& scalar) {
    check_chart(d, chart);
    const Ring ring = chart_ring(d, chart.section, scalar);
    std::vector<Element> coeffs(static_cast<std::size_t>(d) + 1, Element::zero(ring));
    for (int k = 0; k <= d; ++k) {
        const std::size_t power = chart.affine == 0 ? k : d - k;
        coeffs[power] = k == chart.section ? Element::one(ring)
                                           : Element::variable(ring, "u" + std::to_string(k));
    }
    return UniPoly(ring, chart.affine == 0 ? "t" : "s", std::move(coeffs));
}

JetChartMap taylor_map(int d, int l, ChartId chart) {
    check_chart(d, chart);
    check_order(d, l, 0);
    const UniPoly f = generic_section(d, chart, Ring::rationals());
    JetChartMap map{d, l, chart, {}};
    UniPoly g = f;
    for (int j = 0; j <= l; ++j) {
        if (j > 0) g = derivative(g);
        map.components.push_back(g.scaled(Element(f.coeff_ring(), mpq_class(1, factorial(j)))));
    }
    return map;
}

IncidenceIdeal incidence_ideal(int d, int l, ChartId chart) {
    check_chart(d, chart);
    check_order(d, l, 0);
    IncidenceIdeal ideal{chart, {}};
    UniPoly g = generic_section(d, chart);
    for (int j = 0; j <= l; ++j) {
        if (j > 0) g = derivative(g);
        ideal.gens.push_back(g);
    }
    return ideal;
}

IdealGens discriminant_ideal(int d, int l, ChartId chart) {
    check_chart(d, chart);
    check_order(d, l, 1);
    UniPoly cur = generic_section(d, chart);
    IdealGens out{cur.coeff_ring(), {}};
    for (int j = 0; j < l; ++j) {
        UniPoly nxt = derivative(cur);
        const auto m = static_cast<std::size_t>(d - j);
        out.gens.push_back(resultant(cur, nxt, SylvesterSpec{m, m - 1}));
        cur = std::move(nxt);
    }
    return out;
}

Element homogeneous_resultant(int d) {
    if (d < 2) throw Error(ErrorKind::Parameter, "homogeneous discriminant needs d >= 2");
    std::vector<std::string> vars;
    for (int k = 0; k <= d; ++k) vars.push_back("y" + std::to_string(k));
    const Ring ring = Ring::polynomial(Ring::integers(), vars);
    std::vector<Element> coeffs;
    for (const auto& v : vars) coeffs.push_back(Element::variable(ring, v));
    const UniPoly a(ring, "t", std::move(coeffs));
    const auto m = static_cast<std::size_t>(d);
    return resultant(a, derivative(a), SylvesterSpec{m, m - 1});
}

Element homogeneous_classical_discriminant(int d) {
    Element raw = homogeneous_resultant(d);
    return raw.divide_exact(Element::variable(raw.ring(), "y" + std::to_string(d)));
}

const char* to_string(ChartRelation r) {
    switch (r) {
    case ChartRelation::IntegerMultiple: return "integer-multiple";
    case ChartRelation::RationalMultiple: return "rational-multiple";
    case ChartRelation::PolynomialMultiple: return "polynomial-multiple";
    case ChartRelation::Unrelated: return "unrelated";
    }
    return "unrelated";
}

bool ChartConsistencyReport::all_integer_multiples() const {
    for (const auto& r : rows)
        if (r.relation != ChartRelation::IntegerMultiple) return false;
    return true;
}

ChartConsistencyReport chart_consistency(int d, int l, int section) {
    check_chart(d, {section, 0});
    check_order(d, l, 0);
    ChartConsistencyReport report{d, l, section, {}};
    if (l == 0) return report;
    const IdealGens ps = discriminant_ideal(d, l, {section, 0});
    const IdealGens qs = discriminant_ideal(d, l, {section, 1});
    const Ring qq = ps.ring.with_scalar(Ring::rationals());
    const RingHom to_qq(ps.ring, qq);
    for (int j = 0; j < l; ++j) {
        const Element& p = ps.gens[static_cast<std::size_t>(j)];
        const Element& q = qs.gens[static_cast<std::size_t>(j)];
        ChartComparison row{j, p, q, ChartRelation::Unrelated, 0, 0, std::nullopt};
        auto h = to_qq(q).try_divide(to_qq(p));
        if (h && !h->is_zero()) {
            row.quotient = *h;
            if (h->is_constant()) {
                const mpq_class c = h->constant_value();
                row.sign = c < 0 ? -1 : 1;
                row.factor = abs(c);
                row.relation = c.get_den() == 1 ? ChartRelation::IntegerMultiple
                                                : ChartRelation::RationalMultiple;
            } else {
                const auto& lead = h->as_poly()->leading_term().coeff;
                row.sign = lead < 0 ? -1 : 1;
                row.relation = ChartRelation::PolynomialMultiple;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

RankTable rank_table(int d, int k) {
    if (d < 0 || k < 0 || k > d)
        throw Error(ErrorKind::Parameter, "rank table needs 0 <= k <= d");
    return {k + 1, d + 1, d - k};
}

}  // namespace disckit
