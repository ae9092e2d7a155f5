#include "disckit/etale.hpp"

#include <algorithm>

#include "disckit/error.hpp"
#include "disckit/expr.hpp"
#include "disckit/hom.hpp"
#include "disckit/resultant.hpp"

namespace disckit {

namespace {

/* Discr(P), with the degree-0 convention Discr(c) = 1. */
Element discriminant_or_one(const UniPoly& p) {
    if (p.degree() == Degree(0)) return Element::one(p.coeff_ring());
    return discriminant(p);
}

std::size_t bit_length(const mpq_class& c) {
    return mpz_sizeinbase(c.get_num_mpz_t(), 2);
}

/* Ring map that kills `a` by substitution, or the reason it cannot. */
struct QuotientStep {
    std::optional<RingHom> hom;
    std::string reason;
};

QuotientStep quotient_by(const Element& a) {
    const Ring& ring = a.ring();
    if (a.is_constant()) {
        const mpq_class c = abs(a.constant_value());
        if (ring.scalar_kind() == ScalarKind::Integers && c < kMaxPrime &&
            is_prime(c.get_num().get_ui())) {
            const Ring fp = Ring::prime_field(c.get_num().get_ui());
            return {RingHom(ring, ring.with_scalar(fp)), {}};
        }
        return {std::nullopt, "quotient by " + to_string(a) + " leaves " + ring.to_string() +
                                  " (composite moduli are not supported)"};
    }
    const MultiPoly& p = *a.as_poly();
    const std::size_t n = ring.num_vars();
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<const Term*> with_v;
        for (const auto& t : p.terms())
            if (t.exps[v]) with_v.push_back(&t);
        if (with_v.size() != 1) continue;
        const Term& lin = *with_v.front();
        if (total_degree(lin.exps) != 1 || !ring.scalar_is_unit(lin.coeff)) continue;
        // a = c*v + r with r free of v: substitute v -> -r/c
        std::vector<std::string> vars = ring.variables();
        vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(v));
        const Ring target = ring.with_variables(vars);
        const mpq_class inv_c = *ring.scalar_try_div(1, lin.coeff);
        Element image = Element::zero(target);
        for (const auto& t : p.terms()) {
            if (&t == &lin) continue;
            Exponents e = t.exps;
            e.erase(e.begin() + static_cast<std::ptrdiff_t>(v));
            const mpq_class coeff = ring.neg(ring.mul(t.coeff, inv_c));
            if (target.is_polynomial())
                image += Element(MultiPoly::from_terms(target, {Term{std::move(e), coeff}}));
            else
                image += Element(target, coeff);
        }
        return {RingHom(ring, target, {{ring.variables()[v], image}}), {}};
    }
    return {std::nullopt, to_string(a) +
                              " is not substitution-eliminable (needs a unit multiple of "
                              "a variable that occurs nowhere else)"};
}

}  // namespace

const char* to_string(EtaleKind k) {
    switch (k) {
    case EtaleKind::Etale: return "etale";
    case EtaleKind::Ramified: return "ramified";
    case EtaleKind::Mixed: return "mixed";
    }
    return "mixed";
}

const char* to_string(StratumVerdict v) {
    switch (v) {
    case StratumVerdict::EtaleOfDegree: return "etale";
    case StratumVerdict::Ramified: return "ramified";
    case StratumVerdict::Unsupported: return "unsupported";
    }
    return "unsupported";
}

bool is_unit_after_inverting(const Element& x, std::span<const Element> inverted) {
    if (x.is_zero()) return false;
    if (x.is_unit()) return true;
    Element s = Element::one(x.ring());
    for (const auto& e : inverted) {
        if (!(e.ring() == x.ring()))
            throw Error(ErrorKind::Ring, "inverted element from a different ring");
        if (!e.is_zero()) s *= e;
    }
    if (s.is_unit()) return false;
    // In a UFD x | s^k for some k iff every prime factor of x divides s;
    // k never needs to exceed the number of prime factors of x.
    std::size_t bound = 1;
    if (auto p = x.as_poly()) {
        bound += *p->total_degree();
        mpq_class big = 0;
        for (const auto& t : p->terms()) big = std::max(big, mpq_class(abs(t.coeff)));
        bound += bit_length(big);
    } else {
        bound += bit_length(x.constant_value());
    }
    Element power = s;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (power.try_divide(x)) return true;
        power *= s;
    }
    return false;
}

EtaleVerdict etale_verdict(const UniPoly& p) {
    if (!p.is_monic())
        throw Error(ErrorKind::Parameter, "etale verdict needs a monic polynomial; use the "
                                          "stratification for " + print_poly(p));
    Element b = discriminant_or_one(p);
    EtaleKind kind = EtaleKind::Mixed;
    if (b.is_unit()) kind = EtaleKind::Etale;
    else if (b.is_nilpotent()) kind = EtaleKind::Ramified;
    return {kind, std::move(b)};
}

bool standard_etale_check(const UniPoly& p) {
    if (!p.is_monic()) return false;
    return discriminant_or_one(p).is_unit();
}

std::vector<Stratum> main1_strata(const UniPoly& p) {
    std::vector<Stratum> out;
    UniPoly poly = p;
    std::vector<Element> quotiented;
    auto stratum = [&](std::vector<Element> inv, std::vector<Element> quo, Element b,
                       StratumVerdict verdict, std::string reason = {}) {
        const int deg = poly.is_zero() ? -1 : static_cast<int>(poly.degree().value());
        out.push_back(Stratum{poly.coeff_ring(), std::move(inv), std::move(quo), poly, deg,
                              std::move(b), verdict, std::move(reason)});
    };
    while (true) {
        if (poly.is_zero()) {
            stratum({}, quotiented, Element::zero(poly.coeff_ring()), StratumVerdict::Unsupported,
                    "polynomial vanishes identically; the fibre is not finite");
            break;
        }
        const Element a = poly.leading();
        std::vector<Element> inv;
        if (!a.is_unit()) inv.push_back(a);
        Element b = discriminant_or_one(poly);
        if (is_unit_after_inverting(b, inv)) {
            stratum(inv, quotiented, b, StratumVerdict::EtaleOfDegree);
        } else if (b.is_zero()) {
            stratum(inv, quotiented, b, StratumVerdict::Ramified);
        } else {
            std::vector<Element> inv_b = inv;
            inv_b.push_back(b);
            std::vector<Element> quo_b = quotiented;
            quo_b.push_back(b);
            stratum(std::move(inv_b), quotiented, b, StratumVerdict::EtaleOfDegree);
            stratum(inv, std::move(quo_b), b, StratumVerdict::Ramified);
        }
        if (a.is_unit()) break;
        QuotientStep step = quotient_by(a);
        quotiented.push_back(a);
        if (!step.hom) {
            stratum({}, quotiented, Element::zero(poly.coeff_ring()),
                    StratumVerdict::Unsupported, step.reason);
            break;
        }
        poly = specialize(poly, *step.hom);
    }
    return out;
}

}  // namespace disckit
