#ifndef DISCKIT_TESTS_SUPPORT_HPP_
#define DISCKIT_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "disckit/element.hpp"
#include "disckit/multipoly.hpp"
#include "disckit/unipoly.hpp"

namespace disckit::gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/* Random scalar of the ring's scalar kind; rationals get small denominators. */
inline mpq_class random_scalar(Rng& rng, const Ring& ring, long bound = 9) {
    mpq_class c(uniform(rng, -bound, bound));
    if (ring.scalar_kind() == ScalarKind::Rationals) c /= uniform(rng, 1, 4);
    return ring.reduce(c);
}

inline Element random_element(Rng& rng, const Ring& ring, int max_terms = 3,
                              int max_degree = 2, long bound = 9) {
    if (!ring.is_polynomial()) return Element(ring, random_scalar(rng, ring, bound));
    std::vector<Term> terms;
    const int n = static_cast<int>(uniform(rng, 0, max_terms));
    for (int k = 0; k < n; ++k) {
        Exponents e(ring.num_vars());
        for (auto& x : e) x = static_cast<std::uint32_t>(uniform(rng, 0, max_degree));
        terms.push_back({e, random_scalar(rng, ring, bound)});
    }
    return Element(MultiPoly::from_terms(ring, std::move(terms)));
}

/* Degree exactly `degree` (nonzero leading coefficient). */
inline UniPoly random_unipoly(Rng& rng, const Ring& ring, int degree, bool monic = false,
                              const std::string& var = "t") {
    std::vector<Element> c;
    for (int k = 0; k < degree; ++k) c.push_back(random_element(rng, ring));
    Element lead = monic ? Element::one(ring) : random_element(rng, ring);
    while (lead.is_zero()) lead = random_element(rng, ring);
    c.push_back(lead);
    return UniPoly(ring, var, c);
}

/* lead * prod (t - r) */
inline UniPoly from_roots(const Element& lead, const std::vector<Element>& roots,
                          const std::string& var = "t") {
    const Ring& ring = lead.ring();
    UniPoly f(ring, var, {lead});
    for (const auto& r : roots) f = f * UniPoly(ring, var, {-r, Element::one(ring)});
    return f;
}

}  // namespace disckit::gen

#endif  // DISCKIT_TESTS_SUPPORT_HPP_
