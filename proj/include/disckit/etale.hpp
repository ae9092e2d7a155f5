#ifndef DISCKIT_ETALE_HPP_
#define DISCKIT_ETALE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "disckit/element.hpp"
#include "disckit/unipoly.hpp"

namespace disckit {

enum class EtaleKind { Etale, Ramified, Mixed };

/* Verdict for Spec(A[t]/P) -> Spec(A). Mixed carries b = Discr(P): the map
 * is etale over D(b) and ramified over V(b). */
struct EtaleVerdict {
    EtaleKind kind;
    Element discriminant;
};

const char* to_string(EtaleKind k);

/* P must be monic. */
EtaleVerdict etale_verdict(const UniPoly& p);

/* Monic with a unit discriminant. */
bool standard_etale_check(const UniPoly& p);

/* x is a unit of A[1/s_1, .., 1/s_k]: x divides a power of s_1 * .. * s_k. */
bool is_unit_after_inverting(const Element& x, std::span<const Element> inverted);

enum class StratumVerdict { EtaleOfDegree, Ramified, Unsupported };

/*
 * One piece of the stratification of Spec(A). The piece is the locus where
 * all `quotiented` elements vanish (each applied in the ring it is listed
 * in, in order) and all `inverted` elements are units. `ring` is A modulo
 * the quotiented elements, with variables eliminated by substitution.
 */
struct Stratum {
    Ring ring;
    std::vector<Element> inverted;
    std::vector<Element> quotiented;
    UniPoly residual_poly;
    int residual_degree;  // -1 when the residual polynomial vanishes
    Element discriminant;
    StratumVerdict verdict;
    std::string reason;  // Unsupported only
};

const char* to_string(StratumVerdict v);

/*
 * Split Spec(A) by the leading coefficient a: on D(a) use b = Discr(P) to
 * split into an etale and a ramified piece; on V(a) drop the leading term
 * and recurse. Quotients are carried out by substitution only (a constant,
 * or c*v + r with c a unit and v absent from r); anything else ends the
 * chain with an Unsupported stratum that names the element.
 */
std::vector<Stratum> main1_strata(const UniPoly& p);

}  // namespace disckit

#endif  // DISCKIT_ETALE_HPP_
