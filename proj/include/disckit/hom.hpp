#ifndef DISCKIT_HOM_HPP_
#define DISCKIT_HOM_HPP_

#include <map>
#include <string>

#include "disckit/element.hpp"
#include "disckit/ring.hpp"
#include "disckit/unipoly.hpp"

namespace disckit {

/*
 * Ring homomorphism source -> target given by the canonical map on scalars
 * (ZZ -> anything, QQ -> QQ or Fp, Fp -> Fp) and images of the source
 * variables. A source variable without an explicit image goes to the
 * target variable of the same name.
 */
class RingHom {
  public:
    RingHom(Ring source, Ring target, std::map<std::string, Element> images = {});

    const Ring& source() const { return source_; }
    const Ring& target() const { return target_; }

    Element operator()(const Element& x) const;
    Element map_scalar(const mpq_class& c) const;

  private:
    Ring source_;
    Ring target_;
    std::vector<Element> images_;  // indexed by source variable
};

/* Coefficientwise application of hom; the degree may drop. */
UniPoly specialize(const UniPoly& f, const RingHom& hom);

}  // namespace disckit

#endif  // DISCKIT_HOM_HPP_
