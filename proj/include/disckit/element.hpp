#ifndef DISCKIT_ELEMENT_HPP_
#define DISCKIT_ELEMENT_HPP_

#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "disckit/multipoly.hpp"
#include "disckit/ring.hpp"

namespace disckit {

/*
 * An element of a supported ring: a scalar (integer, reduced rational or
 * residue) for ZZ/QQ/Fp, a MultiPoly for polynomial rings. Mixing rings
 * in arithmetic raises ErrorKind::Ring.
 */
class Element {
  public:
    Element(Ring ring, const mpq_class& value);
    Element(Ring ring, long value) : Element(std::move(ring), mpq_class(value)) {}
    explicit Element(MultiPoly poly);

    static Element zero(const Ring& ring) { return Element(ring, 0L); }
    static Element one(const Ring& ring) { return Element(ring, 1L); }
    static Element variable(const Ring& ring, std::string_view name);

    const Ring& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_constant() const;
    /* Scalar value of a constant element. */
    mpq_class constant_value() const;
    /* nullptr when the ring has no variables. */
    const MultiPoly* as_poly() const { return std::get_if<MultiPoly>(&value_); }
    /* Promote to a MultiPoly (polynomial rings only). */
    MultiPoly to_poly() const;

    /* Unit: ±1 in ZZ, nonzero in a field, a constant unit in R[vars]. */
    bool is_unit() const;
    /* All supported rings are integral domains. */
    bool is_nilpotent() const { return is_zero(); }

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }
    Element& operator*=(const Element& b) { return *this = *this * b; }
    Element pow(std::uint64_t e) const;

    std::optional<Element> try_divide(const Element& b) const;
    /* Throws ErrorKind::Internal when b does not divide *this. */
    Element divide_exact(const Element& b) const;

    friend bool operator==(const Element& a, const Element& b);

  private:
    void check_same_ring(const Element& other) const;

    Ring ring_;
    std::variant<mpq_class, MultiPoly> value_;
};

}  // namespace disckit

#endif  // DISCKIT_ELEMENT_HPP_
