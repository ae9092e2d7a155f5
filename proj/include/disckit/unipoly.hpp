#ifndef DISCKIT_UNIPOLY_HPP_
#define DISCKIT_UNIPOLY_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disckit/element.hpp"
#include "disckit/ring.hpp"

namespace disckit {

/* Polynomial degree; the zero polynomial has degree minus infinity. */
class Degree {
  public:
    constexpr Degree(std::size_t d) : value_(d) {}
    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_minus_infinity() const { return !value_.has_value(); }
    std::size_t value() const;

    constexpr std::strong_ordering operator<=>(const Degree& o) const {
        if (!value_ || !o.value_) return value_.has_value() <=> o.value_.has_value();
        return *value_ <=> *o.value_;
    }
    constexpr bool operator==(const Degree&) const = default;

  private:
    constexpr Degree() = default;
    std::optional<std::size_t> value_;
};

std::string to_string(const Degree& d);

/*
 * Dense univariate polynomial in `var` over `coeff_ring`; coefficients in
 * ascending degree, highest stored coefficient nonzero. The main variable
 * must differ from the coefficient ring's variables.
 */
class UniPoly {
  public:
    UniPoly(Ring coeff_ring, std::string var, std::vector<Element> coeffs = {});

    static UniPoly zero(Ring coeff_ring, std::string var);
    static UniPoly monomial(const Element& c, std::size_t power, std::string var);
    static UniPoly from_ints(Ring coeff_ring, std::string var,
                             const std::vector<long>& ascending);

    const Ring& coeff_ring() const { return ring_; }
    const std::string& var() const { return var_; }
    const std::vector<Element>& coeffs() const { return coeffs_; }

    Degree degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    /* Coefficient of var^i (zero past the degree). */
    Element coeff(std::size_t i) const;
    /* Throws on the zero polynomial. */
    const Element& leading() const;
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Element& c) const;
    UniPoly pow(std::uint64_t e) const;

    Element evaluate(const Element& x) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b);

  private:
    void check_compatible(const UniPoly& other) const;
    void trim();

    Ring ring_;
    std::string var_;
    std::vector<Element> coeffs_;
};

/* Formal derivative: coefficient i of the result is (i+1) * coeff(i+1). */
UniPoly derivative(const UniPoly& f);
/* j-th formal derivative. */
UniPoly derivative(const UniPoly& f, std::size_t order);

/* Division with remainder; needs a field or a unit leading coefficient of g. */
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
/* Scale to leading coefficient 1 (field coefficients only). */
UniPoly make_monic(const UniPoly& f);
/* Monic gcd by Euclid's algorithm; coefficient ring must be QQ or Fp. */
UniPoly unipoly_gcd(const UniPoly& f, const UniPoly& g);

}  // namespace disckit

#endif  // DISCKIT_UNIPOLY_HPP_
