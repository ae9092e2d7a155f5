#ifndef DISCKIT_MULTIPOLY_HPP_
#define DISCKIT_MULTIPOLY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "disckit/ring.hpp"

namespace disckit {

using Exponents = std::vector<std::uint32_t>;

/* Graded lexicographic comparison on the declared variable order:
 * negative when a < b, zero when equal, positive when a > b. */
int grlex_compare(const Exponents& a, const Exponents& b);
std::uint64_t total_degree(const Exponents& e);

struct Term {
    Exponents exps;
    mpq_class coeff;
};

/*
 * Sparse polynomial over the scalar ring of a PolyRing descriptor.
 * Terms are kept sorted by descending grlex order with no zero
 * coefficients, so structural equality is polynomial equality.
 */
class MultiPoly {
  public:
    explicit MultiPoly(Ring ring);
    static MultiPoly constant(Ring ring, const mpq_class& c);
    static MultiPoly variable(Ring ring, std::size_t index);
    static MultiPoly from_terms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /* Coefficient of the monomial 1. */
    mpq_class constant_term() const;
    /* nullopt for the zero polynomial. */
    std::optional<std::uint64_t> total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    bool is_monomial() const { return terms_.size() == 1; }

    const Term& leading_term() const { return terms_.front(); }

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const mpq_class& c) const;
    MultiPoly pow(std::uint64_t e) const;

    /* Exact quotient a / b, or nullopt when b does not divide a. */
    std::optional<MultiPoly> try_divide(const MultiPoly& b) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  private:
    MultiPoly(Ring ring, std::vector<Term> sorted_terms)
        : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
    void check_same_ring(const MultiPoly& other) const;

    Ring ring_;
    std::vector<Term> terms_;
};

}  // namespace disckit

#endif  // DISCKIT_MULTIPOLY_HPP_
