#ifndef DISCKIT_RESULTANT_HPP_
#define DISCKIT_RESULTANT_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "disckit/element.hpp"
#include "disckit/unipoly.hpp"

namespace disckit {

/* Declared degrees (m, n) of the Sylvester matrix; m >= deg F, n >= deg G.
 * Padding with zero leading coefficients is allowed. */
struct SylvesterSpec {
    std::size_t m;
    std::size_t n;
};

/* Dense square matrix of ring elements, row major. */
class Matrix {
  public:
    Matrix(Ring ring, std::size_t n);

    const Ring& ring() const { return ring_; }
    std::size_t size() const { return n_; }
    Element& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const Element& at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    Ring ring_;
    std::size_t n_;
    std::vector<Element> data_;
};

/*
 * Rows 0..n-1 hold a_m .. a_0 shifted right by the row index; rows
 * n..n+m-1 hold b_n .. b_0 likewise. This is the layout with F-rows above
 * G-rows, and it fixes every sign in this library.
 */
Matrix sylvester_matrix(const UniPoly& f, const UniPoly& g, SylvesterSpec spec);

/* Fraction-free (Bareiss) elimination with lowest-index nonzero pivots. */
Element det_fraction_free(Matrix m);
/* Laplace expansion along the first row; exponential, for small matrices. */
Element det_cofactor(const Matrix& m);

/* Res_{m,n}(F, G); the default spec uses the actual degrees. */
Element resultant(const UniPoly& f, const UniPoly& g,
                  std::optional<SylvesterSpec> spec = std::nullopt);

/* Res_{d,d-1}(P, P') with d = deg P >= 1. The leading coefficient may be
 * any nonzero element; no content or sign normalisation is applied. */
Element discriminant(const UniPoly& p);

enum class DiscriminantClass { Separable, Inseparable, Neither };

struct Classification {
    DiscriminantClass kind;
    Element discriminant;
};

const char* to_string(DiscriminantClass c);

/* Separable if Discr(P) is a unit, inseparable if nilpotent. P monic. */
Classification classify_discriminant(const UniPoly& p);

}  // namespace disckit

#endif  // DISCKIT_RESULTANT_HPP_
