#include "disckit/resultant.hpp"

#include <utility>

#include "disckit/error.hpp"

namespace disckit {

Matrix::Matrix(Ring ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), data_(n * n, Element::zero(ring_)) {}

Matrix sylvester_matrix(const UniPoly& f, const UniPoly& g, SylvesterSpec spec) {
    if (!(f.coeff_ring() == g.coeff_ring()) || f.var() != g.var())
        throw Error(ErrorKind::Ring, "resultant of polynomials over different rings");
    if (f.degree() > Degree(spec.m))
        throw Error(ErrorKind::Parameter, "declared degree m=" + std::to_string(spec.m) +
                                              " is below deg F=" + to_string(f.degree()));
    if (g.degree() > Degree(spec.n))
        throw Error(ErrorKind::Parameter, "declared degree n=" + std::to_string(spec.n) +
                                              " is below deg G=" + to_string(g.degree()));
    const std::size_t m = spec.m, n = spec.n;
    Matrix s(f.coeff_ring(), m + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s.at(i, i + k) = f.coeff(m - k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s.at(n + i, i + k) = g.coeff(n - k);
    return s;
}

Element det_fraction_free(Matrix a) {
    const std::size_t n = a.size();
    const Ring ring = a.ring();
    if (n == 0) return Element::one(ring);
    bool negate = false;
    Element prev = Element::one(ring);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a.at(r, k).is_zero()) ++r;
            // The trailing column vanishes; over an integral domain det = 0.
            if (r == n) return Element::zero(ring);
            for (std::size_t c = k; c < n; ++c) std::swap(a.at(k, c), a.at(r, c));
            negate = !negate;
        }
        const Element& pivot = a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Element v = a.at(i, j) * pivot - a.at(i, k) * a.at(k, j);
                a.at(i, j) = prev.is_one() ? std::move(v) : v.divide_exact(prev);
            }
            a.at(i, k) = Element::zero(ring);
        }
        prev = pivot;
    }
    Element det = a.at(n - 1, n - 1);
    return negate ? -det : det;
}

namespace {

Element cofactor_rec(const Matrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t n = m.size();
    if (row == n) return Element::one(m.ring());
    Element acc = Element::zero(m.ring());
    bool negative = false;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const std::size_t c = cols[idx];
        if (!m.at(row, c).is_zero()) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
            Element minor = cofactor_rec(m, cols, row + 1);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
            Element term = m.at(row, c) * minor;
            acc = negative ? acc - term : acc + term;
        }
        negative = !negative;
    }
    return acc;
}

}  // namespace

Element det_cofactor(const Matrix& m) {
    std::vector<std::size_t> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return cofactor_rec(m, cols, 0);
}

Element resultant(const UniPoly& f, const UniPoly& g, std::optional<SylvesterSpec> spec) {
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorKind::Parameter, "resultant of the zero polynomial");
    SylvesterSpec s = spec ? *spec : SylvesterSpec{f.degree().value(), g.degree().value()};
    return det_fraction_free(sylvester_matrix(f, g, s));
}

Element discriminant(const UniPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::Parameter, "discriminant of the zero polynomial");
    const std::size_t d = p.degree().value();
    if (d == 0)
        throw Error(ErrorKind::Parameter, "discriminant needs degree >= 1");
    return det_fraction_free(sylvester_matrix(p, derivative(p), {d, d - 1}));
}

const char* to_string(DiscriminantClass c) {
    switch (c) {
    case DiscriminantClass::Separable: return "separable";
    case DiscriminantClass::Inseparable: return "inseparable";
    case DiscriminantClass::Neither: return "neither";
    }
    return "neither";
}

Classification classify_discriminant(const UniPoly& p) {
    if (!p.is_monic())
        throw Error(ErrorKind::Parameter, "classification needs a monic polynomial");
    Element b = discriminant(p);
    DiscriminantClass kind = DiscriminantClass::Neither;
    if (b.is_unit()) kind = DiscriminantClass::Separable;
    else if (b.is_nilpotent()) kind = DiscriminantClass::Inseparable;
    return {kind, std::move(b)};
}

}  // namespace disckit
