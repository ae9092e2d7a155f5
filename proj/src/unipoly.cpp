#include "disckit/unipoly.hpp"

#include "disckit/error.hpp"

namespace disckit {

std::size_t Degree::value() const {
    if (!value_) throw Error(ErrorKind::Parameter, "degree of the zero polynomial");
    return *value_;
}

std::string to_string(const Degree& d) {
    return d.is_minus_infinity() ? "-inf" : std::to_string(d.value());
}

UniPoly::UniPoly(Ring coeff_ring, std::string var, std::vector<Element> coeffs)
    : ring_(std::move(coeff_ring)), var_(std::move(var)), coeffs_(std::move(coeffs)) {
    if (!is_valid_identifier(var_))
        throw Error(ErrorKind::Parameter, "invalid variable name '" + var_ + "'");
    if (ring_.var_index(var_))
        throw Error(ErrorKind::Ring, "main variable '" + var_ +
                                         "' clashes with a variable of " +
                                         ring_.to_string());
    for (const auto& c : coeffs_)
        if (!(c.ring() == ring_))
            throw Error(ErrorKind::Ring, "coefficient ring mismatch: " +
                                             c.ring().to_string() + " vs " +
                                             ring_.to_string());
    trim();
}

UniPoly UniPoly::zero(Ring coeff_ring, std::string var) {
    return UniPoly(std::move(coeff_ring), std::move(var));
}

UniPoly UniPoly::monomial(const Element& c, std::size_t power, std::string var) {
    std::vector<Element> coeffs(power + 1, Element::zero(c.ring()));
    coeffs[power] = c;
    return UniPoly(c.ring(), std::move(var), std::move(coeffs));
}

UniPoly UniPoly::from_ints(Ring coeff_ring, std::string var,
                           const std::vector<long>& ascending) {
    std::vector<Element> coeffs;
    coeffs.reserve(ascending.size());
    for (long v : ascending) coeffs.emplace_back(coeff_ring, v);
    return UniPoly(std::move(coeff_ring), std::move(var), std::move(coeffs));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree UniPoly::degree() const {
    if (coeffs_.empty()) return Degree::minus_infinity();
    return Degree(coeffs_.size() - 1);
}

Element UniPoly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return Element::zero(ring_);
}

const Element& UniPoly::leading() const {
    if (coeffs_.empty())
        throw Error(ErrorKind::Parameter, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void UniPoly::check_compatible(const UniPoly& other) const {
    if (!(ring_ == other.ring_) || var_ != other.var_)
        throw Error(ErrorKind::Ring, "polynomial mismatch: " + ring_.to_string() + "[" +
                                         var_ + "] vs " + other.ring_.to_string() +
                                         "[" + other.var_ + "]");
}

UniPoly UniPoly::operator-() const {
    std::vector<Element> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return UniPoly(ring_, var_, std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    a.check_compatible(b);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Element> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return UniPoly(a.ring_, a.var_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    a.check_compatible(b);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Element> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return UniPoly(a.ring_, a.var_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.ring_, a.var_);
    std::vector<Element> c(a.coeffs_.size() + b.coeffs_.size() - 1, Element::zero(a.ring_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(a.ring_, a.var_, std::move(c));
}

UniPoly UniPoly::scaled(const Element& k) const {
    std::vector<Element> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * k);
    return UniPoly(ring_, var_, std::move(c));
}

UniPoly UniPoly::pow(std::uint64_t e) const {
    UniPoly result(ring_, var_, {Element::one(ring_)});
    UniPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Element UniPoly::evaluate(const Element& x) const {
    Element acc = Element::zero(ring_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.ring_ == b.ring_ && a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
}

UniPoly derivative(const UniPoly& f) {
    std::vector<Element> c;
    const auto& fc = f.coeffs();
    for (std::size_t i = 1; i < fc.size(); ++i)
        c.push_back(fc[i] * Element(f.coeff_ring(), static_cast<long>(i)));
    return UniPoly(f.coeff_ring(), f.var(), std::move(c));
}

UniPoly derivative(const UniPoly& f, std::size_t order) {
    UniPoly g = f;
    for (std::size_t k = 0; k < order && !g.is_zero(); ++k) g = derivative(g);
    return g;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::Parameter, "polynomial division by zero");
    const Ring& ring = f.coeff_ring();
    const Element& lead = g.leading();
    if (!ring.is_field() && !lead.is_unit())
        throw Error(ErrorKind::Ring, "division needs a unit leading coefficient over " +
                                         ring.to_string());
    const Element lead_inv = Element::one(ring).divide_exact(lead);
    std::vector<Element> rem = f.coeffs();
    const std::size_t dg = g.coeffs().size() - 1;
    std::vector<Element> quot;
    if (rem.size() > dg) quot.assign(rem.size() - dg, Element::zero(ring));
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k].is_zero()) continue;
        Element q = rem[k] * lead_inv;
        quot[k - dg] = q;
        for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= q * g.coeffs()[i];
    }
    return {UniPoly(ring, f.var(), std::move(quot)), UniPoly(ring, f.var(), std::move(rem))};
}

UniPoly make_monic(const UniPoly& f) {
    if (f.is_zero()) return f;
    if (!f.coeff_ring().is_field() && !f.leading().is_unit())
        throw Error(ErrorKind::Ring, "cannot make monic over " + f.coeff_ring().to_string());
    return f.scaled(Element::one(f.coeff_ring()).divide_exact(f.leading()));
}

UniPoly unipoly_gcd(const UniPoly& f, const UniPoly& g) {
    if (!f.coeff_ring().is_field())
        throw Error(ErrorKind::Ring, "gcd needs a field of coefficients, got " +
                                         f.coeff_ring().to_string());
    if (!(f.coeff_ring() == g.coeff_ring()) || f.var() != g.var())
        throw Error(ErrorKind::Ring, "gcd of polynomials over different rings");
    UniPoly a = f, b = g;
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

}  // namespace disckit
