#include "disckit/element.hpp"

#include "disckit/error.hpp"

namespace disckit {

namespace {

std::variant<mpq_class, MultiPoly> make_value(const Ring& ring, const mpq_class& v) {
    if (ring.is_polynomial()) return MultiPoly::constant(ring, v);
    return ring.reduce(v);
}

}  // namespace

Element::Element(Ring ring, const mpq_class& value)
    : ring_(std::move(ring)), value_(make_value(ring_, value)) {}

Element::Element(MultiPoly poly) : ring_(poly.ring()), value_(std::move(poly)) {}

Element Element::variable(const Ring& ring, std::string_view name) {
    auto idx = ring.var_index(name);
    if (!idx)
        throw Error(ErrorKind::Ring, "unknown variable '" + std::string(name) +
                                         "' in " + ring.to_string());
    return Element(MultiPoly::variable(ring, *idx));
}

bool Element::is_zero() const {
    if (auto p = as_poly()) return p->is_zero();
    return std::get<mpq_class>(value_) == 0;
}

bool Element::is_one() const {
    return is_constant() && constant_value() == 1;
}

bool Element::is_constant() const {
    if (auto p = as_poly()) return p->is_constant();
    return true;
}

mpq_class Element::constant_value() const {
    if (auto p = as_poly()) {
        if (!p->is_constant())
            throw Error(ErrorKind::Internal, "constant_value of a non-constant element");
        return p->constant_term();
    }
    return std::get<mpq_class>(value_);
}

MultiPoly Element::to_poly() const {
    if (auto p = as_poly()) return *p;
    throw Error(ErrorKind::Ring, ring_.to_string() + " has no variables");
}

bool Element::is_unit() const {
    if (!is_constant()) return false;
    return ring_.scalar_is_unit(constant_value());
}

void Element::check_same_ring(const Element& other) const {
    if (!(ring_ == other.ring_))
        throw Error(ErrorKind::Ring, "ring mismatch: " + ring_.to_string() +
                                         " vs " + other.ring_.to_string());
}

Element Element::operator-() const {
    if (auto p = as_poly()) return Element(-*p);
    Element r = *this;
    r.value_ = ring_.neg(std::get<mpq_class>(value_));
    return r;
}

Element operator+(const Element& a, const Element& b) {
    a.check_same_ring(b);
    if (auto p = a.as_poly()) return Element(*p + *b.as_poly());
    Element r = a;
    r.value_ = a.ring_.add(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return r;
}

Element operator-(const Element& a, const Element& b) {
    a.check_same_ring(b);
    if (auto p = a.as_poly()) return Element(*p - *b.as_poly());
    Element r = a;
    r.value_ = a.ring_.sub(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return r;
}

Element operator*(const Element& a, const Element& b) {
    a.check_same_ring(b);
    if (auto p = a.as_poly()) return Element(*p * *b.as_poly());
    Element r = a;
    r.value_ = a.ring_.mul(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return r;
}

Element Element::pow(std::uint64_t e) const {
    Element result = one(ring_);
    Element base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::optional<Element> Element::try_divide(const Element& b) const {
    check_same_ring(b);
    if (auto p = as_poly()) {
        auto q = p->try_divide(*b.as_poly());
        if (!q) return std::nullopt;
        return Element(std::move(*q));
    }
    auto q = ring_.scalar_try_div(std::get<mpq_class>(value_), std::get<mpq_class>(b.value_));
    if (!q) return std::nullopt;
    return Element(ring_, *q);
}

Element Element::divide_exact(const Element& b) const {
    auto q = try_divide(b);
    if (!q) throw Error(ErrorKind::Internal, "inexact division in " + ring_.to_string());
    return std::move(*q);
}

bool operator==(const Element& a, const Element& b) {
    if (!(a.ring_ == b.ring_)) return false;
    if (auto p = a.as_poly()) return *p == *b.as_poly();
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

}  // namespace disckit
