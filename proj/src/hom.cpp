#include "disckit/hom.hpp"

#include "disckit/error.hpp"

namespace disckit {

namespace {

bool scalar_map_exists(const Ring& from, const Ring& to) {
    switch (from.scalar_kind()) {
    case ScalarKind::Integers: return true;
    case ScalarKind::Rationals: return to.scalar_kind() != ScalarKind::Integers;
    case ScalarKind::PrimeField:
        return to.scalar_kind() == ScalarKind::PrimeField &&
               to.characteristic() == from.characteristic();
    }
    return false;
}

}  // namespace

RingHom::RingHom(Ring source, Ring target, std::map<std::string, Element> images)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!scalar_map_exists(source_, target_))
        throw Error(ErrorKind::Ring, "no ring map " + source_.scalar_ring().to_string() +
                                         " -> " + target_.scalar_ring().to_string());
    for (const auto& [name, img] : images) {
        if (!source_.var_index(name))
            throw Error(ErrorKind::Ring, "'" + name + "' is not a variable of " +
                                             source_.to_string());
        if (!(img.ring() == target_))
            throw Error(ErrorKind::Ring, "image of '" + name + "' lies in " +
                                             img.ring().to_string() + ", expected " +
                                             target_.to_string());
    }
    for (const auto& v : source_.variables()) {
        auto it = images.find(v);
        if (it != images.end()) {
            images_.push_back(it->second);
        } else if (target_.var_index(v)) {
            images_.push_back(Element::variable(target_, v));
        } else {
            throw Error(ErrorKind::Ring, "variable '" + v + "' has no image in " +
                                             target_.to_string());
        }
    }
}

Element RingHom::map_scalar(const mpq_class& c) const { return Element(target_, c); }

Element RingHom::operator()(const Element& x) const {
    if (!(x.ring() == source_))
        throw Error(ErrorKind::Ring, "element of " + x.ring().to_string() +
                                         " passed to a map from " + source_.to_string());
    const MultiPoly* p = x.as_poly();
    if (!p) return map_scalar(x.constant_value());
    const std::size_t n = source_.num_vars();
    // powers[v][e] = images_[v]^e, grown on demand
    std::vector<std::vector<Element>> powers(n);
    auto power = [&](std::size_t v, std::uint32_t e) -> const Element& {
        auto& row = powers[v];
        if (row.empty()) row.push_back(Element::one(target_));
        while (row.size() <= e) row.push_back(row.back() * images_[v]);
        return row[e];
    };
    Element acc = Element::zero(target_);
    for (const auto& t : p->terms()) {
        Element term = map_scalar(t.coeff);
        if (term.is_zero()) continue;
        for (std::size_t v = 0; v < n; ++v)
            if (t.exps[v]) term *= power(v, t.exps[v]);
        acc += term;
    }
    return acc;
}

UniPoly specialize(const UniPoly& f, const RingHom& hom) {
    if (!(f.coeff_ring() == hom.source()))
        throw Error(ErrorKind::Ring, "specialize: polynomial over " +
                                         f.coeff_ring().to_string() +
                                         ", map from " + hom.source().to_string());
    std::vector<Element> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(hom(x));
    return UniPoly(hom.target(), f.var(), std::move(c));
}

}  // namespace disckit
