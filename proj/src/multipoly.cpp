#include "disckit/multipoly.hpp"

#include <algorithm>
#include <map>

#include "disckit/error.hpp"

namespace disckit {

std::uint64_t total_degree(const Exponents& e) {
    std::uint64_t s = 0;
    for (auto x : e) s += x;
    return s;
}

int grlex_compare(const Exponents& a, const Exponents& b) {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return grlex_compare(a, b) > 0;
    }
};

}  // namespace

MultiPoly::MultiPoly(Ring ring) : ring_(std::move(ring)) {
    if (!ring_.is_polynomial())
        throw Error(ErrorKind::Ring,
                    "MultiPoly needs a polynomial ring, got " + ring_.to_string());
}

MultiPoly MultiPoly::constant(Ring ring, const mpq_class& c) {
    MultiPoly p(std::move(ring));
    mpq_class r = p.ring_.reduce(c);
    if (r != 0) p.terms_.push_back({Exponents(p.ring_.num_vars(), 0), r});
    return p;
}

MultiPoly MultiPoly::variable(Ring ring, std::size_t index) {
    MultiPoly p(std::move(ring));
    if (index >= p.ring_.num_vars())
        throw Error(ErrorKind::Parameter, "variable index out of range");
    Exponents e(p.ring_.num_vars(), 0);
    e[index] = 1;
    p.terms_.push_back({std::move(e), mpq_class(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(Ring ring, std::vector<Term> terms) {
    MultiPoly p(std::move(ring));
    std::map<Exponents, mpq_class, GrlexGreater> acc;
    for (auto& t : terms) {
        if (t.exps.size() != p.ring_.num_vars())
            throw Error(ErrorKind::Internal, "exponent vector length mismatch");
        auto [it, inserted] = acc.try_emplace(std::move(t.exps), p.ring_.reduce(t.coeff));
        if (!inserted) it->second = p.ring_.add(it->second, p.ring_.reduce(t.coeff));
    }
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({e, c});
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && disckit::total_degree(terms_[0].exps) == 0);
}

mpq_class MultiPoly::constant_term() const {
    if (!terms_.empty() && disckit::total_degree(terms_.back().exps) == 0)
        return terms_.back().coeff;
    return 0;
}

std::optional<std::uint64_t> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return disckit::total_degree(terms_.front().exps);
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exps[var]);
    return d;
}

void MultiPoly::check_same_ring(const MultiPoly& other) const {
    if (!(ring_ == other.ring_))
        throw Error(ErrorKind::Ring, "ring mismatch: " + ring_.to_string() +
                                         " vs " + other.ring_.to_string());
}

MultiPoly MultiPoly::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = ring_.neg(x.coeff);
    return MultiPoly(ring_, std::move(t));
}

namespace {

template <class Combine>
std::vector<Term> merge_terms(const Ring& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, Combine combine,
                              bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = -1;
        else if (j == b.size()) c = 1;
        else c = grlex_compare(a[i].exps, b[j].exps);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].exps, negate_b ? ring.neg(b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            mpq_class s = combine(a[i].coeff, b[j].coeff);
            if (s != 0) out.push_back({a[i].exps, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_ring(b);
    const Ring& r = a.ring_;
    return MultiPoly(r, merge_terms(
                            r, a.terms_, b.terms_,
                            [&](const mpq_class& x, const mpq_class& y) { return r.add(x, y); },
                            false));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_ring(b);
    const Ring& r = a.ring_;
    return MultiPoly(r, merge_terms(
                            r, a.terms_, b.terms_,
                            [&](const mpq_class& x, const mpq_class& y) { return r.sub(x, y); },
                            true));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_ring(b);
    const Ring& r = a.ring_;
    if (a.is_zero() || b.is_zero()) return MultiPoly(r);
    std::map<Exponents, mpq_class, GrlexGreater> acc;
    const std::size_t n = r.num_vars();
    Exponents e(n);
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            for (std::size_t k = 0; k < n; ++k) e[k] = x.exps[k] + y.exps[k];
            mpq_class c = r.mul(x.coeff, y.coeff);
            auto [it, inserted] = acc.try_emplace(e, c);
            if (!inserted) it->second = r.add(it->second, c);
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [ex, c] : acc)
        if (c != 0) out.push_back({ex, c});
    return MultiPoly(r, std::move(out));
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
    mpq_class rc = ring_.reduce(c);
    if (rc == 0) return MultiPoly(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = ring_.mul(x.coeff, rc);
    return MultiPoly(ring_, std::move(t));
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    MultiPoly result = constant(ring_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& b) const {
    check_same_ring(b);
    if (b.is_zero()) return std::nullopt;
    const std::size_t n = ring_.num_vars();
    const Term& lb = b.terms_.front();
    std::vector<Term> quotient;
    MultiPoly rem = *this;
    while (!rem.is_zero()) {
        const Term& lr = rem.terms_.front();
        Exponents e(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (lr.exps[k] < lb.exps[k]) return std::nullopt;
            e[k] = lr.exps[k] - lb.exps[k];
        }
        auto c = ring_.scalar_try_div(lr.coeff, lb.coeff);
        if (!c) return std::nullopt;
        MultiPoly step(ring_, {Term{e, *c}});
        quotient.push_back({std::move(e), *c});
        rem = rem - step * b;
    }
    return MultiPoly(ring_, std::move(quotient));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

}  // namespace disckit
