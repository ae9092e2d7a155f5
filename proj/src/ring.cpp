#include "disckit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "disckit/error.hpp"

namespace disckit {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

bool is_valid_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto head = static_cast<unsigned char>(name.front());
    if (!std::isalpha(head) && head != '_') return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

Ring Ring::integers() {
    static const Ring ring(
        std::make_shared<const Data>(Data{ScalarKind::Integers, 0, {}}));
    return ring;
}

Ring Ring::rationals() {
    static const Ring ring(
        std::make_shared<const Data>(Data{ScalarKind::Rationals, 0, {}}));
    return ring;
}

Ring Ring::prime_field(std::uint64_t p) {
    if (p >= kMaxPrime)
        throw Error(ErrorKind::Ring, "prime field modulus " +
                                         std::to_string(p) +
                                         " exceeds the supported bound 2^31");
    if (!is_prime(p))
        throw Error(ErrorKind::Ring,
                    "Fp(" + std::to_string(p) + "): modulus is not prime");
    return Ring(std::make_shared<const Data>(Data{ScalarKind::PrimeField, p, {}}));
}

Ring Ring::polynomial(const Ring& base, std::vector<std::string> vars) {
    if (base.is_polynomial())
        throw Error(ErrorKind::Ring,
                    "polynomial rings over polynomial rings are not "
                    "supported; flatten the variables of " +
                        base.to_string());
    if (vars.empty())
        throw Error(ErrorKind::Ring, "polynomial ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (!is_valid_identifier(v))
            throw Error(ErrorKind::Ring, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw Error(ErrorKind::Ring, "duplicate variable '" + v + "'");
    }
    return Ring(std::make_shared<const Data>(
        Data{base.data_->kind, base.data_->p, std::move(vars)}));
}

ScalarKind Ring::scalar_kind() const { return data_->kind; }
std::uint64_t Ring::characteristic() const { return data_->p; }
bool Ring::is_polynomial() const { return !data_->vars.empty(); }

Ring Ring::scalar_ring() const {
    switch (data_->kind) {
    case ScalarKind::Integers: return integers();
    case ScalarKind::Rationals: return rationals();
    case ScalarKind::PrimeField: break;
    }
    if (!is_polynomial()) return *this;
    return Ring(std::make_shared<const Data>(Data{ScalarKind::PrimeField, data_->p, {}}));
}

bool Ring::is_field() const {
    return !is_polynomial() && data_->kind != ScalarKind::Integers;
}

const std::vector<std::string>& Ring::variables() const { return data_->vars; }
std::size_t Ring::num_vars() const { return data_->vars.size(); }

std::optional<std::size_t> Ring::var_index(std::string_view name) const {
    const auto& vars = data_->vars;
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
}

Ring Ring::with_variables(std::vector<std::string> vars) const {
    if (vars.empty()) return scalar_ring();
    return polynomial(scalar_ring(), std::move(vars));
}

Ring Ring::with_scalar(const Ring& scalar) const {
    if (!is_polynomial()) return scalar.scalar_ring();
    return polynomial(scalar.scalar_ring(), data_->vars);
}

std::string Ring::to_string() const {
    std::string out;
    switch (data_->kind) {
    case ScalarKind::Integers: out = "ZZ"; break;
    case ScalarKind::Rationals: out = "QQ"; break;
    case ScalarKind::PrimeField: out = "Fp(" + std::to_string(data_->p) + ")"; break;
    }
    if (is_polynomial()) {
        out += '[';
        for (std::size_t i = 0; i < data_->vars.size(); ++i) {
            if (i) out += ',';
            out += data_->vars[i];
        }
        out += ']';
    }
    return out;
}

bool operator==(const Ring& a, const Ring& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->kind == b.data_->kind && a.data_->p == b.data_->p &&
           a.data_->vars == b.data_->vars;
}

mpq_class Ring::reduce(const mpq_class& x) const {
    switch (data_->kind) {
    case ScalarKind::Integers:
        if (x.get_den() != 1)
            throw Error(ErrorKind::Ring,
                        x.get_str() + " is not an element of " + to_string());
        return x;
    case ScalarKind::Rationals: {
        mpq_class r(x);
        r.canonicalize();
        return r;
    }
    case ScalarKind::PrimeField: break;
    }
    const mpz_class p(static_cast<unsigned long>(data_->p));
    mpz_class num, den;
    mpz_fdiv_r(num.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t());
    if (x.get_den() != 1) {
        if (mpz_invert(den.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()) == 0)
            throw Error(ErrorKind::Ring, "denominator of " + x.get_str() +
                                             " is not invertible in " +
                                             to_string());
        num *= den;
        mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    }
    return mpq_class(num);
}

mpq_class Ring::add(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a + b;
    if (data_->kind == ScalarKind::PrimeField && r >= mpq_class(static_cast<unsigned long>(data_->p)))
        r -= static_cast<unsigned long>(data_->p);
    return r;
}

mpq_class Ring::sub(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a - b;
    if (data_->kind == ScalarKind::PrimeField && r < 0)
        r += static_cast<unsigned long>(data_->p);
    return r;
}

mpq_class Ring::mul(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a * b;
    if (data_->kind != ScalarKind::PrimeField) return r;
    mpz_class z = r.get_num();
    mpz_fdiv_r_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(data_->p));
    return mpq_class(z);
}

mpq_class Ring::neg(const mpq_class& a) const {
    if (data_->kind == ScalarKind::PrimeField)
        return a == 0 ? a : mpq_class(static_cast<unsigned long>(data_->p)) - a;
    return -a;
}

bool Ring::scalar_is_unit(const mpq_class& a) const {
    if (data_->kind == ScalarKind::Integers) return a == 1 || a == -1;
    return a != 0;
}

std::optional<mpq_class> Ring::scalar_try_div(const mpq_class& a,
                                              const mpq_class& b) const {
    if (b == 0) return std::nullopt;
    switch (data_->kind) {
    case ScalarKind::Integers:
        if (!mpz_divisible_p(a.get_num_mpz_t(), b.get_num_mpz_t())) return std::nullopt;
        return mpq_class(mpz_class(a.get_num() / b.get_num()));
    case ScalarKind::Rationals:
        return mpq_class(a / b);
    case ScalarKind::PrimeField: break;
    }
    const mpz_class p(static_cast<unsigned long>(data_->p));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), b.get_num_mpz_t(), p.get_mpz_t());
    mpz_class r = a.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    return mpq_class(r);
}

}  // namespace disckit
