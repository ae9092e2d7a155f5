#ifndef DISCKIT_RING_HPP_
#define DISCKIT_RING_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace disckit {

enum class ScalarKind { Integers, Rationals, PrimeField };

/* Largest supported prime modulus (exclusive). */
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

bool is_prime(std::uint64_t n);

/*
 * Descriptor of a coefficient ring: ZZ, QQ, Fp(p), or a polynomial ring
 * over one of those three. A polynomial ring over a polynomial ring cannot
 * be built; flatten the variables instead.
 *
 * Descriptors are cheap to copy (shared immutable payload) and compare by
 * value.
 */
class Ring {
  public:
    static Ring integers();
    static Ring rationals();
    static Ring prime_field(std::uint64_t p);
    static Ring polynomial(const Ring& base, std::vector<std::string> vars);

    ScalarKind scalar_kind() const;
    /* 0 for ZZ and QQ, p for Fp(p). */
    std::uint64_t characteristic() const;
    bool is_polynomial() const;
    /* ZZ, QQ or Fp(p) without variables. */
    Ring scalar_ring() const;
    bool is_field() const;

    const std::vector<std::string>& variables() const;
    std::size_t num_vars() const;
    std::optional<std::size_t> var_index(std::string_view name) const;

    /* Same scalar ring, variables `vars` (empty gives the scalar ring). */
    Ring with_variables(std::vector<std::string> vars) const;
    /* Same variables over a different scalar ring. */
    Ring with_scalar(const Ring& scalar) const;

    std::string to_string() const;

    friend bool operator==(const Ring& a, const Ring& b);

    // Scalar arithmetic of the base ring. Values are kept as mpq_class:
    // integers with denominator 1, residues in [0, p).
    mpq_class reduce(const mpq_class& x) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    bool scalar_is_unit(const mpq_class& a) const;
    /* a / b when the quotient exists in the scalar ring. */
    std::optional<mpq_class> scalar_try_div(const mpq_class& a,
                                            const mpq_class& b) const;

  private:
    struct Data {
        ScalarKind kind;
        std::uint64_t p;
        std::vector<std::string> vars;
    };
    explicit Ring(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

bool is_valid_identifier(std::string_view name);

}  // namespace disckit

#endif  // DISCKIT_RING_HPP_
