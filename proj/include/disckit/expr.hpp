#ifndef DISCKIT_EXPR_HPP_
#define DISCKIT_EXPR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "disckit/element.hpp"
#include "disckit/multipoly.hpp"
#include "disckit/ring.hpp"
#include "disckit/unipoly.hpp"

namespace disckit {

/*
 * Expression grammar (whitespace between tokens is ignored):
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := '-' factor | atom ('^' nat)*      -- '^' is right-associative
 *   atom   := nat | nat '/' nat | var | '(' expr ')'
 *
 * Implicit multiplication is rejected; exponents above kMaxExponent are
 * parse errors.
 */
inline constexpr std::uint64_t kMaxExponent = 1'000'000;

struct ExprAst {
    enum class Kind { Integer, Rational, Variable, Add, Sub, Neg, Mul, Pow };

    Kind kind;
    mpz_class num;             // Integer, Rational
    mpz_class den = 1;         // Rational
    std::string name;          // Variable
    std::uint64_t exponent = 0;  // Pow
    std::vector<ExprAst> children;
    std::size_t line = 1, column = 1;
};

ExprAst parse_expr(std::string_view src);

/* "ZZ", "QQ", "Fp(7)", "ZZ[b,c]", "QQ[u0,u1]", "Fp(5)[x,y]". */
Ring parse_ring(std::string_view src);

/* Element of `ring`; every variable must belong to the ring. */
Element parse_element(std::string_view src, const Ring& ring);
/* Polynomial in `var` with coefficients in `ring`. */
UniPoly parse_unipoly(std::string_view src, const Ring& ring, const std::string& var);

using ParsedPoly = std::variant<UniPoly, Element>;
ParsedPoly parse_poly(std::string_view src, const Ring& ring,
                      const std::optional<std::string>& main_var);

std::string print_scalar(const Ring& ring, const mpq_class& value);
std::string print_poly(const MultiPoly& p);
std::string print_poly(const UniPoly& p);
std::string to_string(const Element& x);

/* Source line of a positioned error with a caret under the column. */
std::string caret_diagnostic(std::string_view src, std::size_t line, std::size_t column);

}  // namespace disckit

#endif  // DISCKIT_EXPR_HPP_
