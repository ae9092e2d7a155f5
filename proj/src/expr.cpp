#include "disckit/expr.hpp"

#include <cctype>

#include "disckit/error.hpp"

namespace disckit {

namespace {

enum class Tok { Nat, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        std::size_t i = 0;
        while (true) {
            while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
            if (i == src_.size()) {
                out.push_back({Tok::End, "", i});
                return out;
            }
            const char c = src_[i];
            const auto uc = static_cast<unsigned char>(c);
            if (std::isdigit(uc)) {
                std::size_t j = i;
                while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
                out.push_back({Tok::Nat, std::string(src_.substr(i, j - i)), i});
                i = j;
            } else if (std::isalpha(uc) || c == '_') {
                std::size_t j = i;
                while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) ||
                                           src_[j] == '_'))
                    ++j;
                out.push_back({Tok::Ident, std::string(src_.substr(i, j - i)), i});
                i = j;
            } else {
                Tok k;
                switch (c) {
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '^': k = Tok::Caret; break;
                case '/': k = Tok::Slash; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                default:
                    throw_at(i, "unexpected character '" + std::string(1, c) + "'");
                }
                out.push_back({k, std::string(1, c), i});
                ++i;
            }
        }
    }

    [[noreturn]] void throw_at(std::size_t offset, const std::string& msg) const {
        auto [line, col] = position(offset);
        throw Error(ErrorKind::Parse,
                    msg + " at " + std::to_string(line) + ":" + std::to_string(col), line, col);
    }

    std::pair<std::size_t, std::size_t> position(std::size_t offset) const {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < offset && k < src_.size(); ++k) {
            if (src_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

  private:
    std::string_view src_;
};

const char* describe(const Token& t) {
    switch (t.kind) {
    case Tok::Nat: return "number";
    case Tok::Ident: return "identifier";
    case Tok::End: return "end of input";
    default: return "token";
    }
}

class Parser {
  public:
    explicit Parser(std::string_view src) : lexer_(src), toks_(lexer_.run()) {}

    ExprAst parse() {
        ExprAst e = expr();
        if (peek().kind != Tok::End) fail_unexpected(peek());
        return e;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail_unexpected(const Token& t) {
        std::string what = "unexpected ";
        what += describe(t);
        if (t.kind != Tok::End) what += " '" + t.text + "'";
        if (t.kind == Tok::Ident || t.kind == Tok::Nat || t.kind == Tok::LParen)
            what += " (implicit multiplication is not supported)";
        lexer_.throw_at(t.offset, what);
    }

    ExprAst node(ExprAst::Kind k, const Token& at) {
        ExprAst n{k, {}, 1, {}, 0, {}, 1, 1};
        auto [line, col] = lexer_.position(at.offset);
        n.line = line;
        n.column = col;
        return n;
    }

    ExprAst binary(ExprAst::Kind k, const Token& at, ExprAst lhs, ExprAst rhs) {
        ExprAst n = node(k, at);
        n.children.push_back(std::move(lhs));
        n.children.push_back(std::move(rhs));
        return n;
    }

    ExprAst expr() {
        ExprAst lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& op = next();
            ExprAst rhs = term();
            lhs = binary(op.kind == Tok::Plus ? ExprAst::Kind::Add : ExprAst::Kind::Sub, op,
                         std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprAst term() {
        ExprAst lhs = factor();
        while (peek().kind == Tok::Star) {
            const Token& op = next();
            ExprAst rhs = factor();
            lhs = binary(ExprAst::Kind::Mul, op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprAst factor() {
        if (peek().kind == Tok::Minus) {
            const Token& op = next();
            ExprAst n = node(ExprAst::Kind::Neg, op);
            n.children.push_back(factor());
            return n;
        }
        ExprAst base = atom();
        if (peek().kind != Tok::Caret) return base;
        const Token& caret = peek();
        std::vector<std::pair<mpz_class, const Token*>> exps;
        while (peek().kind == Tok::Caret) {
            next();
            const Token& e = next();
            if (e.kind != Tok::Nat) {
                if (e.kind == Tok::Minus)
                    lexer_.throw_at(e.offset, "exponents must be nonnegative integers");
                fail_unexpected(e);
            }
            exps.emplace_back(mpz_class(e.text), &e);
        }
        // a^b^c == a^(b^c)
        mpz_class value = exps.back().first;
        for (std::size_t k = exps.size() - 1; k-- > 0;) {
            if (value > kMaxExponent)
                lexer_.throw_at(exps[k + 1].second->offset, "exponent exceeds 10^6");
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), exps[k].first.get_mpz_t(), value.get_ui());
            value = p;
            if (value > kMaxExponent) lexer_.throw_at(exps[k].second->offset, "exponent exceeds 10^6");
        }
        if (value > kMaxExponent) lexer_.throw_at(exps.front().second->offset, "exponent exceeds 10^6");
        ExprAst n = node(ExprAst::Kind::Pow, caret);
        n.exponent = value.get_ui();
        n.children.push_back(std::move(base));
        return n;
    }

    ExprAst atom() {
        const Token& t = next();
        switch (t.kind) {
        case Tok::Nat: {
            if (peek().kind == Tok::Slash) {
                next();
                const Token& d = next();
                if (d.kind != Tok::Nat)
                    lexer_.throw_at(d.offset, "expected a natural number after '/'");
                ExprAst n = node(ExprAst::Kind::Rational, t);
                n.num = mpz_class(t.text);
                n.den = mpz_class(d.text);
                if (n.den == 0) lexer_.throw_at(d.offset, "division by zero in rational literal");
                return n;
            }
            ExprAst n = node(ExprAst::Kind::Integer, t);
            n.num = mpz_class(t.text);
            return n;
        }
        case Tok::Ident: {
            ExprAst n = node(ExprAst::Kind::Variable, t);
            n.name = t.text;
            return n;
        }
        case Tok::LParen: {
            ExprAst inner = expr();
            const Token& close = next();
            if (close.kind != Tok::RParen) {
                if (close.kind == Tok::End) lexer_.throw_at(close.offset, "missing ')'");
                fail_unexpected(close);
            }
            return inner;
        }
        default:
            fail_unexpected(t);
        }
    }

    Lexer lexer_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

[[noreturn]] void throw_node(const ExprAst& n, ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg + " at " + std::to_string(n.line) + ":" + std::to_string(n.column),
                n.line, n.column);
}

/* Folds an AST into T; `leaf` handles literals and variables. */
template <class T, class Leaf>
T fold(const ExprAst& n, const Leaf& leaf) {
    using K = ExprAst::Kind;
    switch (n.kind) {
    case K::Integer:
    case K::Rational:
    case K::Variable: return leaf(n);
    case K::Add: return fold<T>(n.children[0], leaf) + fold<T>(n.children[1], leaf);
    case K::Sub: return fold<T>(n.children[0], leaf) - fold<T>(n.children[1], leaf);
    case K::Mul: return fold<T>(n.children[0], leaf) * fold<T>(n.children[1], leaf);
    case K::Neg: return -fold<T>(n.children[0], leaf);
    case K::Pow: return fold<T>(n.children[0], leaf).pow(n.exponent);
    }
    throw Error(ErrorKind::Internal, "bad expression node");
}

Element literal(const ExprAst& n, const Ring& ring) {
    mpq_class v(n.num, n.den);
    v.canonicalize();
    try {
        return Element(ring, v);
    } catch (const Error& e) {
        throw_node(n, ErrorKind::Ring, e.what());
    }
}

}  // namespace

ExprAst parse_expr(std::string_view src) { return Parser(src).parse(); }

Ring parse_ring(std::string_view src) {
    std::string s;
    for (char c : src)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&](const std::string& why) -> Error {
        return Error(ErrorKind::Parse, "invalid ring '" + std::string(src) + "': " + why, 1, 1);
    };
    std::size_t i = 0;
    Ring base = Ring::integers();
    if (s.compare(0, 2, "ZZ") == 0) {
        i = 2;
    } else if (s.compare(0, 2, "QQ") == 0) {
        base = Ring::rationals();
        i = 2;
    } else if (s.compare(0, 3, "Fp(") == 0) {
        auto close = s.find(')', 3);
        if (close == std::string::npos || close == 3) throw bad("expected Fp(<prime>)");
        std::string digits = s.substr(3, close - 3);
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad("modulus must be a number");
        if (digits.size() > 12) throw Error(ErrorKind::Ring, "prime field modulus too large");
        base = Ring::prime_field(std::stoull(digits));
        i = close + 1;
    } else {
        throw bad("expected ZZ, QQ or Fp(p)");
    }
    if (i == s.size()) return base;
    if (s[i] != '[' || s.back() != ']') throw bad("expected '[' variables ']'");
    std::string inner = s.substr(i + 1, s.size() - i - 2);
    if (inner.find('[') != std::string::npos || inner.find(']') != std::string::npos)
        throw Error(ErrorKind::Ring,
                    "nested polynomial rings are not supported; flatten the variables");
    std::vector<std::string> vars;
    std::size_t start = 0;
    while (true) {
        auto comma = inner.find(',', start);
        vars.push_back(inner.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    for (const auto& v : vars)
        if (!is_valid_identifier(v)) throw bad("invalid variable name '" + v + "'");
    return Ring::polynomial(base, std::move(vars));
}

Element parse_element(std::string_view src, const Ring& ring) {
    ExprAst ast = parse_expr(src);
    return fold<Element>(ast, [&](const ExprAst& n) -> Element {
        if (n.kind != ExprAst::Kind::Variable) return literal(n, ring);
        if (!ring.var_index(n.name))
            throw_node(n, ErrorKind::Parse,
                       "unknown variable '" + n.name + "' (ring " + ring.to_string() + ")");
        return Element::variable(ring, n.name);
    });
}

UniPoly parse_unipoly(std::string_view src, const Ring& ring, const std::string& var) {
    ExprAst ast = parse_expr(src);
    UniPoly one(ring, var, {Element::one(ring)});
    return fold<UniPoly>(ast, [&](const ExprAst& n) -> UniPoly {
        if (n.kind != ExprAst::Kind::Variable) return UniPoly(ring, var, {literal(n, ring)});
        if (n.name == var) return UniPoly::monomial(Element::one(ring), 1, var);
        if (!ring.var_index(n.name))
            throw_node(n, ErrorKind::Parse,
                       "unknown variable '" + n.name + "' (ring " + ring.to_string() +
                           ", main variable " + var + ")");
        return UniPoly(ring, var, {Element::variable(ring, n.name)});
    });
}

ParsedPoly parse_poly(std::string_view src, const Ring& ring,
                      const std::optional<std::string>& main_var) {
    if (main_var) return parse_unipoly(src, ring, *main_var);
    return parse_element(src, ring);
}

std::string print_scalar(const Ring& ring, const mpq_class& value) {
    (void)ring;
    return value.get_str();
}

namespace {

std::string monomial_text(const Ring& ring, const Exponents& e) {
    std::string out;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (!e[v]) continue;
        if (!out.empty()) out += '*';
        out += ring.variables()[v];
        if (e[v] > 1) out += '^' + std::to_string(e[v]);
    }
    return out;
}

/* A signed summand: sign and unsigned body ("3*u0", "u1^2", "5"). */
struct Summand {
    bool negative;
    std::string body;
};

Summand scalar_summand(const mpq_class& c, const std::string& monomial) {
    const bool neg = c < 0;
    mpq_class a = abs(c);
    std::string body;
    if (monomial.empty()) body = a.get_str();
    else if (a == 1) body = monomial;
    else body = a.get_str() + "*" + monomial;
    return {neg, body};
}

std::vector<Summand> summands(const MultiPoly& p) {
    std::vector<Summand> out;
    for (const auto& t : p.terms())
        out.push_back(scalar_summand(t.coeff, monomial_text(p.ring(), t.exps)));
    return out;
}

std::vector<Summand> summands(const Element& x) {
    if (auto p = x.as_poly()) return summands(*p);
    if (x.is_zero()) return {};
    return {scalar_summand(x.constant_value(), "")};
}

std::string join(const std::vector<Summand>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) out += parts[i].negative ? "-" : "";
        else out += parts[i].negative ? " - " : " + ";
        out += parts[i].body;
    }
    return out;
}

}  // namespace

std::string print_poly(const MultiPoly& p) { return join(summands(p)); }

std::string to_string(const Element& x) { return join(summands(x)); }

std::string print_poly(const UniPoly& p) {
    std::vector<Summand> parts;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        std::string power = k == 0 ? "" : (k == 1 ? p.var() : p.var() + "^" + std::to_string(k));
        auto inner = summands(c[k]);
        if (k == 0) {
            parts.insert(parts.end(), inner.begin(), inner.end());
        } else if (inner.size() == 1) {
            Summand s = inner.front();
            s.body = s.body == "1" ? power : s.body + "*" + power;
            parts.push_back(std::move(s));
        } else {
            parts.push_back({false, "(" + join(inner) + ")*" + power});
        }
    }
    return join(parts);
}

std::string caret_diagnostic(std::string_view src, std::size_t line, std::size_t column) {
    std::size_t start = 0;
    for (std::size_t l = 1; l < line; ++l) {
        auto nl = src.find('\n', start);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    auto end = src.find('\n', start);
    std::string text(src.substr(start, end == std::string_view::npos ? src.size() - start : end - start));
    return "  " + text + "\n  " + std::string(column > 0 ? column - 1 : 0, ' ') + "^";
}

}  // namespace disckit
