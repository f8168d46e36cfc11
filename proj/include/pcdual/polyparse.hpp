#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"

namespace pcdual {

namespace detail {

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := int ('/' uint)?
class Parser {
public:
    static constexpr unsigned kMaxExponent = 64;

    explicit Parser(std::string_view src) : src_(src) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) fail("empty input");
        Polynomial p = expr();
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + src_[pos_] + "'");
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() != '^') return b;
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        const std::string digits = read_digits("exponent");
        if (digits.size() > 3 || std::stoul(digits) > kMaxExponent)
            fail_at(start, "exponent overflow (max " + std::to_string(kMaxExponent) + ")");
        return pow(b, static_cast<unsigned>(std::stoul(digits)));
    }

    Polynomial base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        if (at_end()) fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    Polynomial rational() {
        Integer num(read_digits("integer"));
        skip_ws();
        if (peek() != '/') return Polynomial(Rational(num));
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        Integer den(read_digits("denominator"));
        if (den == 0) fail_at(start, "zero denominator");
        return Polynomial(make_rational(num, den));
    }

    Polynomial variable() {
        const std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const auto ident = src_.substr(start, pos_ - start);
        const auto v = var_from_name(ident);
        if (!v) fail_at(start, "unknown variable '" + std::string(ident) + "'");
        return Polynomial::variable(*v);
    }

    std::string read_digits(const char* what) {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return std::string(src_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const { throw ParseError(pos + 1, what); }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline void append_monomial(std::string& out, const Monomial& m) {
    bool first = true;
    for (Var v : kAllVars) {
        const auto e = m.exponent(v);
        if (e == 0) continue;
        if (!first) out += '*';
        first = false;
        out += name(v);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
}

}  // namespace detail

/// Throws ParseError with a 1-based byte offset.
inline Polynomial parse_polynomial(std::string_view src) { return detail::Parser(src).parse(); }

/// Canonical text: graded-lex order, explicit '*' and '^', " + " / " - " separators.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        if (m.is_one()) {
            out += to_string(mag);
        } else {
            if (mag != 1) {
                out += to_string(mag);
                out += '*';
            }
            detail::append_monomial(out, m);
        }
    }
    return out;
}

inline std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    detail::append_monomial(out, m);
    return out;
}

/// One polynomial per line; blank lines and lines starting with '#' are skipped.
/// Error offsets are relative to the offending line.
inline std::vector<Polynomial> parse_polynomial_lines(std::string_view text) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') out.push_back(parse_polynomial(line));
        start = end + 1;
    }
    return out;
}

}  // namespace pcdual
