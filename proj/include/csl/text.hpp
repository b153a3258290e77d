#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "csl/field.hpp"

// Scalar text grammar shared by every file format:
//   RATIONAL := ['-'] DIGITS [ '/' POSDIGITS ]
//   SCALAR   := RATIONAL [ ('+'|'-') RATIONAL '*' 'sqrt(' POSDIGITS ')' ]
// Printing is canonical; parse(print(x)) == x bit-exactly.

namespace csl {

inline std::string to_text(const Int& n) { return n.str(); }

inline std::string to_text(const Rational& q) {
    std::string out = numerator_of(q).str();
    if (denominator_of(q) != 1) out += "/" + denominator_of(q).str();
    return out;
}

inline std::string to_text(const FieldElement& x) {
    std::string out = to_text(x.rational_part());
    const Rational& s = x.surd_part();
    if (s != 0) {
        out += (sign_of(s) < 0) ? "-" : "+";
        out += to_text(abs_of(s));
        out += "*sqrt(" + std::to_string(x.context().radicand()) + ")";
    }
    return out;
}

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline Int parse_digits(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) throw parse_error("expected digits", start);
    return Int(std::string(text.substr(start, pos - start)));
}

inline Rational parse_rational_at(std::string_view text, std::size_t& pos) {
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    Int num = parse_digits(text, pos);
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        std::size_t den_pos = ++pos;
        den = parse_digits(text, pos);
        if (den == 0) throw parse_error("denominator must be positive", den_pos);
    }
    if (negative) num = -num;
    return Rational(num, den);
}

inline void expect(std::string_view text, std::size_t& pos, std::string_view token) {
    if (text.substr(pos, token.size()) != token)
        throw parse_error("expected '" + std::string(token) + "'", pos);
    pos += token.size();
}

} // namespace detail

inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    Rational q = detail::parse_rational_at(text, pos);
    if (pos != text.size()) throw parse_error("trailing characters after rational", pos);
    return q;
}

// Parses a SCALAR. The result's context is rational-only unless the text
// carries a sqrt() term; callers unify with their document-level context.
inline FieldElement parse_scalar(std::string_view text) {
    std::size_t pos = 0;
    Rational r = detail::parse_rational_at(text, pos);
    if (pos == text.size()) return FieldElement(r);
    char sgn = text[pos];
    if (sgn != '+' && sgn != '-') throw parse_error("expected '+' or '-'", pos);
    ++pos;
    Rational s = detail::parse_rational_at(text, pos);
    if (sgn == '-') s = -s;
    detail::expect(text, pos, "*sqrt(");
    std::size_t d_pos = pos;
    Int d = detail::parse_digits(text, pos);
    detail::expect(text, pos, ")");
    if (pos != text.size()) throw parse_error("trailing characters after scalar", pos);
    if (d > Int(std::numeric_limits<long long>::max()))
        throw parse_error("radicand out of range", d_pos);
    FieldContext ctx;
    try {
        ctx = FieldContext::quadratic(static_cast<long long>(d));
    } catch (const invalid_radicand& e) {
        throw parse_error(e.what(), d_pos);
    }
    return FieldElement(r, s, ctx);
}

} // namespace csl
