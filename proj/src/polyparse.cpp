#include "halphen/io.hpp"

#include <cctype>

namespace halphen {

namespace {

constexpr int kMaxExponent = 4096;

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw parse_error(std::string("expected ") + what, pos);
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer", pos);
        return Int(s.substr(start, pos - start));
    }

    Poly primary() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of input", pos);
        if (accept('(')) {
            Poly e = expr();
            expect(')', "')'");
            return e;
        }
        if (accept('-')) return -factor();
        if (s[pos] == 'x') {
            ++pos;
            return Poly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            Int num = integer();
            if (accept('/')) {
                size_t at = pos;
                Int den = integer();
                if (den == 0) throw parse_error("zero denominator", at);
                return Poly(Scalar(Rat(num, den)));
            }
            return Poly(Scalar(Rat(num)));
        }
        throw parse_error(std::string("unexpected character '") + s[pos] + "'", pos);
    }

    Poly factor() {
        Poly base = primary();
        if (accept('^')) {
            skip_ws();
            size_t at = pos;
            if (pos < s.size() && (s[pos] == '-' || s[pos] == '(')) // x^(-1) and friends
                throw parse_error("negative exponent rejected", at);
            Int e = integer();
            if (e > kMaxExponent) throw parse_error("exponent overflow", at);
            Poly out(1);
            for (Int i = 0; i < e; ++i) out *= base;
            return out;
        }
        return base;
    }

    Poly term() {
        Poly out = factor();
        while (accept('*')) out *= factor();
        return out;
    }

    Poly expr() {
        Poly out = term();
        while (true) {
            skip_ws();
            if (accept('+')) out += term();
            else if (accept('-')) out -= term();
            else break;
        }
        return out;
    }
};

} // namespace

Poly parse_poly(const std::string& text) {
    Parser p(text);
    Poly out = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
    return out;
}

Rat parse_rat(const std::string& text) {
    size_t i = 0;
    bool neg = false;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw parse_error("expected integer", i);
    Int num(text.substr(start, i - start));
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        size_t ds = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == ds) throw parse_error("expected denominator", i);
        den = Int(text.substr(ds, i - ds));
        if (den == 0) throw parse_error("zero denominator", ds);
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) throw parse_error("trailing input", i);
    return neg ? Rat(-num, den) : Rat(num, den);
}

Scalar parse_scalar(const std::string& text) {
    // split into terms on top-level +/-, each term either rational or r*sqrt(d)
    Rat a = 0, b = 0;
    long long d = 0;
    size_t i = 0;
    auto ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    ws();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw parse_error("expected + or -", i);
        }
        ws();
        Rat coeff = 1;
        bool saw_number = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            Int num(text.substr(start, i - start));
            Int den = 1;
            if (i < text.size() && text[i] == '/') {
                ++i;
                size_t ds = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == ds) throw parse_error("expected denominator", i);
                den = Int(text.substr(ds, i - ds));
                if (den == 0) throw parse_error("zero denominator", ds);
            }
            coeff = Rat(num, den);
            saw_number = true;
        }
        ws();
        if (i < text.size() && (text[i] == '*' || text.compare(i, 4, "sqrt") == 0)) {
            if (text[i] == '*') { ++i; ws(); }
            if (text.compare(i, 4, "sqrt") != 0) throw parse_error("expected sqrt", i);
            i += 4;
            ws();
            if (i >= text.size() || text[i] != '(') throw parse_error("expected (", i);
            ++i;
            ws();
            int dsign = 1;
            if (i < text.size() && text[i] == '-') { dsign = -1; ++i; }
            size_t ds = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == ds) throw parse_error("expected extension tag", i);
            long long dv = dsign * std::stoll(text.substr(ds, i - ds));
            ws();
            if (i >= text.size() || text[i] != ')') throw parse_error("expected )", i);
            ++i;
            if (d != 0 && d != dv) throw parse_error("mixed extension tags", i);
            d = dv;
            b += Rat(sign) * coeff;
        } else {
            if (!saw_number) throw parse_error("expected number", i);
            a += Rat(sign) * coeff;
        }
        ws();
        first = false;
    }
    if (b == 0) return Scalar(a);
    return Scalar(a, b, d);
}

} // namespace halphen
