#include "stc/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace stc {

Rational::Rational(long n, long d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(v_ / o.v_));
}

double Rational::to_double() const {
    double d = v_.get_d();
    if (!std::isfinite(d)) throw OverflowToFloat();
    return d;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

// Grammar (no whitespace inside tokens, leading/trailing blanks tolerated):
//   gauss    := rational
//             | rational sign unsigned '*' 'i'
//             | [sign] unsigned '*' 'i'
//   rational := [sign] unsigned
//   unsigned := digits [ '/' digits ]
struct Cursor {
    const std::string& s;
    size_t p = 0;

    explicit Cursor(const std::string& str) : s(str) {}
    void skip_blanks() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool done() const { return p >= s.size(); }
    char peek() const { return p < s.size() ? s[p] : '\0'; }
};

std::string parse_digits(Cursor& c) {
    size_t start = c.p;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.s[c.p]))) ++c.p;
    if (c.p == start) throw ParseError("expected digits in '" + c.s + "'");
    return c.s.substr(start, c.p - start);
}

// digits [ '/' digits ], sign applied by the caller
Rational parse_unsigned_rational(Cursor& c) {
    std::string num = parse_digits(c);
    std::string den = "1";
    if (c.peek() == '/') {
        ++c.p;
        den = parse_digits(c);
    }
    mpq_class v(num + "/" + den);
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + c.s + "'");
    v.canonicalize();
    return Rational(v);
}

int parse_sign(Cursor& c) {
    if (c.peek() == '+') { ++c.p; return 1; }
    if (c.peek() == '-') { ++c.p; return -1; }
    return 1;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    Cursor c(text);
    c.skip_blanks();
    int sg = parse_sign(c);
    Rational r = parse_unsigned_rational(c);
    c.skip_blanks();
    if (!c.done()) throw ParseError("trailing characters in rational '" + text + "'");
    return sg < 0 ? -r : r;
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    Rational n = o.norm();
    GaussianRational num = *this * o.conj();
    return {num.re() / n, num.im() / n};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string out = re_.str();
    out += im_.sign() < 0 ? "-" : "+";
    out += im_.abs().str();
    out += "*i";
    return out;
}

GaussianRational GaussianRational::parse(const std::string& text) {
    Cursor c(text);
    c.skip_blanks();
    int sg1 = parse_sign(c);
    Rational first = parse_unsigned_rational(c);
    if (sg1 < 0) first = -first;

    // pure imaginary: "c*i" / "-c*i"
    if (c.peek() == '*') {
        ++c.p;
        if (c.peek() != 'i') throw ParseError("expected 'i' in '" + text + "'");
        ++c.p;
        c.skip_blanks();
        if (!c.done()) throw ParseError("trailing characters in '" + text + "'");
        return {Rational(0), first};
    }

    c.skip_blanks();
    if (c.done()) return {first, Rational(0)};

    if (c.peek() != '+' && c.peek() != '-')
        throw ParseError("expected '+' or '-' before imaginary part in '" + text + "'");
    int sg2 = parse_sign(c);
    c.skip_blanks();
    Rational second = parse_unsigned_rational(c);
    if (sg2 < 0) second = -second;
    if (c.peek() != '*') throw ParseError("expected '*i' after imaginary part in '" + text + "'");
    ++c.p;
    if (c.peek() != 'i') throw ParseError("expected 'i' in '" + text + "'");
    ++c.p;
    c.skip_blanks();
    if (!c.done()) throw ParseError("trailing characters in '" + text + "'");
    return {first, second};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace stc
