#include "dunkl/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace dunkl {

Scalar::Scalar(long num, long den) : re_(num, den), re_rad_(0), im_(0), im_rad_(0) {
    if (den == 0) throw error("rational with zero denominator");
    re_.canonicalize();
}

Scalar Scalar::sqrt_of(long n) {
    if (n < 0) throw error("sqrt_of: negative radicand");
    if (n == 0) return Scalar(0);
    // peel off the largest square divisor by trial division
    long square = 1, rest = n;
    for (long p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            square *= p;
        }
    }
    Scalar out;
    if (rest == 1) {
        out.re_ = square;
    } else {
        out.re_rad_ = square;
        out.m_ = rest;
    }
    return out;
}

Scalar Scalar::imaginary_unit() {
    Scalar out;
    out.im_ = 1;
    return out;
}

bool Scalar::is_zero() const {
    return re_ == 0 && re_rad_ == 0 && im_ == 0 && im_rad_ == 0;
}

bool Scalar::is_one() const {
    return re_ == 1 && re_rad_ == 0 && im_ == 0 && im_rad_ == 0;
}

const Rational& Scalar::rational() const {
    if (!is_rational()) throw error("Scalar::rational: value is not a plain rational: " + str());
    return re_;
}

void Scalar::normalize() {
    if (re_rad_ == 0 && im_rad_ == 0) m_ = 0;
}

long Scalar::merged_radicand(const Scalar& a, const Scalar& b) {
    if (a.m_ != 0 && b.m_ != 0 && a.m_ != b.m_)
        throw error("mixed radicals sqrt(" + std::to_string(a.m_) + ") and sqrt(" +
                    std::to_string(b.m_) + ") in one expression");
    return a.m_ != 0 ? a.m_ : b.m_;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.re_ = -out.re_;
    out.re_rad_ = -out.re_rad_;
    out.im_ = -out.im_;
    out.im_rad_ = -out.im_rad_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    m_ = merged_radicand(*this, o);
    re_ += o.re_;
    re_rad_ += o.re_rad_;
    im_ += o.im_;
    im_rad_ += o.im_rad_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    const long m = merged_radicand(*this, o);
    const Rational mm(m);
    // quad products: (a + b sqrt m)(c + e sqrt m) = (ac + be m) + (ae + bc) sqrt m
    auto qmul = [&mm](const Rational& a, const Rational& b, const Rational& c,
                      const Rational& e, Rational& out_r, Rational& out_s) {
        out_r = a * c + b * e * mm;
        out_s = a * e + b * c;
    };
    Rational acr, acs, bdr, bds, adr, ads, bcr, bcs;
    qmul(re_, re_rad_, o.re_, o.re_rad_, acr, acs);
    qmul(im_, im_rad_, o.im_, o.im_rad_, bdr, bds);
    qmul(re_, re_rad_, o.im_, o.im_rad_, adr, ads);
    qmul(im_, im_rad_, o.re_, o.re_rad_, bcr, bcs);
    re_ = acr - bdr;
    re_rad_ = acs - bds;
    im_ = adr + bcr;
    im_rad_ = ads + bcs;
    m_ = m;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("division by zero");
    // 1/(A + B i) = (A - B i) / (A^2 + B^2) with A, B in the real quad layer
    Scalar conj = conjugate();
    Scalar norm = *this * conj;  // real: u + v sqrt m
    // invert the real quad value (u + v sqrt m): multiply by (u - v sqrt m)/(u^2 - m v^2)
    Rational u = norm.re_, v = norm.re_rad_;
    Rational den = u * u - Rational(norm.m_) * v * v;
    if (den == 0) throw error("division by zero (vanishing quad norm)");
    Scalar inv_norm;
    inv_norm.re_ = u / den;
    inv_norm.re_rad_ = -v / den;
    inv_norm.m_ = norm.m_;
    inv_norm.normalize();
    return conj * inv_norm;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::conjugate() const {
    Scalar out = *this;
    out.im_ = -out.im_;
    out.im_rad_ = -out.im_rad_;
    return out;
}

namespace {

std::string quad_str(const Rational& a, const Rational& b, long m) {
    auto sqrt_part = [m](const Rational& c) -> std::string {
        if (c == 1) return "sqrt(" + std::to_string(m) + ")";
        if (c == -1) return "-sqrt(" + std::to_string(m) + ")";
        return c.get_str() + "*sqrt(" + std::to_string(m) + ")";
    };
    if (b == 0) return a.get_str();
    if (a == 0) return sqrt_part(b);
    if (b > 0) return a.get_str() + "+" + sqrt_part(b);
    return a.get_str() + "-" + sqrt_part(-b);
}

}  // namespace

std::string Scalar::str() const {
    const std::string real = quad_str(re_, re_rad_, m_);
    if (is_real()) return real;
    std::string imag;
    if (im_rad_ == 0) {
        if (im_ == 1)
            imag = "i";
        else if (im_ == -1)
            imag = "-i";
        else
            imag = im_.get_str() + "*i";
    } else {
        imag = "(" + quad_str(im_, im_rad_, m_) + ")*i";
    }
    if (re_ == 0 && re_rad_ == 0) return imag;
    if (imag[0] == '-') return real + imag;
    return real + "+" + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------------------
// parsing: a small expression grammar over +,-,*,/,(),integers,sqrt(n),i

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw error("parse error in scalar \"" + std::string(text) + "\" at position " +
                    std::to_string(pos) + ": " + what);
    }

    Scalar parse_expr() {
        Scalar value = parse_term();
        for (;;) {
            if (eat('+'))
                value += parse_term();
            else if (eat('-'))
                value -= parse_term();
            else
                return value;
        }
    }

    Scalar parse_term() {
        Scalar value = parse_factor();
        for (;;) {
            if (eat('*'))
                value *= parse_factor();
            else if (eat('/'))
                value /= parse_factor();
            else
                return value;
        }
    }

    Scalar parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        if (eat('(')) {
            Scalar inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (pos < text.size() && text.compare(pos, 5, "sqrt(") == 0) {
            pos += 5;
            long n = parse_integer();
            if (!eat(')')) fail("expected ')' after sqrt radicand");
            return Scalar::sqrt_of(n);
        }
        if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            return Scalar::imaginary_unit();
        }
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            return Scalar(Rational(parse_digits()));
        fail("expected number, sqrt(...), i, or '('");
    }

    long parse_integer() {
        skip_ws();
        bool neg = eat('-');
        std::string digits = parse_digits();
        long v = std::stol(digits);
        return neg ? -v : v;
    }

    std::string parse_digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }
};

}  // namespace

Scalar Scalar::from_string(std::string_view text) {
    Parser p{text};
    Scalar value = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return value;
}

Scalar pochhammer(const Scalar& a, unsigned n) {
    Scalar out(1);
    Scalar factor = a;
    for (unsigned t = 0; t < n; ++t) {
        out *= factor;
        factor += Scalar(1);
    }
    return out;
}

Scalar pow(Scalar base, unsigned n) {
    Scalar out(1);
    while (n > 0) {
        if (n & 1u) out *= base;
        base *= base;
        n >>= 1u;
    }
    return out;
}

}  // namespace dunkl
