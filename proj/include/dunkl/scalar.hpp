#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "dunkl/error.hpp"

namespace dunkl {

using Rational = mpq_class;

// Exact field element, layered as ((a + b*sqrt(m)) + (c + e*sqrt(m))*i).
//
// The base layer is an arbitrary-precision rational. The quadratic layer
// adjoins a single sqrt(m) for a squarefree integer m >= 2; values carrying
// different radicands cannot be combined (one extension per session). The
// imaginary layer exists so the spinor representation matrices, whose entries
// lie in {0, +-1, +-i}, stay exact; domain-level coefficients remain real.
class Scalar {
public:
    Scalar() : re_(0), re_rad_(0), im_(0), im_rad_(0) {}
    Scalar(long n) : re_(n), re_rad_(0), im_(0), im_rad_(0) {}  // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    explicit Scalar(Rational r) : re_(std::move(r)), re_rad_(0), im_(0), im_rad_(0) {}

    // sqrt of a positive integer; square factors are extracted exactly, so
    // sqrt_of(8) = 2*sqrt(2) and sqrt_of(9) = 3.
    static Scalar sqrt_of(long n);
    static Scalar imaginary_unit();
    // Accepts the printed forms: "p/q", "p/q+r/s*sqrt(m)", optional "*i"
    // parts, parentheses, and +,-,*,/ between them.
    static Scalar from_string(std::string_view text);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return re_rad_ == 0 && im_ == 0 && im_rad_ == 0; }
    bool is_real() const { return im_ == 0 && im_rad_ == 0; }
    const Rational& rational() const;  // requires is_rational()
    long radicand() const { return m_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar conjugate() const;  // complex conjugate

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.re_rad_ == b.re_rad_ && a.im_ == b.im_ &&
               a.im_rad_ == b.im_rad_ && (a.m_ == b.m_ || (a.m_ == 0) || (b.m_ == 0));
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    Rational re_, re_rad_, im_, im_rad_;
    long m_ = 0;  // radicand; 0 when no sqrt part is present

    void normalize();
    static long merged_radicand(const Scalar& a, const Scalar& b);
};

// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
Scalar pochhammer(const Scalar& a, unsigned n);

Scalar pow(Scalar base, unsigned n);

}  // namespace dunkl
