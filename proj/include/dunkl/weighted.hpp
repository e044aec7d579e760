#pragma once

#include <map>
#include <string>
#include <vector>

#include "dunkl/clifford.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

// Finite sum of |x|^s * part with exact rational exponents s and spinor-valued
// polynomial parts. Canonical form: no zero parts, and no two stored exponents
// differing by an even integer (the higher one is folded down by multiplying
// its part with powers of the polynomial |x|^2). A WeightedElement whose only
// exponent is 0 round-trips to a plain SpinorPoly.
class WeightedElement {
public:
    struct RationalLess {
        bool operator()(const Rational& a, const Rational& b) const { return a < b; }
    };
    using PartMap = std::map<Rational, SpinorPoly, RationalLess>;

    WeightedElement(int dim, int spinor_dim) : dim_(dim), spinor_dim_(spinor_dim) {}
    explicit WeightedElement(const SpinorPoly& p);

    int dim() const { return dim_; }
    int spinor_dim() const { return spinor_dim_; }
    bool is_zero() const { return parts_.empty(); }
    const PartMap& parts() const { return parts_; }

    void add_part(const Rational& exponent, const SpinorPoly& part);

    bool is_polynomial() const;  // single exponent 0 (or zero element)
    SpinorPoly to_spinor_poly() const;

    WeightedElement operator-() const;
    WeightedElement& operator+=(const WeightedElement& o);
    WeightedElement& operator-=(const WeightedElement& o);
    friend WeightedElement operator+(WeightedElement a, const WeightedElement& b) { return a += b; }
    friend WeightedElement operator-(WeightedElement a, const WeightedElement& b) { return a -= b; }
    WeightedElement scaled(const Scalar& c) const;

    // mathematical equality: the stored class representative may differ by an
    // even shift between two computations of the same value, so compare the
    // difference against zero
    friend bool operator==(const WeightedElement& a, const WeightedElement& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const WeightedElement& a, const WeightedElement& b) { return !(a == b); }

    std::string str() const;

private:
    int dim_, spinor_dim_;
    PartMap parts_;

    void fold(const Rational& exponent, const SpinorPoly& part);
};

}  // namespace dunkl
