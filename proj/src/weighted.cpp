#include "dunkl/weighted.hpp"

#include "dunkl/error.hpp"

namespace dunkl {

WeightedElement::WeightedElement(const SpinorPoly& p)
    : dim_(p.dim()), spinor_dim_(p.spinor_dim()) {
    add_part(Rational(0), p);
}

void WeightedElement::fold(const Rational& exponent, const SpinorPoly& part) {
    if (part.is_zero()) return;
    // find the stored exponent in the same mod-2 class; parts_ is ordered, so
    // the class representative (minimal exponent) is unique if present
    for (auto& [s, existing] : parts_) {
        Rational diff = exponent - s;
        if (diff.get_den() != 1) continue;
        mpz_class num = diff.get_num();
        if (num % 2 != 0) continue;
        if (num >= 0) {
            // fold down: |x|^exponent part = |x|^s (|x|^2)^(num/2) part
            const unsigned long k = mpz_class(num / 2).get_ui();
            existing += part.mul_poly(pow(norm_squared(dim_), static_cast<unsigned>(k)));
        } else {
            // incoming exponent is the new minimal representative
            const unsigned long k = mpz_class((-num) / 2).get_ui();
            SpinorPoly lifted = existing.mul_poly(pow(norm_squared(dim_), static_cast<unsigned>(k)));
            lifted += part;
            const Rational old_key = s;
            parts_.erase(old_key);
            parts_.emplace(exponent, std::move(lifted));
        }
        return;
    }
    parts_.emplace(exponent, part);
}

void WeightedElement::add_part(const Rational& exponent, const SpinorPoly& part) {
    if (part.dim() != dim_ || part.spinor_dim() != spinor_dim_)
        throw error("weighted element shape mismatch");
    fold(exponent, part);
    for (auto it = parts_.begin(); it != parts_.end();) {
        if (it->second.is_zero())
            it = parts_.erase(it);
        else
            ++it;
    }
}

bool WeightedElement::is_polynomial() const {
    if (parts_.empty()) return true;
    if (parts_.size() != 1) return false;
    const Rational& s = parts_.begin()->first;
    return s >= 0 && s.get_den() == 1 && s.get_num() % 2 == 0;
}

SpinorPoly WeightedElement::to_spinor_poly() const {
    if (parts_.empty()) return SpinorPoly(dim_, spinor_dim_);
    if (!is_polynomial())
        throw error("weighted element is not a plain polynomial: " + str());
    const Rational& s = parts_.begin()->first;
    if (s == 0) return parts_.begin()->second;
    // |x|^(2k) * part is the polynomial |x|^2k part
    const unsigned long k = mpz_class(s.get_num() / 2).get_ui();
    return parts_.begin()->second.mul_poly(pow(norm_squared(dim_), static_cast<unsigned>(k)));
}

WeightedElement WeightedElement::operator-() const {
    WeightedElement out(dim_, spinor_dim_);
    for (const auto& [s, p] : parts_) out.parts_.emplace(s, -p);
    return out;
}

WeightedElement& WeightedElement::operator+=(const WeightedElement& o) {
    if (dim_ != o.dim_ || spinor_dim_ != o.spinor_dim_)
        throw error("weighted element shape mismatch");
    for (const auto& [s, p] : o.parts_) add_part(s, p);
    return *this;
}

WeightedElement& WeightedElement::operator-=(const WeightedElement& o) {
    return *this += -o;
}

WeightedElement WeightedElement::scaled(const Scalar& c) const {
    WeightedElement out(dim_, spinor_dim_);
    if (c.is_zero()) return out;
    for (const auto& [s, p] : parts_) out.parts_.emplace(s, p.scaled(c));
    return out;
}

std::string WeightedElement::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (const auto& [s, p] : parts_) {
        if (!out.empty()) out += "  +  ";
        if (s == 0)
            out += "(" + p.str() + ")";
        else
            out += "|x|^(" + s.get_str() + ") * (" + p.str() + ")";
    }
    return out;
}

}  // namespace dunkl
