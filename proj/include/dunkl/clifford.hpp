#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dunkl/matrix.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

// Element of the Clifford algebra Cl(d) with e_i e_j + e_j e_i = 2 eps delta_ij.
// Blades are bitmasks over {1..d}; the empty blade is the unit.
class CliffordElement {
public:
    CliffordElement(int dim, int eps) : dim_(dim), eps_(eps) {}

    static CliffordElement one(int dim, int eps);
    static CliffordElement generator(int dim, int eps, int j);  // e_j, 1-based
    // alpha_1 e_1 + ... + alpha_d e_d
    static CliffordElement vector(int eps, std::span<const Scalar> alpha);

    int dim() const { return dim_; }
    int eps() const { return eps_; }
    bool is_zero() const { return blades_.empty(); }
    Scalar coeff(uint32_t blade) const;
    const std::map<uint32_t, Scalar>& blades() const { return blades_; }

    void add_term(uint32_t blade, const Scalar& c);

    CliffordElement operator-() const;
    CliffordElement& operator+=(const CliffordElement& o);
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
    CliffordElement scaled(const Scalar& c) const;

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.dim_ == b.dim_ && a.eps_ == b.eps_ && a.blades_ == b.blades_;
    }

    std::string str() const;  // "e1e3" style

private:
    int dim_, eps_;
    std::map<uint32_t, Scalar> blades_;
};

// Concrete irreducible Cl(d)-module of dimension 2^floor(d/2), built from the
// Kronecker-product construction. Generator entries lie in {0, +-1, +-i} for
// eps=+1; for eps=-1 each generator is the eps=+1 matrix times i. For odd d
// the representation is not faithful: the pseudoscalar e_1...e_d acts as the
// scalar recorded in pseudoscalar_value().
class SpinorSpace {
public:
    static SpinorSpace build(int dim, int eps);

    int dim() const { return dim_; }
    int eps() const { return eps_; }
    int spinor_dim() const { return static_cast<int>(generators_.empty() ? 1 : generators_[0].rows()); }
    const ScalarMatrix& generator(int j) const { return generators_[static_cast<size_t>(j - 1)]; }

    ScalarMatrix to_matrix(const CliffordElement& a) const;
    Scalar pseudoscalar_value() const;  // scalar lambda with e_1...e_d = lambda Id (odd d)

private:
    int dim_ = 0, eps_ = 1;
    std::vector<ScalarMatrix> generators_;
};

// Element of P tensor V: one polynomial per spinor component.
class SpinorPoly {
public:
    SpinorPoly(int dim, int spinor_dim)
        : comps_(static_cast<size_t>(spinor_dim), Polynomial(dim)) {}

    static SpinorPoly basis_spinor(int dim, int spinor_dim, int index);
    static SpinorPoly monomial_spinor(const MultiIndex& beta, int spinor_dim, int index);

    int dim() const { return comps_.empty() ? 0 : comps_[0].dim(); }
    int spinor_dim() const { return static_cast<int>(comps_.size()); }
    const Polynomial& comp(int i) const { return comps_[static_cast<size_t>(i)]; }
    Polynomial& comp(int i) { return comps_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    int degree() const;  // max over components, -1 if zero
    bool is_homogeneous(int n) const;

    SpinorPoly operator-() const;
    SpinorPoly& operator+=(const SpinorPoly& o);
    SpinorPoly& operator-=(const SpinorPoly& o);
    friend SpinorPoly operator+(SpinorPoly a, const SpinorPoly& b) { return a += b; }
    friend SpinorPoly operator-(SpinorPoly a, const SpinorPoly& b) { return a -= b; }
    SpinorPoly scaled(const Scalar& c) const;
    SpinorPoly mul_poly(const Polynomial& p) const;
    SpinorPoly clifford_apply(const ScalarMatrix& m) const;  // component mixing
    SpinorPoly map_components(const std::function<Polynomial(const Polynomial&)>& f) const;
    std::vector<std::pair<int, SpinorPoly>> homogeneous_components() const;

    friend bool operator==(const SpinorPoly& a, const SpinorPoly& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const SpinorPoly& a, const SpinorPoly& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<Polynomial> comps_;
};

}  // namespace dunkl
