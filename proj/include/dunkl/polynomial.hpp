#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/multi_index.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

class ScalarMatrix;

// Sparse exact multivariate polynomial: MultiIndex -> Scalar, no stored zeros.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Scalar, RevLexLess>;

    explicit Polynomial(int dim) : dim_(dim) {}

    static Polynomial constant(int dim, Scalar c);
    static Polynomial monomial(const MultiIndex& beta, Scalar c);
    static Polynomial variable(int dim, int j);  // x_j, 1-based

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max |beta|_1, -1 for the zero polynomial
    bool is_homogeneous(int n) const;
    Scalar coeff(const MultiIndex& beta) const;
    const TermMap& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    void add_term(const MultiIndex& beta, const Scalar& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Scalar& c) const;

    Polynomial derivative(int j) const;              // d/dx_j, 1-based
    Polynomial euler() const;                        // sum_j x_j d/dx_j
    Polynomial substitute_zero(int j) const;         // x_j = 0, 1-based
    Polynomial compose_linear(const ScalarMatrix& a) const;  // p(A x)
    std::vector<std::pair<int, Polynomial>> homogeneous_components() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const;

private:
    int dim_;
    TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned n);

// The linear form <alpha, x>.
Polynomial linear_form(std::span<const Scalar> alpha);

// |x|^2 = x_1^2 + ... + x_d^2 (optionally only the first `level` coordinates).
Polynomial norm_squared(int dim, int level = 0);

// Exact quotient p / <alpha, x>; throws if the remainder is nonzero.
Polynomial divide_by_linear_form(const Polynomial& p, std::span<const Scalar> alpha);

}  // namespace dunkl
