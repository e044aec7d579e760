#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunkl/dunkl_ops.hpp"

namespace dunkl {

// Composable linear operator on P tensor V (and on weighted elements), built
// as an expression tree over the named primitives. Application is lazy; no
// matrix is ever materialized here.
class OperatorExpr {
public:
    enum class Kind {
        identity,
        scalar_mul,     // c * id
        dunkl,          // T_j
        mul_x,          // x_j .
        mul_xsq,        // |x_[M]|^2 .
        clifford,       // left multiplication by a Clifford element
        reflect,        // sigma_alpha on the argument
        double_cover,   // underline(alpha) sigma_alpha
        euler,          // E_[M]
        hop,            // H_[M]
        lap,            // Delta_kappa (level M)
        dirac,          // D_[M]
        vecx,           // xun_[M] .
        osym,           // O_[M],j
        maxwell,        // m_j
        zsym,           // z_[M],j
        kelvin_k,
        kelvin_i,
        compose,        // children applied right to left
        sum,
        power,
    };

    OperatorExpr() : kind_(Kind::identity) {}

    Kind kind() const { return kind_; }

    WeightedElement apply(const Setup& s, const WeightedElement& f) const;
    SpinorPoly apply(const Setup& s, const SpinorPoly& f) const;

    OperatorExpr operator*(const OperatorExpr& o) const;  // composition
    OperatorExpr operator+(const OperatorExpr& o) const;
    OperatorExpr operator-(const OperatorExpr& o) const;
    OperatorExpr operator-() const;
    OperatorExpr scaled(const Scalar& c) const;

    std::string str() const;

    // factories
    static OperatorExpr identity();
    static OperatorExpr zero();
    static OperatorExpr scalar(Scalar c);
    static OperatorExpr dunkl_t(int j);
    static OperatorExpr x(int j);
    static OperatorExpr xsq(int level = 0);
    static OperatorExpr e(int j);
    static OperatorExpr clifford_mul(CliffordElement c);
    static OperatorExpr reflect(int alpha_idx);
    static OperatorExpr double_cover(int alpha_idx);
    static OperatorExpr euler(int level = 0);
    static OperatorExpr h(int level = 0);
    static OperatorExpr lap(int level = 0);
    static OperatorExpr dirac(int level = 0);
    static OperatorExpr vec_x(int level = 0);
    static OperatorExpr o_sym(int j, int level = 0);
    static OperatorExpr m_sym(int j);
    static OperatorExpr z_sym(int j, int level = 0);
    static OperatorExpr z_partial(int level, int j) { return z_sym(j, level); }
    static OperatorExpr kelvin_K();
    static OperatorExpr kelvin_I();
    static OperatorExpr power(OperatorExpr base, int n);
    static OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
    static OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);
    // T^beta, x^beta, m^beta, z^beta: factor for coordinate 1 applied last
    static OperatorExpr multi_power(const MultiIndex& beta,
                                    const std::function<OperatorExpr(int)>& factor);

private:
    Kind kind_;
    int j_ = 0;      // coordinate, 1-based
    int level_ = 0;  // 0 = full dimension
    int exponent_ = 1;
    Scalar coeff_;
    std::optional<CliffordElement> cliff_;
    std::vector<OperatorExpr> children_;

    static OperatorExpr make(Kind kind, int j, int level);
    WeightedElement mul_clifford_impl(const Setup& s, const WeightedElement& f) const;
};

struct IdentityReport {
    bool ok = true;
    std::string counterexample;  // empty on success
};

// Applies both sides to every monomial-times-basis-spinor of degree <= max_degree
// (restricted to the first `input_level` variables when given) and compares
// exactly. Reports the first mismatch.
IdentityReport verify_identity(const Setup& s, const OperatorExpr& lhs, const OperatorExpr& rhs,
                               int max_degree, int input_level = 0);

}  // namespace dunkl
