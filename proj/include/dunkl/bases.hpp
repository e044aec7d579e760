#pragma once

#include <string>
#include <vector>

#include "dunkl/projections.hpp"

namespace dunkl {

struct BasisElement {
    MultiIndex label;
    int spinor_index = 0;
    SpinorPoly value;
};

// A constructed monogenic basis with its certificates. Construction hard-fails
// on rank deficiency or a kernel violation, so a returned BasisSet is always
// certified.
struct BasisSet {
    int degree = 0;
    std::string kind;  // "maxwell" | "ck" | "partial-z" | "generating-set"
    std::vector<BasisElement> elements;
    int rank = 0;
    bool kernel_certified = false;
};

// Z^beta_s = z_1^{beta_1} ... z_d^{beta_d} s on the constant basis spinor.
SpinorPoly z_monogenic(const Setup& s, const MultiIndex& beta, int spinor_index);

// Maxwell-type basis {Z^j_s : j_elim = 0, |j|_1 = n}; by default the last
// coordinate's index is eliminated. `eliminated` is 1-based.
BasisSet maxwell_basis(const Setup& s, int n, int eliminated = 0);

// Full generating set {Z^beta_s : |beta|_1 = n} without rank certification.
BasisSet z_generating_set(const Setup& s, int n);

// Cauchy--Kovalevskaya extension in the variable x_k for Z_2^d; maps
// polynomials over x_1..x_{k-1} to D_[k]-monogenics of the same degree.
SpinorPoly ck_extend(const Setup& s, int k, const SpinorPoly& p);

// R_k, the inverse of ck_extend: evaluate x_k = 0.
SpinorPoly restrict_var(const Setup& s, int k, const SpinorPoly& f);

// The CK tower CK_{x_m}(xun_{m-1}^{j_{m-1}} CK_{x_{m-1}}(... CK_{x_2}(x_1^{j_1}) ...)) v
// applied to a constant spinor v, stopping at level m (0 = full dimension).
SpinorPoly ck_tower(const Setup& s, const MultiIndex& label, const SpinorPoly& spinor,
                    int up_to_level = 0);

// The ordered product z_[m]^{j_{m-1}} ... z_[2]^{j_1} v.
SpinorPoly partial_z_tower(const Setup& s, const MultiIndex& label, const SpinorPoly& spinor,
                           int up_to_level = 0);

// CK basis Psi^j_s built from the tower of CK extensions.
BasisSet ck_basis(const Setup& s, int n);

// Partial generalised symmetry basis Phi^j_s = z_[d]^{j_{d-1}} ... z_[2]^{j_1} s,
// applied right to left in this exact order.
BasisSet partial_z_basis(const Setup& s, int n);

// Section 5 constants (Z_2^d).
Scalar constant_A(int m, const Scalar& kappa1, const Scalar& kappa2);
Scalar constant_a2(int j, const Scalar& kappa2, const Scalar& gamma2);
Scalar constant_B(int k, int n, int m, const Scalar& kappa_k, const Scalar& gamma_km1);
Scalar constant_b(int k, int n, int j, const Scalar& kappa_k, const Scalar& gamma_k);
// Change-of-basis constant c_j of Phi^j_s = c_j Psi^j_{j.s}.
Scalar constant_c(const Setup& s, const MultiIndex& label);
// The spinor twist j.s = e_d^{j_{d-1}} ... e_3^{j_2} (e_2 e_1)^{j_1} s.
SpinorPoly spinor_twist(const Setup& s, const MultiIndex& label, int spinor_index);

struct FischerReport {
    bool ok = false;
    int degree = 0;
    int expected_rank = 0;
    int rank = 0;
    std::string detail;
};

// Verifies P_n tensor V = direct sum of xun^{n-k} M_k by stacking the lifted
// maxwell bases and certifying full exact rank.
FischerReport fischer_check(const Setup& s, int n);

// dim M_n = C(n+d-2, d-2) * dim V
int monogenic_dimension(const Setup& s, int n);

}  // namespace dunkl
