#pragma once

#include "dunkl/setup.hpp"
#include "dunkl/weighted.hpp"

namespace dunkl {

// Primitive linear actions on P tensor V and on radially weighted elements.
// `level` selects the partial realisation restricted to the first `level`
// coordinates; 0 means the full dimension d. Partial Euler/H make sense only
// on plain polynomials (a radial weight |x|^s mixes all coordinates), so the
// weighted overloads reject level < d.

// sigma_alpha acting on the polynomial argument only
SpinorPoly apply_reflection(const Setup& s, int alpha_idx, const SpinorPoly& f);
// underline(alpha) sigma_alpha, the double cover generator
SpinorPoly apply_double_cover(const Setup& s, int alpha_idx, const SpinorPoly& f);

Polynomial dunkl(const Setup& s, int j, const Polynomial& p);
SpinorPoly dunkl(const Setup& s, int j, const SpinorPoly& f);
SpinorPoly dirac(const Setup& s, const SpinorPoly& f, int level = 0);
SpinorPoly vecx(const Setup& s, const SpinorPoly& f, int level = 0);
SpinorPoly euler_op(const Setup& s, const SpinorPoly& f, int level = 0);
SpinorPoly h_op(const Setup& s, const SpinorPoly& f, int level = 0);
SpinorPoly laplacian(const Setup& s, const SpinorPoly& f, int level = 0);
SpinorPoly mul_x(const Setup& s, int j, const SpinorPoly& f);
SpinorPoly mul_xsq(const Setup& s, const SpinorPoly& f, int level = 0);
SpinorPoly mul_e(const Setup& s, int j, const SpinorPoly& f);
SpinorPoly osym(const Setup& s, int j, const SpinorPoly& f, int level = 0);
// m_j = 2 x_j (H - 1) - |x|^2 T_j
SpinorPoly maxwell_m(const Setup& s, int j, const SpinorPoly& f);
// z_j = 2 eps x_j H_[M] - xun_[M] T_j xun_[M]
SpinorPoly z_op(const Setup& s, int j, const SpinorPoly& f, int level = 0);

WeightedElement apply_reflection(const Setup& s, int alpha_idx, const WeightedElement& f);
WeightedElement apply_double_cover(const Setup& s, int alpha_idx, const WeightedElement& f);
WeightedElement dunkl(const Setup& s, int j, const WeightedElement& f);
WeightedElement dirac(const Setup& s, const WeightedElement& f, int level = 0);
WeightedElement vecx(const Setup& s, const WeightedElement& f, int level = 0);
WeightedElement euler_op(const Setup& s, const WeightedElement& f, int level = 0);
WeightedElement h_op(const Setup& s, const WeightedElement& f, int level = 0);
WeightedElement laplacian(const Setup& s, const WeightedElement& f, int level = 0);
WeightedElement mul_x(const Setup& s, int j, const WeightedElement& f);
WeightedElement mul_xsq(const Setup& s, const WeightedElement& f, int level = 0);
WeightedElement mul_e(const Setup& s, int j, const WeightedElement& f);
WeightedElement osym(const Setup& s, int j, const WeightedElement& f, int level = 0);
WeightedElement maxwell_m(const Setup& s, int j, const WeightedElement& f);
WeightedElement z_op(const Setup& s, int j, const WeightedElement& f, int level = 0);

// Kelvin transform K_kappa: per homogeneous piece of total homogeneity
// h = n + s, multiplies by |x|^(-(2 gamma + d - 2) - 2h).
WeightedElement kelvin_K(const Setup& s, const WeightedElement& f);
// Dunkl--Clifford--Kelvin I_kappa: |x|^(-(2 gamma + d) - 2h) times xun * piece.
WeightedElement kelvin_I(const Setup& s, const WeightedElement& f);

}  // namespace dunkl
