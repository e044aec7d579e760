#pragma once

#include "dunkl/dunkl_ops.hpp"

namespace dunkl {

// Projection P_n tensor V -> H_n tensor V:
//   sum_{j=0}^{floor(n/2)} |x|^2j Lap^j p / (2^2j j! (-n-d/2-gamma+2)_j).
// A vanishing Pochhammer denominator against a nonzero numerator term is a
// hard error (cannot happen for kappa >= 0).
SpinorPoly proj_harmonic(const Setup& s, const SpinorPoly& p, int n);

// Projection P_n tensor V -> M_n tensor V (level-restricted when `level` is
// given): p minus the odd xun/D corrective sum plus the even |x|^2/Lap sum.
SpinorPoly proj_monogenic(const Setup& s, const SpinorPoly& p, int n, int level = 0);

// (1 - eps xun D / (2(n-1+d/2+gamma))) h for harmonic homogeneous h; the
// degree n is read off h. Guards against the vanishing denominator.
SpinorPoly proj_h_to_m(const Setup& s, const SpinorPoly& h);

// Xu's Dunkl harmonic H_beta = K T^beta K (1), computed through weighted
// elements; the result is a plain polynomial of degree |beta|_1.
Polynomial xu_harmonic(const Setup& s, const MultiIndex& beta);

}  // namespace dunkl
