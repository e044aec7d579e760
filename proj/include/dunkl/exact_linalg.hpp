#pragma once

#include <optional>
#include <vector>

#include "dunkl/setup.hpp"

namespace dunkl {

// Coefficients of a homogeneous degree-n element of P tensor V in the fixed
// (reverse-lex monomial) x (spinor index) order. Linear and injective.
std::vector<Scalar> vectorize(const Setup& s, const SpinorPoly& f, int n);

// Exact rank by fraction-free (Bareiss) elimination; pivot = first nonzero row
// in the current column, scanned top down, for determinism.
int exact_rank(std::vector<std::vector<Scalar>> rows);

// Coefficients c with sum_i c_i rows[i] = target, or nullopt when target is
// outside the span. Free coefficients are set to zero.
std::optional<std::vector<Scalar>> solve_in_span(const std::vector<std::vector<Scalar>>& rows,
                                                 const std::vector<Scalar>& target);

}  // namespace dunkl
