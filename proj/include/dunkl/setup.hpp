#pragma once

#include <vector>

#include "dunkl/clifford.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

// Everything a session needs: the reflection group, the Clifford sign, the
// concrete spinor module and a few cached matrices.
struct Setup {
    RootSystem group;
    int eps = -1;
    SpinorSpace spinor;
    std::vector<ScalarMatrix> root_clifford;  // to_matrix(underline(alpha)) per root

    int dim() const { return group.dim(); }
    int spinor_dim() const { return spinor.spinor_dim(); }
    Scalar eps_scalar() const { return Scalar(eps); }
    // d/2 + gamma, the H-shift
    Scalar h_shift() const { return Scalar(dim(), 2) + group.gamma(); }
    Scalar h_shift_partial(int level) const {
        return Scalar(level, 2) + group.gamma_partial(level);
    }

    SpinorPoly zero_spinor() const { return SpinorPoly(dim(), spinor_dim()); }
};

Setup make_setup(const GroupSpec& spec, int eps);

}  // namespace dunkl
