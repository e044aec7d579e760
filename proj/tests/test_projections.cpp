#include <doctest.h>

#include "dunkl/projections.hpp"

using dunkl::MultiIndex;
using dunkl::Polynomial;
using dunkl::Scalar;
using dunkl::SpinorPoly;

namespace {

dunkl::Setup z2_setup(std::vector<Scalar> kappas, int eps = -1) {
    dunkl::GroupSpec spec;
    spec.family = dunkl::GroupSpec::Family::z2_power;
    spec.dim = static_cast<int>(kappas.size());
    spec.kappas = std::move(kappas);
    return dunkl::make_setup(spec, eps);
}

}  // namespace

TEST_CASE("proj_harmonic examples") {
    auto s = z2_setup({Scalar(1, 2), Scalar(1, 3), Scalar(1, 4)});
    const int d = 3;
    const SpinorPoly x1 = SpinorPoly::monomial_spinor(MultiIndex{1, 0, 0}, 2, 0);
    CHECK(dunkl::proj_harmonic(s, x1, 1) == x1);

    // x_1^2 -> x_1^2 - (1+2k_1)|x|^2/(d+2gamma)
    const SpinorPoly x1sq = SpinorPoly::monomial_spinor(MultiIndex{2, 0, 0}, 2, 0);
    const Scalar coeff = (Scalar(1) + Scalar(2) * s.group.coordinate_kappa(1)) /
                         (Scalar(d) + Scalar(2) * s.group.gamma());
    const SpinorPoly expect =
        x1sq - SpinorPoly::basis_spinor(d, 2, 0).mul_poly(dunkl::norm_squared(d)).scaled(coeff);
    const SpinorPoly got = dunkl::proj_harmonic(s, x1sq, 2);
    CHECK(got == expect);
    CHECK(dunkl::laplacian(s, got).is_zero());

    // already-harmonic inputs are fixed
    CHECK(dunkl::proj_harmonic(s, got, 2) == got);

    CHECK_THROWS_AS(dunkl::proj_harmonic(s, x1, 2), dunkl::error);
}

TEST_CASE("xu harmonics") {
    auto s = z2_setup({Scalar(1, 2), Scalar(1, 3)});
    const int d = 2;
    // H_{xi_1} = -(2 gamma + d - 2) x_1 = -m_1(1)
    const Polynomial h1 = dunkl::xu_harmonic(s, MultiIndex{1, 0});
    const Scalar expect = -(Scalar(2) * s.group.gamma() + Scalar(d) - Scalar(2));
    CHECK(h1 == Polynomial::variable(d, 1).scaled(expect));

    // theorem xu at beta = (1,1)
    const MultiIndex beta{1, 1};
    const Polynomial hb = dunkl::xu_harmonic(s, beta);
    SpinorPoly hs(d, 2);
    hs.comp(0) = hb;
    CHECK(dunkl::laplacian(s, hs).is_zero());
    const SpinorPoly proj =
        dunkl::proj_harmonic(s, SpinorPoly::monomial_spinor(beta, 2, 0), 2);
    const Scalar c = Scalar(4) * dunkl::pochhammer(
                                     s.group.gamma() - Scalar(1) + Scalar(d, 2), 2);
    CHECK(hs == proj.scaled(c));

    // relation sum_j H_{eta + 2 xi_j} = 0 at eta = 0
    Polynomial total(d);
    total += dunkl::xu_harmonic(s, MultiIndex{2, 0});
    total += dunkl::xu_harmonic(s, MultiIndex{0, 2});
    CHECK(total.is_zero());
}

TEST_CASE("proj_monogenic examples") {
    for (int eps : {-1, +1}) {
        auto s = z2_setup({Scalar(1, 2), Scalar(1, 3), Scalar(1, 4)}, eps);
        const int d = 3;
        // monogenic inputs are fixed: constants
        const SpinorPoly spinor = SpinorPoly::basis_spinor(d, 2, 1);
        CHECK(dunkl::proj_monogenic(s, spinor, 0) == spinor);

        // n=1: x_j s -> x_j s - eps (1+2 kappa_j) xun e_j s / (2(d/2+gamma))
        for (int j = 1; j <= d; ++j) {
            const SpinorPoly in = dunkl::mul_x(s, j, spinor);
            const Scalar coeff =
                Scalar(eps) * (Scalar(1) + Scalar(2) * s.group.coordinate_kappa(j)) /
                (Scalar(2) * s.h_shift());
            const SpinorPoly expect =
                in - dunkl::vecx(s, dunkl::mul_e(s, j, spinor)).scaled(coeff);
            const SpinorPoly got = dunkl::proj_monogenic(s, in, 1);
            CHECK(got == expect);
            CHECK(dunkl::dirac(s, got).is_zero());
        }
    }
}

TEST_CASE("proj_h_to_m factorization and guard") {
    auto s = z2_setup({Scalar(1, 2), Scalar(1, 3)});
    const int d = 2;
    for (int n = 0; n <= 3; ++n)
        for (const auto& beta : dunkl::monomials_of_degree(d, n))
            for (int sv = 0; sv < 2; ++sv) {
                const SpinorPoly p = SpinorPoly::monomial_spinor(beta, 2, sv);
                const SpinorPoly h = dunkl::proj_harmonic(s, p, n);
                CHECK(dunkl::proj_h_to_m(s, h) == dunkl::proj_monogenic(s, p, n));
            }
    // monogenic h is fixed
    const SpinorPoly m = dunkl::proj_monogenic(
        s, SpinorPoly::monomial_spinor(MultiIndex{1, 0}, 2, 0), 1);
    CHECK(dunkl::proj_h_to_m(s, m) == m);

    // guard: d=2, kappa=0, degree 0 input makes 2(n-1+d/2+gamma) = 0
    auto degenerate = z2_setup({Scalar(0), Scalar(0)});
    CHECK((Scalar(0 - 1) + degenerate.h_shift()).is_zero());
    CHECK_THROWS_AS(
        dunkl::proj_h_to_m(degenerate, SpinorPoly::basis_spinor(2, 2, 0)),
        dunkl::error);
    // with kappa > 0 the denominator at degree 0 is 2 gamma != 0
    CHECK(dunkl::proj_h_to_m(s, SpinorPoly::basis_spinor(2, 2, 0)) ==
          SpinorPoly::basis_spinor(2, 2, 0));
}

TEST_CASE("classical limit kappa = 0 degenerates to partial derivatives") {
    auto s = z2_setup({Scalar(0), Scalar(0)});
    const SpinorPoly p = SpinorPoly::monomial_spinor(MultiIndex{3, 1}, 2, 0);
    CHECK(dunkl::dunkl(s, 1, p) ==
          SpinorPoly::monomial_spinor(MultiIndex{2, 1}, 2, 0).scaled(Scalar(3)));
    const SpinorPoly h = dunkl::proj_harmonic(s, p, 4);
    CHECK(dunkl::laplacian(s, h).is_zero());
}
