#include <doctest.h>

#include <random>

#include "dunkl/bases.hpp"
#include "dunkl/exact_linalg.hpp"

using dunkl::BasisSet;
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

const std::vector<Scalar> kappa3 = {Scalar(1, 2), Scalar(1, 3), Scalar(1, 4)};

}  // namespace

TEST_CASE("z_monogenic basics") {
    auto s = z2_setup(kappa3);
    CHECK(dunkl::z_monogenic(s, MultiIndex{0, 0, 0}, 1) ==
          SpinorPoly::basis_spinor(3, 2, 1));
    const SpinorPoly z2 = dunkl::z_monogenic(s, MultiIndex{0, 2, 1}, 0);
    CHECK(dunkl::dirac(s, z2).is_zero());
    CHECK(z2.is_homogeneous(3));
}

TEST_CASE("maxwell basis dimensions and certificates") {
    auto s = z2_setup(kappa3);
    for (int n = 0; n <= 3; ++n) {
        const BasisSet basis = dunkl::maxwell_basis(s, n);
        CHECK(static_cast<int>(basis.elements.size()) == 2 * (n + 1));
        CHECK(basis.rank == 2 * (n + 1));
        CHECK(basis.kernel_certified);
        for (const auto& el : basis.elements) CHECK(el.label[2] == 0);
    }
    // alternative elimination coordinate
    const BasisSet alt = dunkl::maxwell_basis(s, 2, 1);
    CHECK(alt.rank == 6);
    for (const auto& el : alt.elements) CHECK(el.label[0] == 0);
}

TEST_CASE("maxwell basis degree 0 is the spinor space") {
    auto s = z2_setup({Scalar(1, 2), Scalar(1, 3)});
    const BasisSet basis = dunkl::maxwell_basis(s, 0);
    REQUIRE(basis.elements.size() == 2);
    CHECK(basis.elements[0].value == SpinorPoly::basis_spinor(2, 2, 0));
    CHECK(basis.elements[1].value == SpinorPoly::basis_spinor(2, 2, 1));
}

TEST_CASE("ck_extend examples") {
    for (int eps : {-1, +1}) {
        auto s = z2_setup({Scalar(1, 2), Scalar(1, 3)}, eps);
        const SpinorPoly spinor = SpinorPoly::basis_spinor(2, 2, 0);
        CHECK(dunkl::ck_extend(s, 2, spinor) == spinor);

        // ck(2, x_1 s) = x_1 s - eps (1+2k_1)/(1+2k_2) x_2 e_2 e_1 s
        const SpinorPoly x1s = dunkl::mul_x(s, 1, spinor);
        const Scalar coeff = Scalar(eps) *
                             (Scalar(1) + Scalar(2) * s.group.coordinate_kappa(1)) /
                             (Scalar(1) + Scalar(2) * s.group.coordinate_kappa(2));
        const SpinorPoly expect =
            x1s - dunkl::mul_x(s, 2, dunkl::mul_e(s, 2, dunkl::mul_e(s, 1, spinor)))
                      .scaled(coeff);
        const SpinorPoly got = dunkl::ck_extend(s, 2, x1s);
        CHECK(got == expect);
        CHECK(dunkl::dirac(s, got, 2).is_zero());

        CHECK_THROWS_AS(dunkl::ck_extend(s, 2, dunkl::mul_x(s, 2, spinor)), dunkl::error);
    }
}

TEST_CASE("R_k inverts ck_extend on random inputs") {
    auto s = z2_setup(kappa3);
    std::mt19937 rng(1312);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, 2);
    for (int k : {2, 3})
        for (int trial = 0; trial < 8; ++trial) {
            SpinorPoly p(3, 2);
            for (int sv = 0; sv < 2; ++sv) {
                MultiIndex beta(3);
                for (int j = 0; j < k - 1; ++j) beta[j] = expo(rng);
                p.comp(sv).add_term(beta, Scalar(coeff(rng)));
            }
            const SpinorPoly ck = dunkl::ck_extend(s, k, p);
            CHECK(dunkl::restrict_var(s, k, ck) == p);
            CHECK(dunkl::dirac(s, ck, k).is_zero());
        }
}

TEST_CASE("ck basis matches the single-extension example at d=2, n=1") {
    auto s = z2_setup({Scalar(1, 2), Scalar(1, 3)});
    const BasisSet basis = dunkl::ck_basis(s, 1);
    REQUIRE(basis.elements.size() == 2);
    const SpinorPoly direct =
        dunkl::ck_extend(s, 2, dunkl::mul_x(s, 1, SpinorPoly::basis_spinor(2, 2, 0)));
    CHECK(basis.elements[0].value == direct);
}

TEST_CASE("ck and partial-z bases certified for z2^3") {
    auto s = z2_setup(kappa3);
    for (int n = 0; n <= 3; ++n) {
        const BasisSet ck = dunkl::ck_basis(s, n);
        const BasisSet pz = dunkl::partial_z_basis(s, n);
        CHECK(ck.rank == 2 * (n + 1));
        CHECK(pz.rank == 2 * (n + 1));
    }
}

TEST_CASE("section 5 constants") {
    const Scalar k1(1, 2), k2(1, 3);
    CHECK(dunkl::constant_A(0, k1, k2) == Scalar(1) + Scalar(2) * k2);
    CHECK(dunkl::constant_a2(1, k2, k1 + k2) == Scalar(2) * k2 + Scalar(1));
    CHECK(dunkl::constant_a2(1, k2, k1 + k2) == dunkl::constant_A(0, k1, k2));
    CHECK(dunkl::constant_b(3, 2, 0, Scalar(1, 4), Scalar(13, 12)) == Scalar(1));
    // induction consistency: A_m a_2^m = a_2^{m+1}
    for (int m = 0; m <= 5; ++m)
        CHECK(dunkl::constant_A(m, k1, k2) * dunkl::constant_a2(m, k2, k1 + k2) ==
              dunkl::constant_a2(m + 1, k2, k1 + k2));
    // and B_{k,n}^j b_{k,n}^j = b_{k,n}^{j+1}
    const Scalar kk(1, 4), g2 = k1 + k2, g3 = g2 + kk;
    for (int n = 0; n <= 2; ++n)
        for (int j = 0; j <= 4; ++j)
            CHECK(dunkl::constant_B(3, n, j, kk, g2) * dunkl::constant_b(3, n, j, kk, g3) ==
                  dunkl::constant_b(3, n, j + 1, kk, g3));
}

TEST_CASE("maxwellandck change of basis at d=3") {
    for (int eps : {-1, +1}) {
        auto s = z2_setup(kappa3, eps);
        for (const auto& label :
             {MultiIndex{1, 0, 0}, MultiIndex{0, 1, 0}, MultiIndex{1, 1, 0},
              MultiIndex{2, 1, 0}})
            for (int sv = 0; sv < 2; ++sv) {
                const SpinorPoly phi = dunkl::partial_z_tower(
                    s, label, SpinorPoly::basis_spinor(3, 2, sv));
                const SpinorPoly psi =
                    dunkl::ck_tower(s, label, dunkl::spinor_twist(s, label, sv));
                CHECK(phi == psi.scaled(dunkl::constant_c(s, label)));
            }
    }
}

TEST_CASE("maxwellandck at d=4 exercises the crossing sign") {
    // the (-1)^{j_k j_l} factor in c_j is first active at d = 4
    for (int eps : {-1, +1}) {
        auto s = z2_setup({Scalar(1, 2), Scalar(1, 3), Scalar(1, 5), Scalar(1, 7)}, eps);
        for (const auto& label : {MultiIndex{1, 1, 1, 0}, MultiIndex{0, 1, 1, 0},
                                  MultiIndex{1, 0, 1, 0}, MultiIndex{2, 1, 1, 0}})
            for (int sv = 0; sv < 4; ++sv) {
                const SpinorPoly phi = dunkl::partial_z_tower(
                    s, label, SpinorPoly::basis_spinor(4, 4, sv));
                const SpinorPoly psi =
                    dunkl::ck_tower(s, label, dunkl::spinor_twist(s, label, sv));
                CHECK(phi == psi.scaled(dunkl::constant_c(s, label)));
            }
    }
}

TEST_CASE("fischer decomposition") {
    auto s2 = z2_setup({Scalar(1, 2), Scalar(1, 3)});
    const auto rep2 = dunkl::fischer_check(s2, 2);
    CHECK(rep2.ok);
    CHECK(rep2.rank == 6);  // 3 blocks of size 2

    auto s3 = z2_setup(kappa3);
    const auto rep3 = dunkl::fischer_check(s3, 3);
    CHECK(rep3.ok);
    CHECK(rep3.rank == 20);  // C(5,2) * 2

    CHECK(dunkl::fischer_check(s3, 0).ok);

    auto degenerate = z2_setup({Scalar(0), Scalar(1, 2)});
    CHECK_THROWS_AS(dunkl::fischer_check(degenerate, 1), dunkl::config_error);
}

TEST_CASE("basis solve round trip") {
    auto s = z2_setup(kappa3);
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (int n = 1; n <= 3; ++n) {
        SpinorPoly raw(3, 2);
        for (const auto& beta : dunkl::monomials_of_degree(3, n))
            for (int sv = 0; sv < 2; ++sv) raw.comp(sv).add_term(beta, Scalar(coeff(rng)));
        const SpinorPoly f = dunkl::proj_monogenic(s, raw, n);
        const BasisSet basis = dunkl::maxwell_basis(s, n);
        std::vector<std::vector<Scalar>> rows;
        for (const auto& el : basis.elements) rows.push_back(dunkl::vectorize(s, el.value, n));
        const auto coords = dunkl::solve_in_span(rows, dunkl::vectorize(s, f, n));
        REQUIRE(coords.has_value());
        SpinorPoly rebuilt(3, 2);
        for (size_t i = 0; i < rows.size(); ++i)
            rebuilt += basis.elements[i].value.scaled((*coords)[i]);
        CHECK(rebuilt == f);
    }
}

TEST_CASE("rellindep relation at small degree") {
    auto s = z2_setup(kappa3);
    // sum_j Z^{xi_j}_{e_j s} = 0
    for (int sv = 0; sv < 2; ++sv) {
        SpinorPoly total(3, 2);
        for (int j = 1; j <= 3; ++j) {
            const SpinorPoly ejs =
                dunkl::mul_e(s, j, SpinorPoly::basis_spinor(3, 2, sv));
            for (int sw = 0; sw < 2; ++sw) {
                const Scalar c = ejs.comp(sw).coeff(MultiIndex(3));
                if (!c.is_zero()) {
                    MultiIndex beta(3);
                    beta[j - 1] = 1;
                    total += dunkl::z_monogenic(s, beta, sw).scaled(c);
                }
            }
        }
        CHECK(total.is_zero());
    }
}
