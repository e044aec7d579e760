#include <doctest.h>

#include <random>

#include "dunkl/matrix.hpp"
#include "dunkl/polynomial.hpp"

using dunkl::MultiIndex;
using dunkl::Polynomial;
using dunkl::Scalar;

namespace {

Polynomial random_poly(std::mt19937& rng, int dim, int max_degree, int terms) {
    std::uniform_int_distribution<int> expo(0, max_degree);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 5);
    Polynomial p(dim);
    for (int t = 0; t < terms; ++t) {
        MultiIndex beta(dim);
        for (int j = 0; j < dim; ++j) beta[j] = expo(rng) / dim;
        p.add_term(beta, Scalar(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("reverse lexicographic enumeration") {
    auto ms = dunkl::monomials_of_degree(3, 2);
    REQUIRE(ms.size() == 6);
    CHECK(ms[0] == MultiIndex{0, 0, 2});
    CHECK(ms[1] == MultiIndex{0, 1, 1});
    CHECK(ms[2] == MultiIndex{1, 0, 1});
    CHECK(ms[3] == MultiIndex{0, 2, 0});
    CHECK(ms[4] == MultiIndex{1, 1, 0});
    CHECK(ms[5] == MultiIndex{2, 0, 0});
    CHECK(dunkl::monomials_of_degree(1, 4).size() == 1);
}

TEST_CASE("ring operations") {
    const int d = 2;
    Polynomial x1 = Polynomial::variable(d, 1);
    Polynomial x2 = Polynomial::variable(d, 2);
    CHECK(x1 * x1 == Polynomial::monomial(MultiIndex{2, 0}, Scalar(1)));
    CHECK((x1 + x2) * (x1 - x2) ==
          Polynomial::monomial(MultiIndex{2, 0}, Scalar(1)) -
              Polynomial::monomial(MultiIndex{0, 2}, Scalar(1)));
    CHECK((x1 + x2).scaled(Scalar(0)).is_zero());
    CHECK((x1 + x2).scaled(Scalar(0)).term_count() == 0);
}

TEST_CASE("euler operator") {
    const int d = 2;
    Polynomial p = Polynomial::monomial(MultiIndex{2, 1}, Scalar(1));
    CHECK(p.euler() == p.scaled(Scalar(3)));
    CHECK(Polynomial::constant(d, Scalar(5)).euler().is_zero());
    Polynomial q = Polynomial::variable(d, 1) + Polynomial::monomial(MultiIndex{0, 2}, Scalar(1));
    Polynomial expect =
        Polynomial::variable(d, 1) + Polynomial::monomial(MultiIndex{0, 2}, Scalar(2));
    CHECK(q.euler() == expect);
}

TEST_CASE("euler is a derivation") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial p = random_poly(rng, 3, 4, 4);
        Polynomial q = random_poly(rng, 3, 4, 4);
        CHECK((p * q).euler() == p.euler() * q + p * q.euler());
    }
}

TEST_CASE("homogeneous components") {
    const int d = 2;
    Polynomial p = Polynomial::variable(d, 1) + Polynomial::monomial(MultiIndex{0, 2}, Scalar(1));
    auto comps = p.homogeneous_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == 1);
    CHECK(comps[0].second == Polynomial::variable(d, 1));
    CHECK(comps[1].first == 2);
    CHECK(Polynomial(d).homogeneous_components().empty());
    auto constant = Polynomial::constant(d, Scalar(7)).homogeneous_components();
    REQUIRE(constant.size() == 1);
    CHECK(constant[0].first == 0);
}

TEST_CASE("divide_by_linear_form") {
    const int d = 2;
    std::vector<Scalar> e1 = {Scalar(1), Scalar(0)};
    // (x1^3 - (-x1)^3) / x1 = 2 x1^2
    Polynomial p = Polynomial::monomial(MultiIndex{3, 0}, Scalar(2));
    CHECK(dunkl::divide_by_linear_form(p, e1) ==
          Polynomial::monomial(MultiIndex{2, 0}, Scalar(2)));
    CHECK(dunkl::divide_by_linear_form(Polynomial(d), e1).is_zero());

    // B2 diagonal root: (x1-x2)(x1+x2) / ((x1-x2)/sqrt(2)) = sqrt(2)(x1+x2)
    Scalar r2inv = Scalar(1) / Scalar::sqrt_of(2);
    std::vector<Scalar> alpha = {r2inv, -r2inv};
    Polynomial x1 = Polynomial::variable(d, 1);
    Polynomial x2 = Polynomial::variable(d, 2);
    Polynomial q = dunkl::divide_by_linear_form((x1 - x2) * (x1 + x2), alpha);
    CHECK(q == (x1 + x2).scaled(Scalar::sqrt_of(2)));

    CHECK_THROWS_AS(dunkl::divide_by_linear_form(x2, e1), dunkl::error);
}

TEST_CASE("division inverts multiplication by the form") {
    std::mt19937 rng(31337);
    std::vector<Scalar> alpha = {Scalar(1, 2), Scalar(-2, 3), Scalar(1)};
    Polynomial form = dunkl::linear_form(alpha);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial q = random_poly(rng, 3, 3, 5);
        CHECK(dunkl::divide_by_linear_form(q * form, alpha) == q);
    }
}

TEST_CASE("compose_linear applies a substitution") {
    const int d = 2;
    dunkl::ScalarMatrix swap(2, 2);
    swap.at(0, 1) = Scalar(1);
    swap.at(1, 0) = Scalar(1);
    Polynomial p = Polynomial::monomial(MultiIndex{2, 1}, Scalar(3));
    CHECK(p.compose_linear(swap) == Polynomial::monomial(MultiIndex{1, 2}, Scalar(3)));
    CHECK(Polynomial::constant(d, Scalar(4)).compose_linear(swap) ==
          Polynomial::constant(d, Scalar(4)));
}

TEST_CASE("printing") {
    const int d = 3;
    Polynomial p = Polynomial::monomial(MultiIndex{2, 1, 0}, Scalar(3, 2)) -
                   Polynomial::variable(d, 3).scaled(Scalar(1, 3));
    CHECK(p.str() == "-1/3 * x3 + 3/2 * x1^2 x2");  // revlex order: degree-1 term first
    CHECK(Polynomial(d).str() == "0");
}
