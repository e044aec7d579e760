#include <doctest.h>

#include <algorithm>
#include <random>

#include "dunkl/exact_linalg.hpp"

using dunkl::MultiIndex;
using dunkl::Scalar;
using dunkl::SpinorPoly;

namespace {

// independent oracle: plain Gauss elimination with a different pivot choice
// (largest row index first) over the exact field
int rank_oracle(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    int rank = 0;
    size_t top = 0;
    for (size_t col = 0; col < cols && top < rows.size(); ++col) {
        size_t found = rows.size();
        for (size_t r = rows.size(); r-- > top;)
            if (!rows[r][col].is_zero()) {
                found = r;
                break;
            }
        if (found == rows.size()) continue;
        std::swap(rows[found], rows[top]);
        const Scalar inv = rows[top][col].inverse();
        for (size_t c = col; c < cols; ++c) rows[top][c] *= inv;
        for (size_t r = top + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const Scalar f = rows[r][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[top][c];
        }
        ++top;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Scalar>> random_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<std::vector<Scalar>> m(static_cast<size_t>(rows),
                                       std::vector<Scalar>(static_cast<size_t>(cols)));
    for (auto& r : m)
        for (auto& c : r) c = Scalar(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    std::vector<std::vector<Scalar>> id = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
    CHECK(dunkl::exact_rank(id) == 2);
    auto dup = id;
    dup.push_back(id[0]);
    CHECK(dunkl::exact_rank(dup) == 2);
    CHECK(dunkl::exact_rank({}) == 0);
    CHECK(dunkl::exact_rank({{Scalar(0), Scalar(0)}}) == 0);
}

TEST_CASE("rank agrees with the differently-pivoted oracle") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(rng, 5, 7);
        if (trial % 3 == 0) m[3] = m[1];  // force deficiency sometimes
        CHECK(dunkl::exact_rank(m) == rank_oracle(m));
    }
}

TEST_CASE("rank is invariant under row permutation and scaling") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix(rng, 4, 6);
        const int r = dunkl::exact_rank(m);
        std::shuffle(m.begin(), m.end(), rng);
        CHECK(dunkl::exact_rank(m) == r);
        for (auto& c : m[0]) c *= Scalar(3, 7);
        CHECK(dunkl::exact_rank(m) == r);
    }
}

TEST_CASE("solve_in_span recovers exact coordinates") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> num(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        auto rows = random_matrix(rng, 4, 6);
        std::vector<Scalar> combo(6);
        std::vector<Scalar> coeffs;
        for (size_t i = 0; i < rows.size(); ++i) coeffs.push_back(Scalar(num(rng)));
        for (size_t j = 0; j < 6; ++j) {
            Scalar acc(0);
            for (size_t i = 0; i < rows.size(); ++i) acc += coeffs[i] * rows[i][j];
            combo[j] = acc;
        }
        auto solved = dunkl::solve_in_span(rows, combo);
        REQUIRE(solved.has_value());
        // re-expand and compare (rows may be dependent, so coefficients can differ)
        for (size_t j = 0; j < 6; ++j) {
            Scalar acc(0);
            for (size_t i = 0; i < rows.size(); ++i) acc += (*solved)[i] * rows[i][j];
            CHECK(acc == combo[j]);
        }
    }
}

TEST_CASE("vectorize is the fixed coordinate map") {
    dunkl::GroupSpec spec;
    spec.family = dunkl::GroupSpec::Family::z2_power;
    spec.dim = 2;
    spec.kappas = {Scalar(1, 2), Scalar(1, 3)};
    const auto s = dunkl::make_setup(spec, -1);

    CHECK(dunkl::vectorize(s, SpinorPoly(2, 2), 1) ==
          std::vector<Scalar>(4, Scalar(0)));
    // x_1 s_1 at degree 1: monomial order is (0,1) < (1,0), spinor index minor
    const auto v = dunkl::vectorize(s, SpinorPoly::monomial_spinor(MultiIndex{1, 0}, 2, 1), 1);
    CHECK(v == std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
    CHECK_THROWS_AS(
        dunkl::vectorize(s, SpinorPoly::monomial_spinor(MultiIndex{1, 0}, 2, 0), 2),
        dunkl::error);

    // linearity on random pairs
    std::mt19937 rng(606);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        SpinorPoly f(2, 2), g(2, 2);
        for (const auto& beta : dunkl::monomials_of_degree(2, 2))
            for (int sv = 0; sv < 2; ++sv) {
                f.comp(sv).add_term(beta, Scalar(coeff(rng)));
                g.comp(sv).add_term(beta, Scalar(coeff(rng)));
            }
        const auto vf = dunkl::vectorize(s, f, 2);
        const auto vg = dunkl::vectorize(s, g, 2);
        const auto vsum = dunkl::vectorize(s, f + g, 2);
        for (size_t i = 0; i < vf.size(); ++i) CHECK(vsum[i] == vf[i] + vg[i]);
    }
}

TEST_CASE("solve_in_span detects no-solution") {
    std::vector<std::vector<Scalar>> rows = {{Scalar(1), Scalar(0), Scalar(0)},
                                             {Scalar(0), Scalar(1), Scalar(0)}};
    CHECK_FALSE(dunkl::solve_in_span(rows, {Scalar(0), Scalar(0), Scalar(1)}).has_value());
    CHECK(dunkl::solve_in_span(rows, {Scalar(2), Scalar(-3), Scalar(0)}).has_value());
}
