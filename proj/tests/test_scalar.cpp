#include <doctest.h>

#include <random>

#include "dunkl/scalar.hpp"

using dunkl::Scalar;

namespace {

// random scalar with small entries; may carry sqrt(2) and imaginary parts
Scalar random_scalar(std::mt19937& rng, bool with_radical, bool with_imag) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    auto rat = [&] { return Scalar(num(rng), den(rng)); };
    Scalar s = rat();
    if (with_radical) s += rat() * Scalar::sqrt_of(2);
    if (with_imag) {
        Scalar im = rat();
        if (with_radical) im += rat() * Scalar::sqrt_of(2);
        s += im * Scalar::imaginary_unit();
    }
    return s;
}

}  // namespace

TEST_CASE("rational arithmetic is canonical and exact") {
    Scalar a(2, 4);
    CHECK(a == Scalar(1, 2));
    CHECK((a + Scalar(1, 3)) == Scalar(5, 6));
    CHECK((a * Scalar(2, 5)) == Scalar(1, 5));
    CHECK((Scalar(7) / Scalar(3)) == Scalar(7, 3));
    CHECK(Scalar(0).is_zero());
    CHECK_THROWS_AS(Scalar(1).operator/=(Scalar(0)), dunkl::error);
}

TEST_CASE("quadratic layer") {
    Scalar r2 = Scalar::sqrt_of(2);
    CHECK(r2 * r2 == Scalar(2));
    CHECK(Scalar::sqrt_of(8) == Scalar(2) * r2);
    CHECK(Scalar::sqrt_of(9) == Scalar(3));
    CHECK((Scalar(1) + r2) * (Scalar(1) - r2) == Scalar(-1));
    // inverse of 1 + sqrt(2) is sqrt(2) - 1
    CHECK((Scalar(1) + r2).inverse() == r2 - Scalar(1));
    CHECK_THROWS_AS(r2 + Scalar::sqrt_of(3), dunkl::error);
}

TEST_CASE("imaginary layer") {
    Scalar i = Scalar::imaginary_unit();
    CHECK(i * i == Scalar(-1));
    Scalar z = Scalar(1, 2) + Scalar(1, 3) * i;
    CHECK(z * z.inverse() == Scalar(1));
    CHECK(z.conjugate() == Scalar(1, 2) - Scalar(1, 3) * i);
}

TEST_CASE("pochhammer values") {
    CHECK(dunkl::pochhammer(Scalar(5, 7), 0) == Scalar(1));
    CHECK(dunkl::pochhammer(Scalar(3), 2) == Scalar(12));
    CHECK(dunkl::pochhammer(Scalar(1, 2), 3) == Scalar(15, 8));
}

TEST_CASE("pochhammer splitting identity (a)_{m+n} = (a)_m (a+m)_n") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 12; ++trial) {
        Scalar a = random_scalar(rng, trial % 2 == 0, false);
        for (unsigned m = 0; m <= 8; ++m)
            for (unsigned n = 0; n <= 8; ++n) {
                Scalar lhs = dunkl::pochhammer(a, m + n);
                Scalar rhs = dunkl::pochhammer(a, m) *
                             dunkl::pochhammer(a + Scalar(static_cast<long>(m)), n);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("field axiom spot checks") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = random_scalar(rng, true, true);
        Scalar b = random_scalar(rng, true, true);
        Scalar c = random_scalar(rng, true, true);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("printing and parsing round trip") {
    CHECK(Scalar(-3, 4).str() == "-3/4");
    CHECK((Scalar(1, 2) + Scalar(1, 3) * Scalar::sqrt_of(2)).str() == "1/2+1/3*sqrt(2)");
    CHECK(Scalar::from_string("1/2+1/3*sqrt(2)") ==
          Scalar(1, 2) + Scalar(1, 3) * Scalar::sqrt_of(2));
    CHECK(Scalar::from_string("-sqrt(2)") == -Scalar::sqrt_of(2));
    CHECK(Scalar::from_string("i") == Scalar::imaginary_unit());

    std::mt19937 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        Scalar s = random_scalar(rng, trial % 3 != 0, trial % 2 == 0);
        CAPTURE(s.str());
        CHECK(Scalar::from_string(s.str()) == s);
    }
}
