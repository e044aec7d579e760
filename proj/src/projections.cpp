#include "dunkl/projections.hpp"

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

Scalar factorial(int j) {
    Scalar out(1);
    for (int t = 2; t <= j; ++t) out *= Scalar(t);
    return out;
}

void require_homogeneous(const SpinorPoly& p, int n, const char* who) {
    if (!p.is_zero() && !p.is_homogeneous(n))
        throw error(std::string(who) + ": input is not homogeneous of degree " +
                    std::to_string(n));
}

Scalar checked_denominator(Scalar value, const char* who) {
    if (value.is_zero())
        throw error(std::string(who) + ": vanishing Pochhammer denominator");
    return value;
}

}  // namespace

SpinorPoly proj_harmonic(const Setup& s, const SpinorPoly& p, int n) {
    require_homogeneous(p, n, "proj_harmonic");
    SpinorPoly out = p;
    SpinorPoly lap_power = p;
    Polynomial xsq_power = Polynomial::constant(s.dim(), Scalar(1));
    const Polynomial xsq = norm_squared(s.dim());
    for (int j = 1; j <= n / 2; ++j) {
        lap_power = laplacian(s, lap_power);
        if (lap_power.is_zero()) break;
        xsq_power = xsq_power * xsq;
        const Scalar den = checked_denominator(
            pow(Scalar(2), static_cast<unsigned>(2 * j)) * factorial(j) *
                pochhammer(Scalar(-n) - Scalar(s.dim(), 2) - s.group.gamma() + Scalar(2),
                           static_cast<unsigned>(j)),
            "proj_harmonic");
        out += lap_power.mul_poly(xsq_power).scaled(den.inverse());
    }
    return out;
}

SpinorPoly proj_monogenic(const Setup& s, const SpinorPoly& p, int n, int level) {
    const int m = level == 0 ? s.dim() : level;
    require_homogeneous(p, n, "proj_monogenic");
    const Scalar gamma_m = s.group.gamma_partial(m);
    const Scalar shift = Scalar(m, 2) + gamma_m;

    // all needed Dirac powers of p; D^k p has degree n-k, so at most n are nonzero
    std::vector<SpinorPoly> dpow = {p};
    while (!dpow.back().is_zero()) dpow.push_back(dirac(s, dpow.back(), m));

    SpinorPoly out = p;
    // odd corrective sum: - eps sum_j (-1)^j xun^{2j+1} D^{2j+1} p / (2^{2j+1} j! (n-j-1+d/2+gamma)_{j+1})
    for (int j = 0; 2 * j + 1 < static_cast<int>(dpow.size()) && j <= (n + 1) / 2; ++j) {
        const SpinorPoly& num = dpow[static_cast<size_t>(2 * j + 1)];
        if (num.is_zero()) continue;
        const Scalar den = checked_denominator(
            pow(Scalar(2), static_cast<unsigned>(2 * j + 1)) * factorial(j) *
                pochhammer(Scalar(n - j - 1) + shift, static_cast<unsigned>(j + 1)),
            "proj_monogenic");
        SpinorPoly term = num;
        for (int t = 0; t < 2 * j + 1; ++t) term = vecx(s, term, m);
        const Scalar sign((j % 2 == 0) ? 1 : -1);
        out -= term.scaled(s.eps_scalar() * sign / den);
    }
    // even corrective sum: + sum_j (-1)^j |x|^{2j} Lap^j p / (2^{2j} j! (n-j+d/2+gamma)_j)
    const Polynomial xsq = norm_squared(s.dim(), m);
    Polynomial xsq_power = xsq;
    for (int j = 1; 2 * j < static_cast<int>(dpow.size()) && j <= n / 2; ++j) {
        // Lap^j = eps^j D^{2j}
        const SpinorPoly num =
            dpow[static_cast<size_t>(2 * j)].scaled(pow(s.eps_scalar(), static_cast<unsigned>(j)));
        if (!num.is_zero()) {
            const Scalar den = checked_denominator(
                pow(Scalar(2), static_cast<unsigned>(2 * j)) * factorial(j) *
                    pochhammer(Scalar(n - j) + shift, static_cast<unsigned>(j)),
                "proj_monogenic");
            const Scalar sign((j % 2 == 0) ? 1 : -1);
            out += num.mul_poly(xsq_power).scaled(sign / den);
        }
        xsq_power = xsq_power * xsq;
    }
    return out;
}

SpinorPoly proj_h_to_m(const Setup& s, const SpinorPoly& h) {
    if (h.is_zero()) return h;
    const int n = h.degree();
    require_homogeneous(h, n, "proj_h_to_m");
    const Scalar den = Scalar(2) * (Scalar(n - 1) + s.h_shift());
    if (den.is_zero())
        throw error("proj_h_to_m: vanishing denominator 2(n-1+d/2+gamma) at n=" +
                    std::to_string(n));
    return h - vecx(s, dirac(s, h)).scaled(s.eps_scalar() / den);
}

Polynomial xu_harmonic(const Setup& s, const MultiIndex& beta) {
    if (beta.dim() != s.dim()) throw error("xu_harmonic: bad multi-index length");
    WeightedElement f(SpinorPoly::basis_spinor(s.dim(), s.spinor_dim(), 0));
    f = kelvin_K(s, f);
    for (int j = s.dim(); j >= 1; --j)
        for (int t = 0; t < beta[j - 1]; ++t) f = dunkl(s, j, f);
    f = kelvin_K(s, f);
    if (!f.is_polynomial())
        throw error("xu_harmonic: non-polynomial residue (implementation fault)");
    return f.to_spinor_poly().comp(0);
}

}  // namespace dunkl
