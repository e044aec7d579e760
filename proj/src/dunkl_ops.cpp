#include "dunkl/dunkl_ops.hpp"

#include "dunkl/error.hpp"

namespace dunkl {

Setup make_setup(const GroupSpec& spec, int eps) {
    if (eps != 1 && eps != -1) throw config_error("eps must be +1 or -1");
    Setup s{RootSystem::build(spec), eps, SpinorSpace::build(spec.dim, eps), {}};
    for (int i = 0; i < s.group.root_count(); ++i)
        s.root_clifford.push_back(
            s.spinor.to_matrix(CliffordElement::vector(eps, s.group.root(i))));
    return s;
}

namespace {

int resolve_level(const Setup& s, int level) {
    if (level == 0) return s.dim();
    if (level < 1 || level > s.dim()) throw error("operator level out of range");
    return level;
}

}  // namespace

// ---------------------------------------------------------------------------
// SpinorPoly actions

SpinorPoly apply_reflection(const Setup& s, int alpha_idx, const SpinorPoly& f) {
    const ScalarMatrix& m = s.group.reflection(alpha_idx);
    return f.map_components([&m](const Polynomial& p) { return p.compose_linear(m); });
}

SpinorPoly apply_double_cover(const Setup& s, int alpha_idx, const SpinorPoly& f) {
    return apply_reflection(s, alpha_idx, f)
        .clifford_apply(s.root_clifford[static_cast<size_t>(alpha_idx)]);
}

Polynomial dunkl(const Setup& s, int j, const Polynomial& p) {
    Polynomial out = p.derivative(j);
    for (int i = 0; i < s.group.root_count(); ++i) {
        const Scalar& kappa = s.group.kappa(i);
        if (kappa.is_zero()) continue;
        const Scalar& alpha_j = s.group.root(i)[static_cast<size_t>(j - 1)];
        if (alpha_j.is_zero()) continue;
        const Polynomial diff = p - p.compose_linear(s.group.reflection(i));
        if (diff.is_zero()) continue;
        out += divide_by_linear_form(diff, s.group.root(i)).scaled(kappa * alpha_j);
    }
    return out;
}

SpinorPoly dunkl(const Setup& s, int j, const SpinorPoly& f) {
    return f.map_components([&](const Polynomial& p) { return dunkl(s, j, p); });
}

SpinorPoly dirac(const Setup& s, const SpinorPoly& f, int level) {
    const int m = resolve_level(s, level);
    SpinorPoly out = s.zero_spinor();
    for (int a = 1; a <= m; ++a) out += dunkl(s, a, f).clifford_apply(s.spinor.generator(a));
    return out;
}

SpinorPoly vecx(const Setup& s, const SpinorPoly& f, int level) {
    const int m = resolve_level(s, level);
    SpinorPoly out = s.zero_spinor();
    for (int a = 1; a <= m; ++a)
        out += f.clifford_apply(s.spinor.generator(a)).mul_poly(Polynomial::variable(s.dim(), a));
    return out;
}

SpinorPoly euler_op(const Setup& s, const SpinorPoly& f, int level) {
    const int m = resolve_level(s, level);
    if (m == s.dim()) return f.map_components([](const Polynomial& p) { return p.euler(); });
    SpinorPoly out = s.zero_spinor();
    for (int a = 1; a <= m; ++a) {
        const Polynomial xa = Polynomial::variable(s.dim(), a);
        out += f.map_components([&](const Polynomial& p) { return xa * p.derivative(a); });
    }
    return out;
}

SpinorPoly h_op(const Setup& s, const SpinorPoly& f, int level) {
    const int m = resolve_level(s, level);
    return euler_op(s, f, m) + f.scaled(s.h_shift_partial(m));
}

SpinorPoly laplacian(const Setup& s, const SpinorPoly& f, int level) {
    const int m = resolve_level(s, level);
    SpinorPoly out = s.zero_spinor();
    for (int a = 1; a <= m; ++a) out += dunkl(s, a, dunkl(s, a, f));
    return out;
}

SpinorPoly mul_x(const Setup& s, int j, const SpinorPoly& f) {
    return f.mul_poly(Polynomial::variable(s.dim(), j));
}

SpinorPoly mul_xsq(const Setup& s, const SpinorPoly& f, int level) {
    return f.mul_poly(norm_squared(s.dim(), resolve_level(s, level)));
}

SpinorPoly mul_e(const Setup& s, int j, const SpinorPoly& f) {
    return f.clifford_apply(s.spinor.generator(j));
}

SpinorPoly osym(const Setup& s, int j, const SpinorPoly& f, int level) {
    const int m = resolve_level(s, level);
    const PartialRealization part = s.group.partial(m);
    SpinorPoly out = s.zero_spinor();
    for (int idx : part.root_indices) {
        const Scalar& kappa = s.group.kappa(idx);
        if (kappa.is_zero()) continue;
        const Scalar& alpha_j = s.group.root(idx)[static_cast<size_t>(j - 1)];
        if (alpha_j.is_zero()) continue;
        out += apply_double_cover(s, idx, f).scaled(s.eps_scalar() * kappa * alpha_j);
    }
    return out;
}

SpinorPoly maxwell_m(const Setup& s, int j, const SpinorPoly& f) {
    const SpinorPoly hf = h_op(s, f) - f;
    return mul_x(s, j, hf).scaled(Scalar(2)) - mul_xsq(s, dunkl(s, j, f));
}

SpinorPoly z_op(const Setup& s, int j, const SpinorPoly& f, int level) {
    const int m = resolve_level(s, level);
    if (j > m) throw error("z operator direction exceeds its level");
    const SpinorPoly first = mul_x(s, j, h_op(s, f, m)).scaled(Scalar(2) * s.eps_scalar());
    return first - vecx(s, dunkl(s, j, vecx(s, f, m)), m);
}

// ---------------------------------------------------------------------------
// WeightedElement actions

namespace {

WeightedElement map_parts(const WeightedElement& f,
                          const std::function<SpinorPoly(const SpinorPoly&)>& op) {
    WeightedElement out(f.dim(), f.spinor_dim());
    for (const auto& [expnt, part] : f.parts()) out.add_part(expnt, op(part));
    return out;
}

}  // namespace

WeightedElement apply_reflection(const Setup& s, int alpha_idx, const WeightedElement& f) {
    return map_parts(f, [&](const SpinorPoly& p) { return apply_reflection(s, alpha_idx, p); });
}

WeightedElement apply_double_cover(const Setup& s, int alpha_idx, const WeightedElement& f) {
    return map_parts(f, [&](const SpinorPoly& p) { return apply_double_cover(s, alpha_idx, p); });
}

WeightedElement dunkl(const Setup& s, int j, const WeightedElement& f) {
    // T_j(|x|^s p) = |x|^s T_j p + s |x|^(s-2) x_j p  (Dunkl--Leibniz)
    WeightedElement out(f.dim(), f.spinor_dim());
    for (const auto& [expnt, part] : f.parts()) {
        out.add_part(expnt, dunkl(s, j, part));
        if (expnt != 0)
            out.add_part(expnt - 2, mul_x(s, j, part).scaled(Scalar(Rational(expnt))));
    }
    return out;
}

WeightedElement dirac(const Setup& s, const WeightedElement& f, int level) {
    const int m = resolve_level(s, level);
    WeightedElement out(f.dim(), f.spinor_dim());
    for (int a = 1; a <= m; ++a)
        out += map_parts(dunkl(s, a, f),
                         [&](const SpinorPoly& p) { return mul_e(s, a, p); });
    return out;
}

WeightedElement vecx(const Setup& s, const WeightedElement& f, int level) {
    const int m = resolve_level(s, level);
    return map_parts(f, [&](const SpinorPoly& p) { return vecx(s, p, m); });
}

WeightedElement euler_op(const Setup& s, const WeightedElement& f, int level) {
    // E |x|^s p = (s + n) |x|^s p for homogeneous p of degree n
    if (resolve_level(s, level) != s.dim())
        return WeightedElement(euler_op(s, f.to_spinor_poly(), level));
    WeightedElement out(f.dim(), f.spinor_dim());
    for (const auto& [expnt, part] : f.parts())
        for (const auto& [n, piece] : part.homogeneous_components())
            out.add_part(expnt, piece.scaled(Scalar(Rational(expnt) + n)));
    return out;
}

WeightedElement h_op(const Setup& s, const WeightedElement& f, int level) {
    if (resolve_level(s, level) != s.dim())
        return WeightedElement(h_op(s, f.to_spinor_poly(), level));
    return euler_op(s, f) + f.scaled(s.h_shift());
}

WeightedElement laplacian(const Setup& s, const WeightedElement& f, int level) {
    const int m = resolve_level(s, level);
    WeightedElement out(f.dim(), f.spinor_dim());
    for (int a = 1; a <= m; ++a) out += dunkl(s, a, dunkl(s, a, f));
    return out;
}

WeightedElement mul_x(const Setup& s, int j, const WeightedElement& f) {
    return map_parts(f, [&](const SpinorPoly& p) { return mul_x(s, j, p); });
}

WeightedElement mul_xsq(const Setup& s, const WeightedElement& f, int level) {
    const int m = resolve_level(s, level);
    return map_parts(f, [&](const SpinorPoly& p) { return mul_xsq(s, p, m); });
}

WeightedElement mul_e(const Setup& s, int j, const WeightedElement& f) {
    return map_parts(f, [&](const SpinorPoly& p) { return mul_e(s, j, p); });
}

WeightedElement osym(const Setup& s, int j, const WeightedElement& f, int level) {
    const int m = resolve_level(s, level);
    return map_parts(f, [&](const SpinorPoly& p) { return osym(s, j, p, m); });
}

WeightedElement maxwell_m(const Setup& s, int j, const WeightedElement& f) {
    const WeightedElement hf = h_op(s, f) - f;
    return mul_x(s, j, hf).scaled(Scalar(2)) - mul_xsq(s, dunkl(s, j, f));
}

WeightedElement z_op(const Setup& s, int j, const WeightedElement& f, int level) {
    const int m = resolve_level(s, level);
    if (j > m) throw error("z operator direction exceeds its level");
    if (m != s.dim())
        return WeightedElement(z_op(s, j, f.to_spinor_poly(), m));
    const WeightedElement first = mul_x(s, j, h_op(s, f)).scaled(Scalar(2) * s.eps_scalar());
    return first - vecx(s, dunkl(s, j, vecx(s, f)));
}

WeightedElement kelvin_K(const Setup& s, const WeightedElement& f) {
    if (!s.group.gamma().is_rational())
        throw error("kelvin transform needs a rational gamma");
    const Rational g = s.group.gamma().rational();
    const Rational base = -(2 * g + s.dim() - 2);
    WeightedElement out(f.dim(), f.spinor_dim());
    for (const auto& [expnt, part] : f.parts())
        for (const auto& [n, piece] : part.homogeneous_components())
            out.add_part(base - 2 * n - expnt, piece);
    return out;
}

WeightedElement kelvin_I(const Setup& s, const WeightedElement& f) {
    if (!s.group.gamma().is_rational())
        throw error("kelvin transform needs a rational gamma");
    const Rational g = s.group.gamma().rational();
    const Rational base = -(2 * g + s.dim());
    WeightedElement out(f.dim(), f.spinor_dim());
    for (const auto& [expnt, part] : f.parts())
        for (const auto& [n, piece] : part.homogeneous_components())
            out.add_part(base - 2 * n - expnt, vecx(s, piece));
    return out;
}

}  // namespace dunkl
