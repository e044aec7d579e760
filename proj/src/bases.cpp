#include "dunkl/bases.hpp"

#include "dunkl/error.hpp"
#include "dunkl/exact_linalg.hpp"

namespace dunkl {

namespace {

Scalar factorial(int j) {
    Scalar out(1);
    for (int t = 2; t <= j; ++t) out *= Scalar(t);
    return out;
}

std::vector<MultiIndex> basis_labels(int dim, int n, int eliminated) {
    std::vector<MultiIndex> out;
    for (const auto& beta : monomials_of_degree(dim, n))
        if (beta[eliminated - 1] == 0) out.push_back(beta);
    return out;
}

void certify(const Setup& s, BasisSet& basis, int expected_count) {
    if (static_cast<int>(basis.elements.size()) != expected_count)
        throw error(basis.kind + " basis has " + std::to_string(basis.elements.size()) +
                    " elements, expected " + std::to_string(expected_count));
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(basis.elements.size());
    for (const auto& el : basis.elements) {
        if (!dirac(s, el.value).is_zero())
            throw error(basis.kind + " element " + el.label.str() + " s" +
                        std::to_string(el.spinor_index) + " is not in the Dirac kernel");
        rows.push_back(vectorize(s, el.value, basis.degree));
    }
    basis.rank = exact_rank(rows);
    if (basis.rank != expected_count)
        throw error(basis.kind + " basis rank " + std::to_string(basis.rank) +
                    " below its cardinality " + std::to_string(expected_count) +
                    " (theorem violation)");
    basis.kernel_certified = true;
}

void require_z2(const Setup& s, const char* who) {
    if (!s.group.is_z2())
        throw config_error(std::string(who) + " requires the group Z2^d");
}

}  // namespace

int monogenic_dimension(const Setup& s, int n) {
    const int d = s.dim();
    if (d == 1) return n == 0 ? s.spinor_dim() : 0;
    // C(n+d-2, d-2)
    long binom = 1;
    for (int t = 1; t <= d - 2; ++t) binom = binom * (n + t) / t;
    return static_cast<int>(binom) * s.spinor_dim();
}

SpinorPoly z_monogenic(const Setup& s, const MultiIndex& beta, int spinor_index) {
    if (beta.dim() != s.dim()) throw error("z_monogenic: bad multi-index length");
    SpinorPoly out = SpinorPoly::basis_spinor(s.dim(), s.spinor_dim(), spinor_index);
    // z^beta = z_1^{beta_1} ... z_d^{beta_d}; the rightmost factor acts first
    for (int j = s.dim(); j >= 1; --j)
        for (int t = 0; t < beta[j - 1]; ++t) out = z_op(s, j, out);
    return out;
}

BasisSet maxwell_basis(const Setup& s, int n, int eliminated) {
    if (n < 0) throw error("maxwell_basis: negative degree");
    const int elim = eliminated == 0 ? s.dim() : eliminated;
    if (elim < 1 || elim > s.dim()) throw error("maxwell_basis: bad eliminated coordinate");
    BasisSet basis;
    basis.degree = n;
    basis.kind = "maxwell";
    for (const auto& label : basis_labels(s.dim(), n, elim))
        for (int sv = 0; sv < s.spinor_dim(); ++sv)
            basis.elements.push_back({label, sv, z_monogenic(s, label, sv)});
    certify(s, basis, monogenic_dimension(s, n));
    return basis;
}

BasisSet z_generating_set(const Setup& s, int n) {
    BasisSet set;
    set.degree = n;
    set.kind = "generating-set";
    for (const auto& label : monomials_of_degree(s.dim(), n))
        for (int sv = 0; sv < s.spinor_dim(); ++sv)
            set.elements.push_back({label, sv, z_monogenic(s, label, sv)});
    return set;
}

SpinorPoly ck_extend(const Setup& s, int k, const SpinorPoly& p) {
    require_z2(s, "ck_extend");
    if (k < 1 || k > s.dim()) throw error("ck_extend: variable index out of range");
    for (int sv = 0; sv < p.spinor_dim(); ++sv)
        for (const auto& [beta, c] : p.comp(sv).terms())
            for (int j = k; j <= s.dim(); ++j)
                if (beta[j - 1] != 0)
                    throw error("ck_extend: input depends on x" + std::to_string(j));
    if (k == 1) return p;  // D_[0] = 0, only the a = 0 term survives

    const Scalar kappa_k = s.group.coordinate_kappa(k);
    const Scalar minus_eps = -s.eps_scalar();
    const Polynomial xk = Polynomial::variable(s.dim(), k);

    // the a-th term of each sum carries (-eps)^a; at eps = -1 this is the
    // classical form of the extension
    std::vector<SpinorPoly> dpow = {p};
    while (!dpow.back().is_zero()) dpow.push_back(dirac(s, dpow.back(), k - 1));

    SpinorPoly out(s.dim(), s.spinor_dim());
    Polynomial xk_pow = Polynomial::constant(s.dim(), Scalar(1));
    for (int a = 0; 2 * a < static_cast<int>(dpow.size()); ++a) {
        const Scalar sign = pow(minus_eps, static_cast<unsigned>(a));
        const Scalar even_den = pow(Scalar(2), static_cast<unsigned>(2 * a)) * factorial(a) *
                                pochhammer(kappa_k + Scalar(1, 2), static_cast<unsigned>(a));
        out += dpow[static_cast<size_t>(2 * a)].mul_poly(xk_pow).scaled(sign / even_den);
        if (2 * a + 1 < static_cast<int>(dpow.size()) &&
            !dpow[static_cast<size_t>(2 * a + 1)].is_zero()) {
            const Scalar odd_den = pow(Scalar(2), static_cast<unsigned>(2 * a + 1)) *
                                   factorial(a) *
                                   pochhammer(kappa_k + Scalar(1, 2), static_cast<unsigned>(a + 1));
            out += mul_e(s, k, dpow[static_cast<size_t>(2 * a + 1)].mul_poly(xk_pow * xk))
                       .scaled(sign * minus_eps / odd_den);
        }
        xk_pow = xk_pow * xk * xk;
    }
    return out;
}

SpinorPoly restrict_var(const Setup& s, int k, const SpinorPoly& f) {
    if (k < 1 || k > s.dim()) throw error("restrict_var: variable index out of range");
    return f.map_components([k](const Polynomial& p) { return p.substitute_zero(k); });
}

SpinorPoly ck_tower(const Setup& s, const MultiIndex& label, const SpinorPoly& spinor,
                    int up_to_level) {
    const int top = up_to_level == 0 ? s.dim() : up_to_level;
    SpinorPoly w = spinor;
    if (label[0] > 0)
        w = w.mul_poly(pow(Polynomial::variable(s.dim(), 1), static_cast<unsigned>(label[0])));
    for (int k = 2; k <= top; ++k) {
        w = ck_extend(s, k, w);
        if (k < top)
            for (int t = 0; t < label[k - 1]; ++t) w = vecx(s, w, k);
    }
    return w;
}

SpinorPoly partial_z_tower(const Setup& s, const MultiIndex& label, const SpinorPoly& spinor,
                           int up_to_level) {
    const int top = up_to_level == 0 ? s.dim() : up_to_level;
    SpinorPoly w = spinor;
    // z_[2]^{j_1} first, then up the tower; levels do not commute
    for (int level = 2; level <= top; ++level)
        for (int t = 0; t < label[level - 2]; ++t) w = z_op(s, level, w, level);
    return w;
}

BasisSet ck_basis(const Setup& s, int n) {
    require_z2(s, "ck_basis");
    BasisSet basis;
    basis.degree = n;
    basis.kind = "ck";
    for (const auto& label : basis_labels(s.dim(), n, s.dim()))
        for (int sv = 0; sv < s.spinor_dim(); ++sv)
            basis.elements.push_back(
                {label, sv,
                 ck_tower(s, label, SpinorPoly::basis_spinor(s.dim(), s.spinor_dim(), sv))});
    certify(s, basis, monogenic_dimension(s, n));
    return basis;
}

BasisSet partial_z_basis(const Setup& s, int n) {
    require_z2(s, "partial_z_basis");
    BasisSet basis;
    basis.degree = n;
    basis.kind = "partial-z";
    for (const auto& label : basis_labels(s.dim(), n, s.dim()))
        for (int sv = 0; sv < s.spinor_dim(); ++sv)
            basis.elements.push_back(
                {label, sv,
                 partial_z_tower(s, label, SpinorPoly::basis_spinor(s.dim(), s.spinor_dim(), sv))});
    certify(s, basis, monogenic_dimension(s, n));
    return basis;
}

Scalar constant_A(int m, const Scalar& kappa1, const Scalar& kappa2) {
    const Scalar parity(m % 2 == 0 ? 0 : 2);
    return Scalar(1 + m) + parity * kappa1 + Scalar(2) * kappa2;
}

Scalar constant_a2(int j, const Scalar& kappa2, const Scalar& gamma2) {
    return pow(Scalar(2), static_cast<unsigned>(j)) *
           pochhammer(kappa2 + Scalar(1, 2), static_cast<unsigned>((j + 1) / 2)) *
           pochhammer(gamma2 + Scalar(1), static_cast<unsigned>(j / 2));
}

Scalar constant_B(int k, int n, int m, const Scalar& kappa_k, const Scalar& gamma_km1) {
    const Scalar parity(m % 2 == 0 ? 0 : 1);
    const Scalar inner = Scalar(m + 1) + parity * (Scalar(2 * n + k - 2) + Scalar(2) * gamma_km1) +
                         Scalar(2) * kappa_k;
    return (m % 2 == 0 ? -inner : inner);
}

Scalar constant_b(int k, int n, int j, const Scalar& kappa_k, const Scalar& gamma_k) {
    const Scalar sign(((j + 1) / 2) % 2 == 0 ? 1 : -1);
    return sign * pow(Scalar(2), static_cast<unsigned>(j)) *
           pochhammer(kappa_k + Scalar(1, 2), static_cast<unsigned>((j + 1) / 2)) *
           pochhammer(gamma_k + Scalar(n) + Scalar(k, 2), static_cast<unsigned>(j / 2));
}

Scalar constant_c(const Setup& s, const MultiIndex& label) {
    require_z2(s, "constant_c");
    const int d = s.dim();
    const int n = label.degree();
    if (d == 1) return Scalar(1);  // only the empty label arises
    // crossing sign from moving e-factors past the vector variables
    int crossings = 0;
    for (int k = 3; k <= d - 1; ++k)
        for (int l = 2; l <= k - 1; ++l) crossings += label[k - 1] * label[l - 1];
    Scalar out(crossings % 2 == 0 ? 1 : -1);
    out *= pow(Scalar(2), static_cast<unsigned>(n));
    out *= pochhammer(Scalar(1, 2) + s.group.coordinate_kappa(2),
                      static_cast<unsigned>((label[0] + 1) / 2));
    out *= pochhammer(Scalar(1) + s.group.gamma_partial(2),
                      static_cast<unsigned>(label[0] / 2));
    for (int i = 2; i <= d - 1; ++i) {
        const int ji = label[i - 1];
        int prefix = 0;
        for (int t = 1; t <= i - 1; ++t) prefix += label[t - 1];
        const Scalar sign(((ji + 1) / 2) % 2 == 0 ? 1 : -1);
        out *= sign;
        out *= pochhammer(Scalar(1, 2) + s.group.coordinate_kappa(i + 1),
                          static_cast<unsigned>((ji + 1) / 2));
        out *= pochhammer(Scalar(i + 1, 2) + s.group.gamma_partial(i + 1) + Scalar(prefix),
                          static_cast<unsigned>(ji / 2));
    }
    return out;
}

SpinorPoly spinor_twist(const Setup& s, const MultiIndex& label, int spinor_index) {
    SpinorPoly out = SpinorPoly::basis_spinor(s.dim(), s.spinor_dim(), spinor_index);
    // (e_2 e_1)^{j_1} first, then e_3^{j_2}, ..., e_d^{j_{d-1}}
    for (int t = 0; t < label[0]; ++t) out = mul_e(s, 2, mul_e(s, 1, out));
    for (int i = 2; i <= s.dim() - 1; ++i)
        for (int t = 0; t < label[i - 1]; ++t) out = mul_e(s, i + 1, out);
    return out;
}

FischerReport fischer_check(const Setup& s, int n) {
    FischerReport report;
    report.degree = n;
    for (int i = 0; i < s.group.root_count(); ++i)
        if (s.group.kappa(i).is_zero())
            throw config_error("fischer_check requires strictly positive kappa");
    std::vector<std::vector<Scalar>> rows;
    std::vector<int> block_sizes;
    for (int k = 0; k <= n; ++k) {
        const BasisSet mk = maxwell_basis(s, k);
        block_sizes.push_back(static_cast<int>(mk.elements.size()));
        for (const auto& el : mk.elements) {
            SpinorPoly lifted = el.value;
            for (int t = 0; t < n - k; ++t) lifted = vecx(s, lifted);
            rows.push_back(vectorize(s, lifted, n));
        }
    }
    report.expected_rank =
        static_cast<int>(monomials_of_degree(s.dim(), n).size()) * s.spinor_dim();
    report.rank = exact_rank(rows);
    report.ok = report.rank == report.expected_rank &&
                static_cast<int>(rows.size()) == report.expected_rank;
    report.detail = "blocks";
    for (int b : block_sizes) report.detail += " " + std::to_string(b);
    report.detail += "; rank " + std::to_string(report.rank) + " of " +
                     std::to_string(report.expected_rank);
    return report;
}

}  // namespace dunkl
