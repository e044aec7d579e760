#include "dunkl/operator_expr.hpp"

#include "dunkl/error.hpp"

namespace dunkl {

WeightedElement OperatorExpr::apply(const Setup& s, const WeightedElement& f) const {
    switch (kind_) {
        case Kind::identity:
            return f;
        case Kind::scalar_mul:
            return f.scaled(coeff_);
        case Kind::dunkl:
            return dunkl(s, j_, f);
        case Kind::mul_x:
            return mul_x(s, j_, f);
        case Kind::mul_xsq:
            return mul_xsq(s, f, level_);
        case Kind::clifford:
            return mul_clifford_impl(s, f);
        case Kind::reflect:
            return apply_reflection(s, j_, f);
        case Kind::double_cover:
            return apply_double_cover(s, j_, f);
        case Kind::euler:
            return euler_op(s, f, level_);
        case Kind::hop:
            return h_op(s, f, level_);
        case Kind::lap:
            return laplacian(s, f, level_);
        case Kind::dirac:
            return ::dunkl::dirac(s, f, level_);
        case Kind::vecx:
            return vecx(s, f, level_);
        case Kind::osym:
            return osym(s, j_, f, level_);
        case Kind::maxwell:
            return maxwell_m(s, j_, f);
        case Kind::zsym:
            return z_op(s, j_, f, level_);
        case Kind::kelvin_k:
            return ::dunkl::kelvin_K(s, f);
        case Kind::kelvin_i:
            return ::dunkl::kelvin_I(s, f);
        case Kind::compose: {
            WeightedElement out = f;
            for (auto it = children_.rbegin(); it != children_.rend(); ++it)
                out = it->apply(s, out);
            return out;
        }
        case Kind::sum: {
            WeightedElement out(f.dim(), f.spinor_dim());
            for (const auto& child : children_) out += child.apply(s, f);
            return out;
        }
        case Kind::power: {
            WeightedElement out = f;
            for (int t = 0; t < exponent_; ++t) out = children_[0].apply(s, out);
            return out;
        }
    }
    throw error("unreachable operator kind");
}

SpinorPoly OperatorExpr::apply(const Setup& s, const SpinorPoly& f) const {
    return apply(s, WeightedElement(f)).to_spinor_poly();
}

OperatorExpr OperatorExpr::operator*(const OperatorExpr& o) const {
    OperatorExpr out;
    out.kind_ = Kind::compose;
    if (kind_ == Kind::compose)
        out.children_ = children_;
    else
        out.children_.push_back(*this);
    if (o.kind_ == Kind::compose)
        out.children_.insert(out.children_.end(), o.children_.begin(), o.children_.end());
    else
        out.children_.push_back(o);
    return out;
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& o) const {
    OperatorExpr out;
    out.kind_ = Kind::sum;
    if (kind_ == Kind::sum)
        out.children_ = children_;
    else
        out.children_.push_back(*this);
    if (o.kind_ == Kind::sum)
        out.children_.insert(out.children_.end(), o.children_.begin(), o.children_.end());
    else
        out.children_.push_back(o);
    return out;
}

OperatorExpr OperatorExpr::operator-(const OperatorExpr& o) const { return *this + (-o); }

OperatorExpr OperatorExpr::operator-() const { return scaled(Scalar(-1)); }

OperatorExpr OperatorExpr::scaled(const Scalar& c) const { return scalar(c) * *this; }

// factories ------------------------------------------------------------

OperatorExpr OperatorExpr::identity() { return OperatorExpr(); }

OperatorExpr OperatorExpr::zero() { return scalar(Scalar(0)); }

OperatorExpr OperatorExpr::scalar(Scalar c) {
    OperatorExpr e;
    e.kind_ = Kind::scalar_mul;
    e.coeff_ = std::move(c);
    return e;
}

OperatorExpr OperatorExpr::make(Kind kind, int j, int level) {
    OperatorExpr out;
    out.kind_ = kind;
    out.j_ = j;
    out.level_ = level;
    return out;
}

OperatorExpr OperatorExpr::dunkl_t(int j) { return make(Kind::dunkl, j, 0); }
OperatorExpr OperatorExpr::x(int j) { return make(Kind::mul_x, j, 0); }
OperatorExpr OperatorExpr::xsq(int level) { return make(Kind::mul_xsq, 0, level); }
OperatorExpr OperatorExpr::reflect(int alpha_idx) {
    return make(Kind::reflect, alpha_idx, 0);
}
OperatorExpr OperatorExpr::double_cover(int alpha_idx) {
    return make(Kind::double_cover, alpha_idx, 0);
}
OperatorExpr OperatorExpr::euler(int level) { return make(Kind::euler, 0, level); }
OperatorExpr OperatorExpr::h(int level) { return make(Kind::hop, 0, level); }
OperatorExpr OperatorExpr::lap(int level) { return make(Kind::lap, 0, level); }
OperatorExpr OperatorExpr::dirac(int level) { return make(Kind::dirac, 0, level); }
OperatorExpr OperatorExpr::vec_x(int level) { return make(Kind::vecx, 0, level); }
OperatorExpr OperatorExpr::o_sym(int j, int level) { return make(Kind::osym, j, level); }
OperatorExpr OperatorExpr::m_sym(int j) { return make(Kind::maxwell, j, 0); }
OperatorExpr OperatorExpr::z_sym(int j, int level) { return make(Kind::zsym, j, level); }
OperatorExpr OperatorExpr::kelvin_K() { return make(Kind::kelvin_k, 0, 0); }
OperatorExpr OperatorExpr::kelvin_I() { return make(Kind::kelvin_i, 0, 0); }

OperatorExpr OperatorExpr::e(int j) {
    OperatorExpr out;
    out.kind_ = Kind::clifford;
    out.j_ = j;
    return out;
}

OperatorExpr OperatorExpr::clifford_mul(CliffordElement c) {
    OperatorExpr out;
    out.kind_ = Kind::clifford;
    out.cliff_ = std::move(c);
    return out;
}

OperatorExpr OperatorExpr::power(OperatorExpr base, int n) {
    if (n < 0) throw error("operator power must be nonnegative");
    OperatorExpr out;
    out.kind_ = Kind::power;
    out.exponent_ = n;
    out.children_.push_back(std::move(base));
    return out;
}

OperatorExpr OperatorExpr::commutator(const OperatorExpr& a, const OperatorExpr& b) {
    return a * b - b * a;
}

OperatorExpr OperatorExpr::anticommutator(const OperatorExpr& a, const OperatorExpr& b) {
    return a * b + b * a;
}

OperatorExpr OperatorExpr::multi_power(const MultiIndex& beta,
                                       const std::function<OperatorExpr(int)>& factor) {
    OperatorExpr out = identity();
    for (int j = 1; j <= beta.dim(); ++j)
        if (beta[j - 1] > 0) out = out * power(factor(j), beta[j - 1]);
    return out;
}

WeightedElement OperatorExpr::mul_clifford_impl(const Setup& s, const WeightedElement& f) const {
    if (cliff_) {
        const ScalarMatrix m = s.spinor.to_matrix(*cliff_);
        WeightedElement out(f.dim(), f.spinor_dim());
        for (const auto& [expnt, part] : f.parts()) out.add_part(expnt, part.clifford_apply(m));
        return out;
    }
    return mul_e(s, j_, f);
}

std::string OperatorExpr::str() const {
    switch (kind_) {
        case Kind::identity:
            return "1";
        case Kind::scalar_mul:
            return "(" + coeff_.str() + ")";
        case Kind::dunkl:
            return "T" + std::to_string(j_);
        case Kind::mul_x:
            return "x" + std::to_string(j_);
        case Kind::mul_xsq:
            return level_ ? "|x_[" + std::to_string(level_) + "]|^2" : "|x|^2";
        case Kind::clifford:
            return cliff_ ? "(" + cliff_->str() + ")" : "e" + std::to_string(j_);
        case Kind::reflect:
            return "sigma[" + std::to_string(j_) + "]";
        case Kind::double_cover:
            return "dcover[" + std::to_string(j_) + "]";
        case Kind::euler:
            return level_ ? "E_[" + std::to_string(level_) + "]" : "E";
        case Kind::hop:
            return level_ ? "H_[" + std::to_string(level_) + "]" : "H";
        case Kind::lap:
            return level_ ? "Lap_[" + std::to_string(level_) + "]" : "Lap";
        case Kind::dirac:
            return level_ ? "D_[" + std::to_string(level_) + "]" : "D";
        case Kind::vecx:
            return level_ ? "xun_[" + std::to_string(level_) + "]" : "xun";
        case Kind::osym:
            return (level_ ? "O_[" + std::to_string(level_) + "]," : "O") + std::to_string(j_);
        case Kind::maxwell:
            return "m" + std::to_string(j_);
        case Kind::zsym:
            return (level_ ? "z_[" + std::to_string(level_) + "]," : "z") + std::to_string(j_);
        case Kind::kelvin_k:
            return "K";
        case Kind::kelvin_i:
            return "I";
        case Kind::compose: {
            std::string out;
            for (const auto& c : children_) {
                if (!out.empty()) out += " ";
                out += c.str();
            }
            return out;
        }
        case Kind::sum: {
            std::string out = "(";
            for (size_t i = 0; i < children_.size(); ++i) {
                if (i > 0) out += " + ";
                out += children_[i].str();
            }
            return out + ")";
        }
        case Kind::power:
            return children_[0].str() + "^" + std::to_string(exponent_);
    }
    return "?";
}

IdentityReport verify_identity(const Setup& s, const OperatorExpr& lhs, const OperatorExpr& rhs,
                               int max_degree, int input_level) {
    const int vars = input_level == 0 ? s.dim() : input_level;
    for (int n = 0; n <= max_degree; ++n) {
        for (const MultiIndex& beta_small : monomials_of_degree(vars, n)) {
            MultiIndex beta(s.dim());
            for (int j = 0; j < vars; ++j) beta[j] = beta_small[j];
            for (int sv = 0; sv < s.spinor_dim(); ++sv) {
                const WeightedElement input(
                    SpinorPoly::monomial_spinor(beta, s.spinor_dim(), sv));
                const WeightedElement left = lhs.apply(s, input);
                const WeightedElement right = rhs.apply(s, input);
                if (left != right) {
                    IdentityReport rep;
                    rep.ok = false;
                    rep.counterexample = "input x^" + beta.str() + " s" + std::to_string(sv) +
                                         ": lhs = " + left.str() + " ; rhs = " + right.str();
                    return rep;
                }
            }
        }
    }
    return {};
}

}  // namespace dunkl
