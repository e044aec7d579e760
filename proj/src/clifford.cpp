#include "dunkl/clifford.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "dunkl/error.hpp"

namespace dunkl {

CliffordElement CliffordElement::one(int dim, int eps) {
    CliffordElement e(dim, eps);
    e.add_term(0, Scalar(1));
    return e;
}

CliffordElement CliffordElement::generator(int dim, int eps, int j) {
    if (j < 1 || j > dim) throw error("clifford generator index out of range");
    CliffordElement e(dim, eps);
    e.add_term(1u << (j - 1), Scalar(1));
    return e;
}

CliffordElement CliffordElement::vector(int eps, std::span<const Scalar> alpha) {
    CliffordElement e(static_cast<int>(alpha.size()), eps);
    for (size_t j = 0; j < alpha.size(); ++j) e.add_term(1u << j, alpha[j]);
    return e;
}

Scalar CliffordElement::coeff(uint32_t blade) const {
    auto it = blades_.find(blade);
    return it == blades_.end() ? Scalar(0) : it->second;
}

void CliffordElement::add_term(uint32_t blade, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = blades_.emplace(blade, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) blades_.erase(it);
    }
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement out(dim_, eps_);
    for (const auto& [b, c] : blades_) out.blades_.emplace(b, -c);
    return out;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
    if (dim_ != o.dim_ || eps_ != o.eps_) throw error("clifford session mismatch");
    for (const auto& [b, c] : o.blades_) add_term(b, c);
    return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    if (a.dim_ != b.dim_ || a.eps_ != b.eps_) throw error("clifford session mismatch");
    CliffordElement out(a.dim_, a.eps_);
    for (const auto& [ba, ca] : a.blades_)
        for (const auto& [bb, cb] : b.blades_) {
            // inversions: pairs (i in ba, j in bb) with i > j
            int inversions = 0;
            for (uint32_t rest = bb; rest != 0; rest &= rest - 1) {
                const uint32_t j = rest & (~rest + 1);  // lowest set bit
                inversions += std::popcount(ba & ~(j | (j - 1)));
            }
            const int contractions = std::popcount(ba & bb);
            Scalar sign((inversions % 2 == 0) ? 1 : -1);
            if (a.eps_ == -1 && contractions % 2 == 1) sign = -sign;
            out.add_term(ba ^ bb, ca * cb * sign);
        }
    return out;
}

CliffordElement CliffordElement::scaled(const Scalar& c) const {
    CliffordElement out(dim_, eps_);
    if (c.is_zero()) return out;
    for (const auto& [b, cc] : blades_) out.blades_.emplace(b, cc * c);
    return out;
}

std::string CliffordElement::str() const {
    if (blades_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : blades_) {
        std::string blade;
        for (int j = 0; j < dim_; ++j)
            if (b & (1u << j)) blade += "e" + std::to_string(j + 1);
        std::string term;
        if (blade.empty())
            term = c.str();
        else if (c.is_one())
            term = blade;
        else if (c == Scalar(-1))
            term = "-" + blade;
        else
            term = c.str() + "*" + blade;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

namespace {

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

}  // namespace

SpinorSpace SpinorSpace::build(int dim, int eps) {
    if (dim < 1) throw error("spinor space needs dim >= 1");
    if (eps != 1 && eps != -1) throw error("eps must be +1 or -1");
    const Scalar i = Scalar::imaginary_unit();

    ScalarMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx.at(0, 1) = Scalar(1);
    sx.at(1, 0) = Scalar(1);
    sy.at(0, 1) = -i;
    sy.at(1, 0) = i;
    sz.at(0, 0) = Scalar(1);
    sz.at(1, 1) = Scalar(-1);

    const int pairs = dim / 2;
    auto chain = [&](const ScalarMatrix& mid, int position) {
        ScalarMatrix m = ScalarMatrix::identity(1);
        for (int t = 0; t < position; ++t) m = kron(m, sz);
        m = kron(m, mid);
        for (int t = position + 1; t < pairs; ++t) m = kron(m, ScalarMatrix::identity(2));
        return m;
    };

    SpinorSpace v;
    v.dim_ = dim;
    v.eps_ = eps;
    for (int k = 0; k < pairs; ++k) {
        v.generators_.push_back(chain(sx, k));
        v.generators_.push_back(chain(sy, k));
    }
    if (dim % 2 == 1) {
        ScalarMatrix m = ScalarMatrix::identity(1);
        for (int t = 0; t < pairs; ++t) m = kron(m, sz);
        v.generators_.push_back(m);
    }
    if (eps == -1)
        for (auto& g : v.generators_) g = g.scaled(i);
    return v;
}

ScalarMatrix SpinorSpace::to_matrix(const CliffordElement& a) const {
    if (a.dim() != dim_ || a.eps() != eps_) throw error("clifford session mismatch");
    const int n = spinor_dim();
    ScalarMatrix out(n, n);
    for (const auto& [blade, c] : a.blades()) {
        ScalarMatrix m = ScalarMatrix::identity(n).scaled(c);
        for (int j = 0; j < dim_; ++j)
            if (blade & (1u << j)) m = m * generator(j + 1);
        out = out + m;
    }
    return out;
}

Scalar SpinorSpace::pseudoscalar_value() const {
    CliffordElement pseudo(dim_, eps_);
    pseudo.add_term((1u << dim_) - 1u, Scalar(1));
    const ScalarMatrix m = to_matrix(pseudo);
    return m.at(0, 0);
}

SpinorPoly SpinorPoly::basis_spinor(int dim, int spinor_dim, int index) {
    SpinorPoly s(dim, spinor_dim);
    s.comp(index) = Polynomial::constant(dim, Scalar(1));
    return s;
}

SpinorPoly SpinorPoly::monomial_spinor(const MultiIndex& beta, int spinor_dim, int index) {
    SpinorPoly s(beta.dim(), spinor_dim);
    s.comp(index) = Polynomial::monomial(beta, Scalar(1));
    return s;
}

bool SpinorPoly::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

int SpinorPoly::degree() const {
    int deg = -1;
    for (const auto& c : comps_) deg = std::max(deg, c.degree());
    return deg;
}

bool SpinorPoly::is_homogeneous(int n) const {
    for (const auto& c : comps_)
        if (!c.is_homogeneous(n)) return false;
    return true;
}

SpinorPoly SpinorPoly::operator-() const {
    SpinorPoly out = *this;
    for (auto& c : out.comps_) c = -c;
    return out;
}

SpinorPoly& SpinorPoly::operator+=(const SpinorPoly& o) {
    if (comps_.size() != o.comps_.size()) throw error("spinor dimension mismatch");
    for (size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

SpinorPoly& SpinorPoly::operator-=(const SpinorPoly& o) {
    if (comps_.size() != o.comps_.size()) throw error("spinor dimension mismatch");
    for (size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

SpinorPoly SpinorPoly::scaled(const Scalar& c) const {
    SpinorPoly out = *this;
    for (auto& comp : out.comps_) comp = comp.scaled(c);
    return out;
}

SpinorPoly SpinorPoly::mul_poly(const Polynomial& p) const {
    SpinorPoly out = *this;
    for (auto& comp : out.comps_) comp = comp * p;
    return out;
}

SpinorPoly SpinorPoly::clifford_apply(const ScalarMatrix& m) const {
    const int n = spinor_dim();
    if (m.rows() != n || m.cols() != n) throw error("spinor matrix shape mismatch");
    SpinorPoly out(dim(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j).is_zero() || comps_[static_cast<size_t>(j)].is_zero()) continue;
            out.comps_[static_cast<size_t>(i)] += comps_[static_cast<size_t>(j)].scaled(m.at(i, j));
        }
    return out;
}

SpinorPoly SpinorPoly::map_components(const std::function<Polynomial(const Polynomial&)>& f) const {
    SpinorPoly out = *this;
    for (auto& comp : out.comps_) comp = f(comp);
    return out;
}

std::vector<std::pair<int, SpinorPoly>> SpinorPoly::homogeneous_components() const {
    std::map<int, SpinorPoly> by_degree;
    for (int i = 0; i < spinor_dim(); ++i)
        for (const auto& [n, part] : comps_[static_cast<size_t>(i)].homogeneous_components()) {
            auto [it, inserted] = by_degree.emplace(n, SpinorPoly(dim(), spinor_dim()));
            it->second.comp(i) += part;
        }
    return {by_degree.begin(), by_degree.end()};
}

std::string SpinorPoly::str() const {
    std::string out;
    for (int i = 0; i < spinor_dim(); ++i) {
        if (i > 0) out += "; ";
        out += "s" + std::to_string(i) + ": " + comps_[static_cast<size_t>(i)].str();
    }
    return out;
}

}  // namespace dunkl
