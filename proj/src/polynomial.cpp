#include "dunkl/polynomial.hpp"

#include <algorithm>

#include "dunkl/error.hpp"
#include "dunkl/matrix.hpp"

namespace dunkl {

Polynomial Polynomial::constant(int dim, Scalar c) {
    Polynomial p(dim);
    p.add_term(MultiIndex(dim), c);
    return p;
}

Polynomial Polynomial::monomial(const MultiIndex& beta, Scalar c) {
    Polynomial p(beta.dim());
    p.add_term(beta, c);
    return p;
}

Polynomial Polynomial::variable(int dim, int j) {
    MultiIndex beta(dim);
    beta[j - 1] = 1;
    return monomial(beta, Scalar(1));
}

int Polynomial::degree() const {
    int deg = -1;
    for (const auto& [beta, c] : terms_) deg = std::max(deg, beta.degree());
    return deg;
}

bool Polynomial::is_homogeneous(int n) const {
    for (const auto& [beta, c] : terms_)
        if (beta.degree() != n) return false;
    return true;
}

Scalar Polynomial::coeff(const MultiIndex& beta) const {
    auto it = terms_.find(beta);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& beta, const Scalar& c) {
    if (c.is_zero()) return;
    if (beta.dim() != dim_) throw error("polynomial term dimension mismatch");
    auto [it, inserted] = terms_.emplace(beta, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(dim_);
    for (const auto& [beta, c] : terms_) out.terms_.emplace(beta, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (dim_ != o.dim_) throw error("polynomial dimension mismatch");
    for (const auto& [beta, c] : o.terms_) add_term(beta, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (dim_ != o.dim_) throw error("polynomial dimension mismatch");
    for (const auto& [beta, c] : o.terms_) add_term(beta, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.dim_ != b.dim_) throw error("polynomial dimension mismatch");
    Polynomial out(a.dim_);
    for (const auto& [ba, ca] : a.terms_)
        for (const auto& [bb, cb] : b.terms_) {
            MultiIndex sum = ba;
            for (int i = 0; i < sum.dim(); ++i) sum[i] += bb[i];
            out.add_term(sum, ca * cb);
        }
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(dim_);
    if (c.is_zero()) return out;
    for (const auto& [beta, coeff] : terms_) out.terms_.emplace(beta, coeff * c);
    return out;
}

Polynomial Polynomial::derivative(int j) const {
    Polynomial out(dim_);
    for (const auto& [beta, c] : terms_) {
        const int e = beta[j - 1];
        if (e == 0) continue;
        out.add_term(beta.plus_unit(j - 1, -1), c * Scalar(e));
    }
    return out;
}

Polynomial Polynomial::euler() const {
    Polynomial out(dim_);
    for (const auto& [beta, c] : terms_) {
        const int n = beta.degree();
        if (n == 0) continue;
        out.add_term(beta, c * Scalar(n));
    }
    return out;
}

Polynomial Polynomial::substitute_zero(int j) const {
    Polynomial out(dim_);
    for (const auto& [beta, c] : terms_)
        if (beta[j - 1] == 0) out.terms_.emplace(beta, c);
    return out;
}

Polynomial Polynomial::compose_linear(const ScalarMatrix& a) const {
    if (a.rows() != dim_ || a.cols() != dim_) throw error("compose_linear shape mismatch");
    // substitute x_j -> (A x)_j and expand; powers of the linear forms are
    // cached per coordinate
    std::vector<std::vector<Polynomial>> powers(static_cast<size_t>(dim_));
    for (int j = 0; j < dim_; ++j) {
        Polynomial lin(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (a.at(j, i).is_zero()) continue;
            lin += Polynomial::variable(dim_, i + 1).scaled(a.at(j, i));
        }
        powers[static_cast<size_t>(j)].push_back(Polynomial::constant(dim_, Scalar(1)));
        powers[static_cast<size_t>(j)].push_back(lin);
    }
    auto power = [&](int j, int e) -> const Polynomial& {
        auto& cache = powers[static_cast<size_t>(j)];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
        return cache[static_cast<size_t>(e)];
    };
    Polynomial out(dim_);
    for (const auto& [beta, c] : terms_) {
        Polynomial term = Polynomial::constant(dim_, c);
        for (int j = 0; j < dim_; ++j)
            if (beta[j] > 0) term = term * power(j, beta[j]);
        out += term;
    }
    return out;
}

std::vector<std::pair<int, Polynomial>> Polynomial::homogeneous_components() const {
    std::map<int, Polynomial> by_degree;
    for (const auto& [beta, c] : terms_) {
        auto [it, inserted] = by_degree.emplace(beta.degree(), Polynomial(dim_));
        it->second.terms_.emplace(beta, c);
    }
    return {by_degree.begin(), by_degree.end()};
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [beta, c] : terms_) {
        std::string cstr = c.str();
        const bool needs_parens = cstr.find_first_of("+-", 1) != std::string::npos ||
                                  !c.is_real();
        if (needs_parens) cstr = "(" + cstr + ")";
        std::string mono;
        for (int j = 0; j < dim_; ++j) {
            if (beta[j] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += "x" + std::to_string(j + 1);
            if (beta[j] > 1) mono += "^" + std::to_string(beta[j]);
        }
        std::string term;
        if (mono.empty())
            term = cstr;
        else if (cstr == "1")
            term = mono;
        else if (cstr == "-1")
            term = "-" + mono;
        else
            term = cstr + " * " + mono;
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

Polynomial pow(const Polynomial& p, unsigned n) {
    Polynomial out = Polynomial::constant(p.dim(), Scalar(1));
    for (unsigned i = 0; i < n; ++i) out = out * p;
    return out;
}

Polynomial linear_form(std::span<const Scalar> alpha) {
    const int dim = static_cast<int>(alpha.size());
    Polynomial out(dim);
    for (int j = 0; j < dim; ++j) {
        if (alpha[static_cast<size_t>(j)].is_zero()) continue;
        out += Polynomial::variable(dim, j + 1).scaled(alpha[static_cast<size_t>(j)]);
    }
    return out;
}

Polynomial norm_squared(int dim, int level) {
    if (level <= 0) level = dim;
    Polynomial out(dim);
    for (int j = 1; j <= level; ++j) {
        MultiIndex beta(dim);
        beta[j - 1] = 2;
        out.add_term(beta, Scalar(1));
    }
    return out;
}

Polynomial divide_by_linear_form(const Polynomial& p, std::span<const Scalar> alpha) {
    const int dim = p.dim();
    if (static_cast<int>(alpha.size()) != dim) throw error("divide_by_linear_form: bad alpha");
    int pivot = -1;
    for (int j = 0; j < dim; ++j)
        if (!alpha[static_cast<size_t>(j)].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0) throw error("divide_by_linear_form: zero linear form");
    const Scalar inv_pivot = alpha[static_cast<size_t>(pivot)].inverse();
    const Polynomial form = linear_form(alpha);

    // long division in x_{pivot}: repeatedly clear the term of highest
    // x_{pivot}-exponent until only the remainder (pivot-degree 0) is left
    Polynomial rem = p;
    Polynomial quot(dim);
    for (;;) {
        const MultiIndex* lead = nullptr;
        int lead_exp = 0;
        for (const auto& [beta, c] : rem.terms()) {
            if (beta[pivot] > lead_exp) {
                lead_exp = beta[pivot];
                lead = &beta;
            }
        }
        if (lead == nullptr) break;
        const Scalar c = rem.coeff(*lead) * inv_pivot;
        const Polynomial qterm = Polynomial::monomial(lead->plus_unit(pivot, -1), c);
        quot += qterm;
        rem -= qterm * form;
    }
    if (!rem.is_zero())
        throw error("divide_by_linear_form: nonzero remainder " + rem.str());
    return quot;
}

}  // namespace dunkl
