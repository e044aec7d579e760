#include "dunkl/serialize.hpp"

#include <json.hpp>

namespace dunkl {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json meta_json(const Setup& s, const BasisSet& basis) {
    ordered_json meta;
    meta["group"] = s.group.spec().str();
    meta["d"] = s.dim();
    ordered_json kappas = ordered_json::array();
    for (int i = 0; i < s.group.root_count(); ++i) kappas.push_back(s.group.kappa(i).str());
    meta["kappa"] = kappas;
    meta["eps"] = s.eps;
    meta["degree"] = basis.degree;
    meta["kind"] = basis.kind;
    return meta;
}

ordered_json poly_json(const Polynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [beta, c] : p.terms()) {
        ordered_json exps = ordered_json::array();
        for (int j = 0; j < beta.dim(); ++j) exps.push_back(beta[j]);
        terms.push_back(ordered_json::array({exps, c.str()}));
    }
    return terms;
}

std::string latex_scalar(const Scalar& c) {
    std::string v = c.str();
    // p/q -> \frac{p}{q} for plain rationals; anything layered stays verbatim
    const auto slash = v.find('/');
    if (slash != std::string::npos && v.find_first_of("+*i(") == std::string::npos) {
        std::string num = v.substr(0, slash), den = v.substr(slash + 1);
        std::string sign;
        if (!num.empty() && num[0] == '-') {
            sign = "-";
            num = num.substr(1);
        }
        return sign + "\\tfrac{" + num + "}{" + den + "}";
    }
    return v;
}

std::string latex_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [beta, c] : p.terms()) {
        std::string mono;
        for (int j = 0; j < beta.dim(); ++j) {
            if (beta[j] == 0) continue;
            mono += "x_{" + std::to_string(j + 1) + "}";
            if (beta[j] > 1) mono += "^{" + std::to_string(beta[j]) + "}";
        }
        std::string coeff = latex_scalar(c);
        const bool wrap = !c.is_real() || coeff.find_first_of("+") != std::string::npos;
        if (wrap) coeff = "\\left(" + coeff + "\\right)";
        std::string term = mono.empty() ? coeff
                           : (coeff == "1")    ? mono
                           : (coeff == "-1")   ? "-" + mono
                                               : coeff + " " + mono;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

}  // namespace

std::string basis_to_json(const Setup& s, const BasisSet& basis) {
    ordered_json root;
    root["meta"] = meta_json(s, basis);
    ordered_json elements = ordered_json::array();
    for (const auto& el : basis.elements) {
        ordered_json entry;
        ordered_json label = ordered_json::array();
        for (int j = 0; j < el.label.dim(); ++j) label.push_back(el.label[j]);
        entry["label"] = label;
        entry["spinor_index"] = el.spinor_index;
        ordered_json comps = ordered_json::array();
        for (int sv = 0; sv < el.value.spinor_dim(); ++sv)
            comps.push_back(poly_json(el.value.comp(sv)));
        entry["components"] = comps;
        elements.push_back(entry);
    }
    root["elements"] = elements;
    root["certificates"] = {{"rank", basis.rank}, {"kernel", basis.kernel_certified}};
    return root.dump(2) + "\n";
}

std::string basis_to_csv(const Setup& s, const BasisSet& basis) {
    (void)s;
    std::string out = "label;spinor_index;component;exponents;coefficient\n";
    for (const auto& el : basis.elements) {
        std::string label;
        for (int j = 0; j < el.label.dim(); ++j) {
            if (j > 0) label += " ";
            label += std::to_string(el.label[j]);
        }
        for (int sv = 0; sv < el.value.spinor_dim(); ++sv)
            for (const auto& [beta, c] : el.value.comp(sv).terms()) {
                std::string exps;
                for (int j = 0; j < beta.dim(); ++j) {
                    if (j > 0) exps += " ";
                    exps += std::to_string(beta[j]);
                }
                out += label + ";" + std::to_string(el.spinor_index) + ";" +
                       std::to_string(sv) + ";" + exps + ";" + c.str() + "\n";
            }
    }
    return out;
}

std::string basis_to_latex(const Setup& s, const BasisSet& basis) {
    std::string out;
    out += "% " + basis.kind + " basis, degree " + std::to_string(basis.degree) + ", group " +
           s.group.spec().str() + ", eps = " + std::to_string(s.eps) + "\n";
    out += "\\begin{tabular}{lll}\n";
    out += "label & spinor & element \\\\\n\\hline\n";
    for (const auto& el : basis.elements) {
        std::string label = "(";
        for (int j = 0; j < el.label.dim(); ++j) {
            if (j > 0) label += ",";
            label += std::to_string(el.label[j]);
        }
        label += ")";
        std::string element;
        for (int sv = 0; sv < el.value.spinor_dim(); ++sv) {
            if (el.value.comp(sv).is_zero()) continue;
            if (!element.empty()) element += " + ";
            element += "\\left(" + latex_poly(el.value.comp(sv)) + "\\right) v_{" +
                       std::to_string(sv) + "}";
        }
        if (element.empty()) element = "0";
        out += "$" + label + "$ & $s_{" + std::to_string(el.spinor_index) + "}$ & $" + element +
               "$ \\\\\n";
    }
    out += "\\end{tabular}\n";
    return out;
}

}  // namespace dunkl
