#include "dunkl/root_system.hpp"

#include <algorithm>
#include <sstream>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// sqrt of a nonneg rational scalar, exact or throws
Scalar rational_sqrt(const Scalar& value) {
    if (!value.is_rational())
        throw config_error("root norm " + value.str() + " is not rational; cannot normalize");
    const Rational& r = value.rational();
    if (r < 0) throw config_error("negative squared norm");
    // sqrt(p/q) = sqrt(p q) / q
    mpz_class pq = r.get_num() * r.get_den();
    if (!pq.fits_slong_p()) throw config_error("root norm too large to normalize exactly");
    return Scalar::sqrt_of(pq.get_si()) / Scalar(Rational(r.get_den()));
}

bool is_unit_vector(std::span<const Scalar> v, int j) {
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        const Scalar expect = (i == j) ? Scalar(1) : Scalar(0);
        if (v[static_cast<size_t>(i)] != expect) return false;
    }
    return true;
}

}  // namespace

std::string GroupSpec::str() const {
    switch (family) {
        case Family::z2_power:
            return "z2^" + std::to_string(dim);
        case Family::b2:
            return "b2";
        case Family::explicit_roots:
            return "explicit(d=" + std::to_string(dim) + "," +
                   std::to_string(roots.size()) + " roots)";
    }
    return "?";
}

GroupSpec parse_group_spec(const std::string& group, const std::string& kappa_csv) {
    GroupSpec spec;
    std::string g = group;
    std::transform(g.begin(), g.end(), g.begin(), [](unsigned char c) { return std::tolower(c); });

    std::vector<Scalar> kappas;
    for (const auto& item : split(kappa_csv, ',')) {
        const std::string t = trim(item);
        if (t.empty()) continue;
        try {
            kappas.push_back(Scalar::from_string(t));
        } catch (const error& e) {
            throw config_error("bad kappa value \"" + t + "\": " + e.what());
        }
        if (!kappas.back().is_rational())
            throw config_error("kappa values must be exact rationals, got \"" + t + "\"");
    }

    if (g.rfind("z2^", 0) == 0) {
        spec.family = GroupSpec::Family::z2_power;
        try {
            spec.dim = std::stoi(g.substr(3));
        } catch (...) {
            throw config_error("bad group \"" + group + "\"");
        }
        if (spec.dim < 1) throw config_error("z2^d needs d >= 1");
        if (static_cast<int>(kappas.size()) != spec.dim)
            throw config_error("z2^" + std::to_string(spec.dim) + " needs " +
                               std::to_string(spec.dim) + " kappa values, got " +
                               std::to_string(kappas.size()));
    } else if (g == "b2") {
        spec.family = GroupSpec::Family::b2;
        spec.dim = 2;
        if (kappas.size() != 2)
            throw config_error("b2 needs 2 kappa orbit values, got " +
                               std::to_string(kappas.size()));
    } else {
        throw config_error("unknown group \"" + group + "\" (expected z2^<d> or b2)");
    }
    spec.kappas = std::move(kappas);
    return spec;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw error("dot: length mismatch");
    Scalar out(0);
    for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

RootSystem RootSystem::build(const GroupSpec& spec) {
    RootSystem rs;
    rs.spec_ = spec;
    rs.dim_ = spec.dim;

    auto xi = [&](int j) {
        std::vector<Scalar> v(static_cast<size_t>(spec.dim), Scalar(0));
        v[static_cast<size_t>(j - 1)] = Scalar(1);
        return v;
    };

    switch (spec.family) {
        case GroupSpec::Family::z2_power:
            for (int j = 1; j <= spec.dim; ++j) {
                rs.roots_.push_back(xi(j));
                rs.kappas_.push_back(spec.kappas[static_cast<size_t>(j - 1)]);
            }
            break;
        case GroupSpec::Family::b2: {
            const Scalar inv_r2 = Scalar(1) / Scalar::sqrt_of(2);
            rs.roots_.push_back(xi(1));
            rs.roots_.push_back(xi(2));
            rs.roots_.push_back({inv_r2, inv_r2});
            rs.roots_.push_back({inv_r2, -inv_r2});
            rs.kappas_ = {spec.kappas[0], spec.kappas[0], spec.kappas[1], spec.kappas[1]};
            break;
        }
        case GroupSpec::Family::explicit_roots: {
            if (spec.roots.empty()) throw config_error("explicit group needs roots");
            if (spec.roots.size() != spec.kappas.size())
                throw config_error("explicit group needs one kappa per root");
            for (auto root : spec.roots) {
                if (static_cast<int>(root.size()) != spec.dim)
                    throw config_error("root length does not match dimension");
                Scalar norm2 = dot(root, root);
                if (norm2.is_zero()) throw config_error("zero root");
                if (norm2 != Scalar(1)) {
                    const Scalar inv_norm = rational_sqrt(norm2).inverse();
                    for (auto& c : root) c *= inv_norm;
                }
                rs.roots_.push_back(std::move(root));
            }
            rs.kappas_ = spec.kappas;
            break;
        }
    }

    rs.gamma_ = Scalar(0);
    for (const auto& k : rs.kappas_) rs.gamma_ += k;

    for (const auto& root : rs.roots_) {
        // sigma_alpha = I - 2 alpha alpha^T for unit alpha
        ScalarMatrix m = ScalarMatrix::identity(rs.dim_);
        for (int i = 0; i < rs.dim_; ++i)
            for (int j = 0; j < rs.dim_; ++j)
                m.at(i, j) -= Scalar(2) * root[static_cast<size_t>(i)] *
                              root[static_cast<size_t>(j)];
        rs.reflections_.push_back(std::move(m));
    }

    // detect Z_2^d structurally: the positive roots are the standard basis
    std::vector<int> coord_root(static_cast<size_t>(rs.dim_), -1);
    bool z2 = rs.root_count() == rs.dim_;
    if (z2) {
        for (int i = 0; i < rs.root_count() && z2; ++i) {
            bool found = false;
            for (int j = 0; j < rs.dim_; ++j)
                if (is_unit_vector(rs.root(i), j)) {
                    coord_root[static_cast<size_t>(j)] = i;
                    found = true;
                    break;
                }
            z2 = found;
        }
        z2 = z2 && std::all_of(coord_root.begin(), coord_root.end(),
                               [](int i) { return i >= 0; });
    }
    if (z2) rs.z2_coordinate_root_ = coord_root;

    rs.validate();
    return rs;
}

void RootSystem::validate() const {
    for (int i = 0; i < root_count(); ++i) {
        if (dot(root(i), root(i)) != Scalar(1))
            throw config_error("root " + std::to_string(i) + " is not unit-normalized");
        if (!kappa(i).is_rational() || kappa(i).rational() < 0)
            throw config_error("kappa must be >= 0 (root " + std::to_string(i) + ")");
    }
    for (int i = 0; i < root_count(); ++i)
        for (int j = i + 1; j < root_count(); ++j) {
            bool same = true, opposite = true;
            for (int c = 0; c < dim_; ++c) {
                const Scalar &a = root(i)[static_cast<size_t>(c)],
                             &b = root(j)[static_cast<size_t>(c)];
                if (a != b) same = false;
                if (a != -b) opposite = false;
            }
            if (same || opposite)
                throw config_error("duplicate root (up to sign) at indices " +
                                   std::to_string(i) + "," + std::to_string(j));
        }

    // closure under the generated reflections, and kappa constant on orbits
    for (int s = 0; s < root_count(); ++s) {
        for (int i = 0; i < root_count(); ++i) {
            const std::vector<Scalar> image = reflect(s, root(i));
            int match = -1;
            for (int j = 0; j < root_count() && match < 0; ++j) {
                bool same = true, opposite = true;
                for (int c = 0; c < dim_; ++c) {
                    if (image[static_cast<size_t>(c)] != root(j)[static_cast<size_t>(c)])
                        same = false;
                    if (image[static_cast<size_t>(c)] != -root(j)[static_cast<size_t>(c)])
                        opposite = false;
                }
                if (same || opposite) match = j;
            }
            if (match < 0)
                throw config_error("root list is not closed under its reflections");
            if (kappa(i) != kappa(match))
                throw config_error("kappa is not constant on reflection orbits");
        }
    }

    for (int i = 0; i < root_count(); ++i) {
        if (reflection(i) * reflection(i) != ScalarMatrix::identity(dim_))
            throw config_error("reflection " + std::to_string(i) + " is not an involution");
    }
}

std::vector<Scalar> RootSystem::reflect(int i, std::span<const Scalar> y) const {
    if (static_cast<int>(y.size()) != dim_) throw error("reflect: bad vector length");
    const auto& alpha = roots_[static_cast<size_t>(i)];
    const Scalar factor = Scalar(2) * dot(y, alpha);
    std::vector<Scalar> out(y.begin(), y.end());
    for (int c = 0; c < dim_; ++c) out[static_cast<size_t>(c)] -= factor * alpha[static_cast<size_t>(c)];
    return out;
}

int RootSystem::coordinate_root(int j) const {
    if (!z2_coordinate_root_) throw error("group is not Z_2^d");
    return (*z2_coordinate_root_)[static_cast<size_t>(j - 1)];
}

const Scalar& RootSystem::coordinate_kappa(int j) const {
    return kappa(coordinate_root(j));
}

bool RootSystem::is_split_level(int level) const {
    if (level < 1 || level > dim_) return false;
    for (int i = 0; i < root_count(); ++i) {
        bool inside = false, outside = false;
        for (int c = 0; c < dim_; ++c) {
            if (root(i)[static_cast<size_t>(c)].is_zero()) continue;
            (c < level ? inside : outside) = true;
        }
        if (inside && outside) return false;
    }
    return true;
}

PartialRealization RootSystem::partial(int level) const {
    if (level < 1 || level > dim_) throw error("partial level out of range");
    PartialRealization out;
    out.level = level;
    out.gamma = Scalar(0);
    for (int i = 0; i < root_count(); ++i) {
        bool supported = true;
        for (int c = level; c < dim_; ++c)
            if (!root(i)[static_cast<size_t>(c)].is_zero()) supported = false;
        if (supported) {
            out.root_indices.push_back(i);
            out.gamma += kappa(i);
        }
    }
    return out;
}

}  // namespace dunkl
