#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dunkl/matrix.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

// User-facing description of a reflection group, parsed from flags or a
// config file.
struct GroupSpec {
    enum class Family { z2_power, b2, explicit_roots };
    Family family = Family::z2_power;
    int dim = 0;
    // z2_power: one kappa per coordinate; b2: (axis orbit, diagonal orbit);
    // explicit_roots: one kappa per listed root.
    std::vector<Scalar> kappas;
    std::vector<std::vector<Scalar>> roots;  // explicit_roots only

    std::string str() const;
};

GroupSpec parse_group_spec(const std::string& group, const std::string& kappa_csv);

// Sub-root-system supported on the first `level` coordinates, with its own
// multiplicity sum gamma_[level]. The level-restricted Dirac-side operators
// are built from this in the operator layer.
struct PartialRealization {
    int level = 0;
    Scalar gamma;
    std::vector<int> root_indices;
};

// Normalized positive roots with their reflections and multiplicities.
class RootSystem {
public:
    static RootSystem build(const GroupSpec& spec);

    int dim() const { return dim_; }
    int root_count() const { return static_cast<int>(roots_.size()); }
    std::span<const Scalar> root(int i) const { return roots_[static_cast<size_t>(i)]; }
    const Scalar& kappa(int i) const { return kappas_[static_cast<size_t>(i)]; }
    const Scalar& gamma() const { return gamma_; }
    const ScalarMatrix& reflection(int i) const { return reflections_[static_cast<size_t>(i)]; }

    std::vector<Scalar> reflect(int i, std::span<const Scalar> y) const;

    // true when the positive roots are exactly the standard basis vectors
    // (the group Z_2^d); coordinate j then has its own kappa.
    bool is_z2() const { return z2_coordinate_root_.has_value(); }
    int coordinate_root(int j) const;          // root index for xi_j, 1-based j
    const Scalar& coordinate_kappa(int j) const;

    PartialRealization partial(int level) const;
    Scalar gamma_partial(int level) const { return partial(level).gamma; }
    // true when every root lives entirely within coordinates 1..level or
    // entirely outside them, i.e. the group splits as W_S + W_T as needed for
    // the partial osp(1|2) realisation
    bool is_split_level(int level) const;

    const GroupSpec& spec() const { return spec_; }

private:
    int dim_ = 0;
    GroupSpec spec_;
    std::vector<std::vector<Scalar>> roots_;
    std::vector<Scalar> kappas_;
    Scalar gamma_;
    std::vector<ScalarMatrix> reflections_;
    std::optional<std::vector<int>> z2_coordinate_root_;

    void validate() const;
};

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace dunkl
