#pragma once

#include <string>
#include <vector>

namespace dunkl {

// Exponent tuple (beta_1, ..., beta_d) of a monomial x^beta.
struct MultiIndex {
    std::vector<int> exps;

    MultiIndex() = default;
    explicit MultiIndex(int dim) : exps(static_cast<size_t>(dim), 0) {}
    MultiIndex(std::initializer_list<int> e) : exps(e) {}

    int dim() const { return static_cast<int>(exps.size()); }
    int degree() const;  // |beta|_1
    int operator[](int j) const { return exps[static_cast<size_t>(j)]; }
    int& operator[](int j) { return exps[static_cast<size_t>(j)]; }

    MultiIndex plus_unit(int j, int amount = 1) const;  // beta + amount*xi_{j+1}

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps == b.exps; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

    std::string str() const;  // "(b1,b2,...)"
};

// Reverse lexicographic order, graded by total degree. Within one degree the
// index with all weight on the last coordinate comes first: for d=3, n=2 the
// order is (0,0,2) < (0,1,1) < (1,0,1) < (0,2,0) < (1,1,0) < (2,0,0).
// This is the elimination order used for the monogenic basis construction and
// the fixed order for printing and coefficient vectorization.
struct RevLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// All multi-indices on `dim` variables with |beta|_1 = degree, in RevLexLess order.
std::vector<MultiIndex> monomials_of_degree(int dim, int degree);

}  // namespace dunkl
