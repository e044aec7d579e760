#include "dunkl/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "dunkl/error.hpp"

namespace dunkl {

int MultiIndex::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

MultiIndex MultiIndex::plus_unit(int j, int amount) const {
    MultiIndex out = *this;
    out.exps[static_cast<size_t>(j)] += amount;
    if (out.exps[static_cast<size_t>(j)] < 0) throw error("multi-index exponent went negative");
    return out;
}

std::string MultiIndex::str() const {
    std::string out = "(";
    for (size_t i = 0; i < exps.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(exps[i]);
    }
    return out + ")";
}

bool RevLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // same degree: compare at the last position where they differ; the larger
    // entry there sorts first
    const size_t n = std::min(a.exps.size(), b.exps.size());
    for (size_t i = n; i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    }
    return a.exps.size() < b.exps.size();
}

std::vector<MultiIndex> monomials_of_degree(int dim, int degree) {
    std::vector<MultiIndex> out;
    if (dim <= 0) return out;
    MultiIndex current(dim);
    // depth-first over coordinates, emitting in the graded reverse-lex order
    auto rec = [&](auto&& self, int coord, int remaining) -> void {
        if (coord == dim - 1) {
            current[coord] = remaining;
            out.push_back(current);
            current[coord] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[coord] = e;
            self(self, coord + 1, remaining - e);
        }
        current[coord] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), RevLexLess{});
    return out;
}

}  // namespace dunkl
