#include "dunkl/exact_linalg.hpp"

#include "dunkl/error.hpp"

namespace dunkl {

std::vector<Scalar> vectorize(const Setup& s, const SpinorPoly& f, int n) {
    if (!f.is_homogeneous(n) && !f.is_zero())
        throw error("vectorize: element is not homogeneous of degree " + std::to_string(n));
    const auto monos = monomials_of_degree(s.dim(), n);
    std::vector<Scalar> out;
    out.reserve(monos.size() * static_cast<size_t>(s.spinor_dim()));
    for (const auto& beta : monos)
        for (int sv = 0; sv < s.spinor_dim(); ++sv) out.push_back(f.comp(sv).coeff(beta));
    return out;
}

int exact_rank(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw error("exact_rank: ragged rows");

    int rank = 0;
    size_t pivot_row = 0;
    Scalar prev_pivot(1);
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        size_t found = pivot_row;
        while (found < rows.size() && rows[found][col].is_zero()) ++found;
        if (found == rows.size()) continue;
        if (found != pivot_row) std::swap(rows[found], rows[pivot_row]);
        const Scalar pivot = rows[pivot_row][col];
        for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
            const Scalar factor = rows[r][col];
            for (size_t c = col; c < cols; ++c)
                rows[r][c] = (rows[r][c] * pivot - factor * rows[pivot_row][c]) / prev_pivot;
        }
        prev_pivot = pivot;
        ++pivot_row;
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Scalar>> solve_in_span(const std::vector<std::vector<Scalar>>& rows,
                                                 const std::vector<Scalar>& target) {
    const size_t k = rows.size();
    const size_t len = target.size();
    for (const auto& r : rows)
        if (r.size() != len) throw error("solve_in_span: length mismatch");

    // eliminate on the transposed system [rows^T | target]
    std::vector<std::vector<Scalar>> aug(len, std::vector<Scalar>(k + 1));
    for (size_t i = 0; i < len; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = rows[j][i];
        aug[i][k] = target[i];
    }

    std::vector<int> pivot_col_of_row(len, -1);
    size_t row = 0;
    for (size_t col = 0; col < k && row < len; ++col) {
        size_t found = row;
        while (found < len && aug[found][col].is_zero()) ++found;
        if (found == len) continue;
        std::swap(aug[found], aug[row]);
        const Scalar inv = aug[row][col].inverse();
        for (size_t c = col; c <= k; ++c) aug[row][c] *= inv;
        for (size_t r = 0; r < len; ++r) {
            if (r == row || aug[r][col].is_zero()) continue;
            const Scalar factor = aug[r][col];
            for (size_t c = col; c <= k; ++c) aug[r][c] -= factor * aug[row][c];
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        ++row;
    }
    // inconsistent when a zero row has nonzero right-hand side
    for (size_t r = row; r < len; ++r)
        if (!aug[r][k].is_zero()) return std::nullopt;

    std::vector<Scalar> coeffs(k, Scalar(0));
    for (size_t r = 0; r < row; ++r)
        coeffs[static_cast<size_t>(pivot_col_of_row[r])] = aug[r][k];
    return coeffs;
}

}  // namespace dunkl
