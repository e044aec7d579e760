#pragma once

#include <string>
#include <vector>

#include "dunkl/error.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

// Small dense matrix over Scalar; used for reflection matrices and the spinor
// representation. Exact-rank work on big stacks lives in exact_linalg.
class ScalarMatrix {
public:
    ScalarMatrix() : rows_(0), cols_(0) {}
    ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static ScalarMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-() const;
    ScalarMatrix scaled(const Scalar& c) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

}  // namespace dunkl
