#include "dunkl/matrix.hpp"

namespace dunkl {

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw error("matrix product shape mismatch");
    ScalarMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) += aik * o.at(k, j);
            }
        }
    return out;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix sum shape mismatch");
    ScalarMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

ScalarMatrix ScalarMatrix::operator-() const {
    ScalarMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& c) const {
    ScalarMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw error("matrix apply shape mismatch");
    std::vector<Scalar> out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[static_cast<size_t>(j)].is_zero()) continue;
            out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
        }
    return out;
}

std::string ScalarMatrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j > 0) out += ", ";
            out += at(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

}  // namespace dunkl
