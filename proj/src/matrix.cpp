#include "gmak/matrix.hpp"

#include <stdexcept>

namespace gmak {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(int rows, const std::vector<std::vector<Rational>>& cols) {
    RationalMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("from_columns: column length mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Rational> RationalMatrix::row(int i) const {
    std::vector<Rational> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Rational> RationalMatrix::column(int j) const {
    std::vector<Rational> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) p.at(i, j) += aik * rhs.at(k, j);
        }
    return p;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<Rational> y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

bool RationalMatrix::is_zero() const {
    for (const auto& q : a_)
        if (q != 0) return false;
    return true;
}

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0)
        throw std::invalid_argument("hcat: row mismatch");
    int rows = a.cols() > 0 ? a.rows() : b.rows();
    RationalMatrix m(rows, a.cols() + b.cols());
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

}  // namespace gmak
