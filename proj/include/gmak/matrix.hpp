#ifndef GMAK_MATRIX_HPP
#define GMAK_MATRIX_HPP

#include <vector>

#include "gmak/rational.hpp"

namespace gmak {

// Dense exact-rational matrix, row-major. Carrier for Y, Ytilde, A, V, Vtilde;
// no floating point enters through this type.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);
    static RationalMatrix from_columns(int rows, const std::vector<std::vector<Rational>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Rational> row(int i) const;
    std::vector<Rational> column(int j) const;

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    std::vector<Rational> operator*(const std::vector<Rational>& x) const;

    bool is_zero() const;
    bool operator==(const RationalMatrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

// [A | B] side by side; row counts must match.
RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace gmak

#endif
