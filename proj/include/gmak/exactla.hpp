#ifndef GMAK_EXACTLA_HPP
#define GMAK_EXACTLA_HPP

#include <string>
#include <vector>

#include "gmak/matrix.hpp"
#include "gmak/network.hpp"

namespace gmak {

// Column basis of a linear subspace of Q^ambient_dim. Columns are linearly
// independent; construction verifies this. Bases produced by the operations
// below are in reduced echelon form, so equal subspaces print identically.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(RationalMatrix columns);  // throws if columns are dependent
    static SubspaceBasis zero(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return basis_.cols(); }
    const RationalMatrix& basis() const { return basis_; }

    std::vector<Rational> column(int j) const { return basis_.column(j); }
    std::vector<Rational> row(int i) const { return basis_.row(i); }

private:
    int ambient_dim_ = 0;
    RationalMatrix basis_;
};

// Reduced row echelon form; records pivot columns if requested.
RationalMatrix rref(RationalMatrix m, std::vector<int>* pivot_cols = nullptr);

int rank(const RationalMatrix& m);

// Canonical basis of {x : Mx = 0}; zero kernel gives zero columns.
SubspaceBasis kernel_basis(const RationalMatrix& m);

// Canonical echelon basis of the column space.
SubspaceBasis column_space_basis(const RationalMatrix& m);

// Canonical basis of {x : B^T x = 0}; dims add up to the ambient dimension.
SubspaceBasis orthogonal_complement(const SubspaceBasis& b);

// Equality as subspaces via rank tests: rank[B1|B2] = rank B1 = rank B2.
bool subspaces_equal(const SubspaceBasis& b1, const SubspaceBasis& b2);

bool subspace_contains(const SubspaceBasis& b, const std::vector<Rational>& v);

// dim(U cap W) = dim U + dim W - dim(U + W), exactly.
int intersection_dim(const SubspaceBasis& u, const SubspaceBasis& w);

// span{y' - y | y -> y' in R}
SubspaceBasis stoichiometric_subspace(const GeneralizedNetwork& net);

// span{ytilde' - ytilde | y -> y' in R}
SubspaceBasis kinetic_order_subspace(const GeneralizedNetwork& net);

struct DeficiencyReport {
    int m = 0;        // complexes
    int l = 0;        // linkage classes
    int s = 0;        // dim S
    int s_tilde = 0;  // dim Stilde
    int delta = 0;
    int delta_tilde = 0;
    enum class Method { structural, direct } method = Method::structural;
};

// delta = m - l - s, delta_tilde = m - l - s_tilde. Requires t = l
// (HypothesisError otherwise).
DeficiencyReport structural_deficiencies(const GeneralizedNetwork& net);

// delta = dim(ker Y cap im A), delta_tilde = dim(ker Ytilde cap im A),
// computed exactly from the given positive rational rates.
DeficiencyReport direct_deficiencies(const GeneralizedNetwork& net, const std::vector<Rational>& rates);

}  // namespace gmak

#endif
