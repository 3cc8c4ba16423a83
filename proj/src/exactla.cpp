#include "gmak/exactla.hpp"

#include <stdexcept>

#include "gmak/errors.hpp"
#include "gmak/graph.hpp"

namespace gmak {

RationalMatrix rref(RationalMatrix m, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int pivot = -1;
        for (int i = lead; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot == -1) continue;
        if (pivot != lead)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
        Rational inv = m.at(lead, col);
        for (int j = col; j < m.cols(); ++j) m.at(lead, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(lead, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++lead;
    }
    return m;
}

int rank(const RationalMatrix& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return static_cast<int>(pivots.size());
}

SubspaceBasis::SubspaceBasis(RationalMatrix columns) : ambient_dim_(columns.rows()), basis_(std::move(columns)) {
    if (rank(basis_) != basis_.cols())
        throw std::invalid_argument("SubspaceBasis: columns are linearly dependent");
}

SubspaceBasis SubspaceBasis::zero(int ambient_dim) {
    return SubspaceBasis(RationalMatrix(ambient_dim, 0));
}

SubspaceBasis kernel_basis(const RationalMatrix& m) {
    std::vector<int> pivots;
    RationalMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> cols;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(m.cols());
        v[fc] = 1;
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i) v[pivots[i]] = -r.at(i, fc);
        cols.push_back(std::move(v));
    }
    return SubspaceBasis(RationalMatrix::from_columns(m.cols(), cols));
}

SubspaceBasis column_space_basis(const RationalMatrix& m) {
    std::vector<int> pivots;
    RationalMatrix r = rref(m.transposed(), &pivots);
    std::vector<std::vector<Rational>> cols;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) cols.push_back(r.row(i));
    return SubspaceBasis(RationalMatrix::from_columns(m.rows(), cols));
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& b) {
    return kernel_basis(b.basis().transposed());
}

bool subspaces_equal(const SubspaceBasis& b1, const SubspaceBasis& b2) {
    if (b1.ambient_dim() != b2.ambient_dim()) return false;
    if (b1.dim() != b2.dim()) return false;
    return rank(hcat(b1.basis(), b2.basis())) == b1.dim();
}

bool subspace_contains(const SubspaceBasis& b, const std::vector<Rational>& v) {
    RationalMatrix col = RationalMatrix::from_columns(b.ambient_dim(), {v});
    return rank(hcat(b.basis(), col)) == b.dim();
}

int intersection_dim(const SubspaceBasis& u, const SubspaceBasis& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw std::invalid_argument("intersection_dim: ambient dimension mismatch");
    int sum_dim = rank(hcat(u.basis(), w.basis()));
    return u.dim() + w.dim() - sum_dim;
}

static SubspaceBasis reaction_span(const GeneralizedNetwork& net, const std::vector<Complex>& cs) {
    const int n = net.species_count();
    RationalMatrix m(n, net.reaction_count());
    for (int r = 0; r < net.reaction_count(); ++r) {
        auto src = cs[net.reactions[r].source].dense(n);
        auto tgt = cs[net.reactions[r].target].dense(n);
        for (int i = 0; i < n; ++i) m.at(i, r) = tgt[i] - src[i];
    }
    return column_space_basis(m);
}

SubspaceBasis stoichiometric_subspace(const GeneralizedNetwork& net) {
    return reaction_span(net, net.complexes);
}

SubspaceBasis kinetic_order_subspace(const GeneralizedNetwork& net) {
    return reaction_span(net, net.kinetic_complexes);
}

DeficiencyReport structural_deficiencies(const GeneralizedNetwork& net) {
    auto dec = decompose(net);
    if (dec.t != dec.l)
        throw HypothesisError("t != l: structural deficiency formula inapplicable");
    DeficiencyReport rep;
    rep.m = net.complex_count();
    rep.l = dec.l;
    rep.s = stoichiometric_subspace(net).dim();
    rep.s_tilde = kinetic_order_subspace(net).dim();
    rep.delta = rep.m - rep.l - rep.s;
    rep.delta_tilde = rep.m - rep.l - rep.s_tilde;
    rep.method = DeficiencyReport::Method::structural;
    if (rep.delta < 0 || rep.delta_tilde < 0) throw std::logic_error("negative deficiency");
    return rep;
}

}  // namespace gmak
