#ifndef GMAK_EQUILIBRIA_HPP
#define GMAK_EQUILIBRIA_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "gmak/exactla.hpp"
#include "gmak/network.hpp"
#include "gmak/signvec.hpp"

namespace gmak {

// The linear map A of the complex-graph: column sums are exactly zero,
// off-diagonal entry (y', y) holds k_{y->y'}.
struct LaplacianMatrix {
    RationalMatrix a;             // m x m
    std::vector<Rational> rates;  // reaction order, the rate source
};

LaplacianMatrix laplacian(const GeneralizedNetwork& net, const std::vector<Rational>& rates);

// Nonnegative kernel basis chi_1..chi_t of A with supp(chi_i) = T_i, each
// scaled to a primitive integer vector. Exact; throws std::logic_error if the
// computed kernel ever deviates from the theorem's guarantees.
std::vector<std::vector<Rational>> kernel_positive_basis(const GeneralizedNetwork& net,
                                                         const std::vector<Rational>& rates);

// Monomial vector over complexes: entry y = c^{ytilde} with 0^0 = 1.
Eigen::VectorXd psi_tilde(const GeneralizedNetwork& net, const Eigen::VectorXd& c);

struct BalanceResidual {
    double residual = 0;  // max-norm of A psi_tilde(c)
    double scale = 0;     // largest single reaction flow k c^{ytilde}
};

BalanceResidual complex_balance_residual(const GeneralizedNetwork& net, const std::vector<double>& rates,
                                         const Eigen::VectorXd& c);

// A complex balancing equilibrium c* > 0, via the log-linear system
//   <ytilde, x> - mu_{L(y)} = ln chi_{L(y),y},   c* = e^x.
// Absent when the network is not weakly reversible (none exists then) or when
// the system is inconsistent (possible only for kinetic deficiency > 0).
std::optional<Eigen::VectorXd> find_complex_balancing(const GeneralizedNetwork& net,
                                                      const std::vector<Rational>& rates);

// The map F(lambda) = sum_k c*_k e^{<lambda, wt^k>} w^k with row
// configurations w^k (rows of v_rows) and wt^k (rows of vt_rows).
struct BirchMap {
    Eigen::VectorXd cstar;    // length n, strictly positive
    Eigen::MatrixXd v_rows;   // n x d
    Eigen::MatrixXd vt_rows;  // n x dt
};

// Exponents <lambda, wt^k> above 700 raise NumericsError.
Eigen::VectorXd evaluate_F(const BirchMap& bm, const Eigen::VectorXd& lambda);
Eigen::MatrixXd jacobian_F(const BirchMap& bm, const Eigen::VectorXd& lambda);

struct NewtonResult {
    Eigen::VectorXd lambda;
    bool converged = false;
    int iterations = 0;
};

// Damped Newton for F(lambda) = gamma: step halving (up to 40 times) until the
// residual decreases, at most max_iterations iterations, convergence at
// ||F - gamma||_inf <= 1e-10 max(||gamma||_inf, 1e-2).
NewtonResult solve_birch(const BirchMap& bm, const Eigen::VectorXd& gamma, const Eigen::VectorXd& lambda0,
                         int max_iterations = 100);

struct SolveOptions {
    int starts = 32;
    unsigned long seed = 0;
    int max_iterations = 100;
};

// All equilibria found in the stoichiometric compatibility class of cprime:
// multi-start damped Newton (lambda = 0 plus uniform starts in [-5,5]^dt),
// solutions mapped to c = c* o exp(Vt lambda), verified against the class and
// the balance condition, deduplicated, and sorted by first coordinate.
std::vector<Eigen::VectorXd> solve_in_class(const GeneralizedNetwork& net, const std::vector<Rational>& rates,
                                            const Eigen::VectorXd& cstar, const Eigen::VectorXd& cprime,
                                            const SolveOptions& opts = {});

struct UniquenessResult {
    bool unique = false;
    std::optional<SignVector> witness;  // nonzero element of sigma(S) cap sigma(Stilde-perp)
};

// sigma(S) cap sigma(Stilde-perp) = {0}?
UniquenessResult check_uniqueness(const GeneralizedNetwork& net);

struct AnalysisVerdict {
    bool weakly_reversible = false;
    bool deficiency_zero = false;
    bool kinetic_deficiency_zero = false;
    bool sign_sets_equal = false;
    bool conservative = false;
    bool uniqueness = false;
    bool surjectivity_hypothesis = false;  // dominant lattice iso exists and cone pointed
    bool genthm_applies = false;           // sign_sets_equal and conservative
    std::optional<SignVector> witness_sign_vector;
};

AnalysisVerdict check_genthm(const GeneralizedNetwork& net);

struct MultistationarityWitness {
    std::vector<double> rates;  // reaction order
    Eigen::VectorXd cstar;
    Eigen::VectorXd cprime;
    Eigen::VectorXd c1;  // = cprime
    Eigen::VectorXd c2;  // = cprime - u
    double residual1 = 0;
    double residual2 = 0;
    double class_residual = 0;  // max_i |<c1 - c2, v^i>| over the S-perp basis
    SignVector tau;
};

// Constructive witness for multiple complex balancing equilibria in one class,
// following the proof route: a common sign vector tau, vectors u in S and
// v1 in Stilde-perp realizing it, c* with u = c* o (e^{v1} - e^{v1/2}), and
// circulation-derived rates making c* complex balancing. Throws
// HypothesisError when the network is not weakly reversible or uniqueness
// holds.
MultistationarityWitness multistationarity_witness(const GeneralizedNetwork& net);

// Horn-Jackson rewriting: every reaction y -> y' becomes the classical
// mass-action reaction ytilde -> ytilde + (y' - y). Throws TransformError if a
// coefficient of ytilde + (y' - y) is negative.
GeneralizedNetwork pseudo_reaction_transform(const GeneralizedNetwork& net);

}  // namespace gmak

#endif
