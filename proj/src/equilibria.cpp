#include "gmak/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "gmak/errors.hpp"
#include "gmak/graph.hpp"
#include "gmak/signspace.hpp"

namespace gmak {

namespace {

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m.at(i, j));
    return out;
}

void check_positive(const Eigen::VectorXd& c, const char* what) {
    for (int i = 0; i < c.size(); ++i)
        if (!(c[i] > 0)) throw ValidationError(std::string(what) + " must be strictly positive");
}

double monomial(const GeneralizedNetwork& net, const Complex& kin, const Eigen::VectorXd& c) {
    double p = 1.0;
    for (const auto& [s, q] : kin.coeffs()) p *= std::pow(c[s], to_double(q));
    return p;
}

}  // namespace

LaplacianMatrix laplacian(const GeneralizedNetwork& net, const std::vector<Rational>& rates) {
    check_rates(net, rates);
    const int m = net.complex_count();
    LaplacianMatrix lap{RationalMatrix(m, m), rates};
    for (int r = 0; r < net.reaction_count(); ++r) {
        const auto& rx = net.reactions[r];
        lap.a.at(rx.target, rx.source) += rates[r];
        lap.a.at(rx.source, rx.source) -= rates[r];
    }
    return lap;
}

std::vector<std::vector<Rational>> kernel_positive_basis(const GeneralizedNetwork& net,
                                                         const std::vector<Rational>& rates) {
    auto lap = laplacian(net, rates);
    auto dec = decompose(net);
    const int m = net.complex_count();

    if (rank(lap.a) != m - dec.t) throw std::logic_error("dim ker A differs from the terminal class count");

    std::vector<std::vector<Rational>> chis;
    for (const auto& terminal : dec.terminal_classes) {
        const int sz = static_cast<int>(terminal.size());
        RationalMatrix sub(sz, sz);
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j) sub.at(i, j) = lap.a.at(terminal[i], terminal[j]);
        SubspaceBasis ker = kernel_basis(sub);
        if (ker.dim() != 1) throw std::logic_error("terminal class kernel is not one-dimensional");
        auto v = primitive_integer_vector(ker.column(0));
        int s = sgn(v[0]);
        if (s == 0) throw std::logic_error("terminal class kernel vector has a zero entry");
        std::vector<Rational> chi(m);
        for (int i = 0; i < sz; ++i) {
            Rational e = s * v[i];
            if (e <= 0) throw std::logic_error("terminal class kernel vector is not positive");
            chi[terminal[i]] = e;
        }
        chis.push_back(std::move(chi));
    }
    return chis;
}

Eigen::VectorXd psi_tilde(const GeneralizedNetwork& net, const Eigen::VectorXd& c) {
    if (c.size() != net.species_count()) throw ValidationError("concentration vector length mismatch");
    for (int i = 0; i < c.size(); ++i)
        if (c[i] < 0) throw ValidationError("negative concentration");
    Eigen::VectorXd psi(net.complex_count());
    for (int y = 0; y < net.complex_count(); ++y) psi[y] = monomial(net, net.kinetic_complexes[y], c);
    return psi;
}

BalanceResidual complex_balance_residual(const GeneralizedNetwork& net, const std::vector<double>& rates,
                                         const Eigen::VectorXd& c) {
    Eigen::VectorXd balance = Eigen::VectorXd::Zero(net.complex_count());
    BalanceResidual out;
    for (int r = 0; r < net.reaction_count(); ++r) {
        const auto& rx = net.reactions[r];
        double flow = rates[r] * monomial(net, net.kinetic_complexes[rx.source], c);
        out.scale = std::max(out.scale, std::abs(flow));
        balance[rx.target] += flow;
        balance[rx.source] -= flow;
    }
    out.residual = balance.size() ? balance.cwiseAbs().maxCoeff() : 0.0;
    return out;
}

std::optional<Eigen::VectorXd> find_complex_balancing(const GeneralizedNetwork& net,
                                                      const std::vector<Rational>& rates) {
    check_rates(net, rates);
    auto dec = decompose(net);
    if (!dec.weakly_reversible) return std::nullopt;  // no complex balancing equilibrium exists

    auto chis = kernel_positive_basis(net, rates);  // terminal classes = linkage classes here
    const int n = net.species_count();
    const int m = net.complex_count();
    const int l = dec.l;

    // <ytilde, x> - mu_{L(y)} = ln chi_{L(y),y} for x = ln c and per-class mu
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(m, n + l);
    Eigen::VectorXd rhs(m);
    for (int y = 0; y < m; ++y) {
        for (const auto& [s, q] : net.kinetic_complexes[y].coeffs()) sys(y, s) = to_double(q);
        int cls = dec.linkage_of[y];
        sys(y, n + cls) = -1.0;
        rhs[y] = std::log(to_double(chis[cls][y]));
    }
    Eigen::VectorXd z = sys.completeOrthogonalDecomposition().solve(rhs);
    double lin_residual = (sys * z - rhs).cwiseAbs().maxCoeff();
    if (lin_residual > 1e-9 * (1.0 + rhs.cwiseAbs().maxCoeff()))
        return std::nullopt;  // inconsistent: no equilibrium reachable by this route

    Eigen::VectorXd cstar = z.head(n).array().exp();
    auto check = complex_balance_residual(net, to_double_vec(rates), cstar);
    if (check.residual > 1e-9 * check.scale) return std::nullopt;
    return cstar;
}

Eigen::VectorXd evaluate_F(const BirchMap& bm, const Eigen::VectorXd& lambda) {
    Eigen::VectorXd t = bm.vt_rows * lambda;
    for (int k = 0; k < t.size(); ++k)
        if (std::abs(t[k]) > 700.0) throw NumericsError("Birch map exponent overflow");
    Eigen::VectorXd g = bm.cstar.array() * t.array().exp();
    return bm.v_rows.transpose() * g;
}

Eigen::MatrixXd jacobian_F(const BirchMap& bm, const Eigen::VectorXd& lambda) {
    Eigen::VectorXd t = bm.vt_rows * lambda;
    for (int k = 0; k < t.size(); ++k)
        if (std::abs(t[k]) > 700.0) throw NumericsError("Birch map exponent overflow");
    Eigen::VectorXd g = bm.cstar.array() * t.array().exp();
    return bm.v_rows.transpose() * g.asDiagonal() * bm.vt_rows;
}

NewtonResult solve_birch(const BirchMap& bm, const Eigen::VectorXd& gamma, const Eigen::VectorXd& lambda0,
                         int max_iterations) {
    const double tol = 1e-10 * std::max(gamma.size() ? gamma.cwiseAbs().maxCoeff() : 0.0, 1e-2);
    // line search decreases the 2-norm (the Newton direction is a descent
    // direction for it); convergence is declared on the max-norm
    auto residual2 = [&](const Eigen::VectorXd& lam) -> double {
        try {
            return (evaluate_F(bm, lam) - gamma).norm();
        } catch (const NumericsError&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    auto residual_inf = [&](const Eigen::VectorXd& lam) -> double {
        try {
            return (evaluate_F(bm, lam) - gamma).cwiseAbs().maxCoeff();
        } catch (const NumericsError&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    NewtonResult res;
    res.lambda = lambda0;
    if (gamma.size() == 0) {  // d = 0: nothing to match
        res.converged = true;
        return res;
    }
    double r2 = residual2(lambda0);
    for (int it = 0; it < max_iterations; ++it) {
        res.iterations = it;
        if (residual_inf(res.lambda) <= tol) {
            res.converged = true;
            return res;
        }
        if (!std::isfinite(r2)) return res;
        Eigen::VectorXd f = evaluate_F(bm, res.lambda);
        Eigen::MatrixXd j = jacobian_F(bm, res.lambda);
        Eigen::VectorXd step = j.completeOrthogonalDecomposition().solve(gamma - f);
        double alpha = 1.0;
        bool improved = false;
        for (int h = 0; h < 40; ++h) {
            double rn = residual2(res.lambda + alpha * step);
            if (rn < r2) {
                res.lambda += alpha * step;
                r2 = rn;
                improved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!improved) return res;  // stalled
    }
    res.converged = residual_inf(res.lambda) <= tol;
    return res;
}

std::vector<Eigen::VectorXd> solve_in_class(const GeneralizedNetwork& net, const std::vector<Rational>& rates,
                                            const Eigen::VectorXd& cstar, const Eigen::VectorXd& cprime,
                                            const SolveOptions& opts) {
    check_rates(net, rates);
    check_positive(cstar, "c*");
    check_positive(cprime, "c'");
    if (cstar.size() != net.species_count() || cprime.size() != net.species_count())
        throw ValidationError("concentration vector length mismatch");

    Eigen::MatrixXd v = to_eigen(orthogonal_complement(stoichiometric_subspace(net)).basis());
    Eigen::MatrixXd vt = to_eigen(orthogonal_complement(kinetic_order_subspace(net)).basis());
    const int dt = static_cast<int>(vt.cols());
    Eigen::VectorXd gamma = v.transpose() * cprime;
    BirchMap bm{cstar, v, vt};

    auto rates_d = to_double_vec(rates);
    const double gamma_scale = gamma.size() ? gamma.cwiseAbs().maxCoeff() : 0.0;

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> uni(-5.0, 5.0);

    std::vector<Eigen::VectorXd> found;
    for (int s = 0; s < std::max(1, opts.starts); ++s) {
        Eigen::VectorXd lambda0 = Eigen::VectorXd::Zero(dt);
        if (s > 0)
            for (int j = 0; j < dt; ++j) lambda0[j] = uni(rng);
        NewtonResult nr = solve_birch(bm, gamma, lambda0, opts.max_iterations);
        if (!nr.converged) continue;

        Eigen::VectorXd c = cstar.array() * (vt * nr.lambda).array().exp();
        // class membership: c - c' orthogonal to every S-perp basis column
        double class_res = v.cols() ? (v.transpose() * (c - cprime)).cwiseAbs().maxCoeff() : 0.0;
        if (class_res > 1e-8 * (1.0 + gamma_scale)) continue;
        auto bal = complex_balance_residual(net, rates_d, c);
        if (bal.residual > 1e-9 * std::max(bal.scale, 1.0)) continue;

        bool dup = false;
        for (const auto& prev : found)
            if ((prev - c).cwiseAbs().maxCoeff() <= 1e-6 * (1.0 + prev.cwiseAbs().maxCoeff())) {
                dup = true;
                break;
            }
        if (!dup) found.push_back(std::move(c));
    }
    std::sort(found.begin(), found.end(),
              [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return a[0] < b[0]; });
    return found;
}

UniquenessResult check_uniqueness(const GeneralizedNetwork& net) {
    SignVectorSet sig_s = enumerate_sign_vectors(stoichiometric_subspace(net));
    SignVectorSet sig_st_perp = enumerate_sign_vectors(orthogonal_complement(kinetic_order_subspace(net)));
    UniquenessResult out;
    out.unique = true;
    for (const auto& v : sig_s) {
        if (v.is_zero()) continue;
        if (sig_st_perp.count(v)) {
            out.unique = false;
            out.witness = v;
            break;
        }
    }
    return out;
}

AnalysisVerdict check_genthm(const GeneralizedNetwork& net) {
    auto dec = decompose(net);
    SubspaceBasis s = stoichiometric_subspace(net);
    SubspaceBasis st = kinetic_order_subspace(net);
    SubspaceBasis s_perp = orthogonal_complement(s);
    SubspaceBasis st_perp = orthogonal_complement(st);

    AnalysisVerdict v;
    v.weakly_reversible = dec.weakly_reversible;
    if (dec.t == dec.l) {
        auto rep = structural_deficiencies(net);
        v.deficiency_zero = rep.delta == 0;
        v.kinetic_deficiency_zero = rep.delta_tilde == 0;
    } else {
        // deficiency depends on rates when t != l; probe with unit rates
        std::vector<Rational> ones(net.reaction_count(), Rational(1));
        auto rep = direct_deficiencies(net, ones);
        v.deficiency_zero = rep.delta == 0;
        v.kinetic_deficiency_zero = rep.delta_tilde == 0;
    }
    v.sign_sets_equal = sign_sets_equal(s, st);
    v.conservative = is_conservative(s_perp).conservative;
    auto uq = check_uniqueness(net);
    v.uniqueness = uq.unique;
    v.witness_sign_vector = uq.witness;
    auto iso = find_dominant_lattice_iso(face_lattice(st_perp), face_lattice(s_perp));
    v.surjectivity_hypothesis = iso.has_value() && v.conservative;
    v.genthm_applies = v.sign_sets_equal && v.conservative;
    return v;
}

MultistationarityWitness multistationarity_witness(const GeneralizedNetwork& net) {
    auto dec = decompose(net);
    if (!dec.weakly_reversible)
        throw HypothesisError("multistationarity witness requires a weakly reversible network");
    auto uq = check_uniqueness(net);
    if (uq.unique)
        throw HypothesisError("sigma(S) cap sigma(Stilde-perp) = {0}: at most one equilibrium per class");

    const int n = net.species_count();
    const SignVector tau = *uq.witness;
    SubspaceBasis s = stoichiometric_subspace(net);
    SubspaceBasis st_perp = orthogonal_complement(kinetic_order_subspace(net));
    auto u_opt = realization_in_subspace(s, tau);
    auto v1_opt = realization_in_subspace(st_perp, tau);
    if (!u_opt || !v1_opt) throw std::logic_error("witness sign vector lost its realization");

    Eigen::VectorXd u(n), v1(n);
    for (int i = 0; i < n; ++i) {
        u[i] = to_double((*u_opt)[i]);
        v1[i] = to_double((*v1_opt)[i]);
    }

    MultistationarityWitness out;
    out.tau = tau;
    out.cstar = Eigen::VectorXd::Ones(n);
    for (int i = 0; i < n; ++i)
        if (tau[i] != 0) out.cstar[i] = u[i] / (std::exp(v1[i]) - std::exp(v1[i] / 2.0));
    check_positive(out.cstar, "constructed c*");

    auto circulation = circulation_rates(net);
    out.rates.resize(net.reaction_count());
    for (int r = 0; r < net.reaction_count(); ++r) {
        double denom = monomial(net, net.kinetic_complexes[net.reactions[r].source], out.cstar);
        out.rates[r] = to_double(circulation[r]) / denom;
    }

    out.cprime = out.cstar.array() * v1.array().exp();
    out.c1 = out.cprime;
    out.c2 = out.cstar.array() * (v1 / 2.0).array().exp();

    out.residual1 = complex_balance_residual(net, out.rates, out.c1).residual;
    out.residual2 = complex_balance_residual(net, out.rates, out.c2).residual;
    Eigen::MatrixXd v = to_eigen(orthogonal_complement(s).basis());
    out.class_residual = v.cols() ? (v.transpose() * (out.c1 - out.c2)).cwiseAbs().maxCoeff() : 0.0;
    return out;
}

GeneralizedNetwork pseudo_reaction_transform(const GeneralizedNetwork& net) {
    GeneralizedNetwork out;
    out.species = net.species;
    std::map<Complex, int> ids;
    auto complex_id = [&](const Complex& c) {
        auto it = ids.find(c);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(out.complexes.size());
        out.complexes.push_back(c);
        ids.emplace(c, id);
        return id;
    };

    for (const auto& r : net.reactions) {
        const Complex& kin = net.kinetic_complexes[r.source];
        Complex tgt;
        const int n = net.species_count();
        for (int sp = 0; sp < n; ++sp) {
            Rational coeff = kin.coeff(sp) + net.complexes[r.target].coeff(sp) - net.complexes[r.source].coeff(sp);
            if (coeff < 0)
                throw TransformError("pseudo-reaction has negative coefficient for species '" +
                                     net.species[sp].name + "'");
            if (coeff != 0) tgt.set(sp, coeff);
        }
        out.reactions.push_back({complex_id(kin), complex_id(tgt), r.rate});
    }
    out.kinetic_complexes = out.complexes;  // classical kinetics
    out.validate();
    return out;
}

DeficiencyReport direct_deficiencies(const GeneralizedNetwork& net, const std::vector<Rational>& rates) {
    auto lap = laplacian(net, rates);
    auto dec = decompose(net);
    DeficiencyReport rep;
    rep.m = net.complex_count();
    rep.l = dec.l;
    rep.s = stoichiometric_subspace(net).dim();
    rep.s_tilde = kinetic_order_subspace(net).dim();
    SubspaceBasis im_a = column_space_basis(lap.a);
    rep.delta = intersection_dim(kernel_basis(complex_matrix(net)), im_a);
    rep.delta_tilde = intersection_dim(kernel_basis(kinetic_matrix(net)), im_a);
    rep.method = DeficiencyReport::Method::direct;
    return rep;
}

}  // namespace gmak
