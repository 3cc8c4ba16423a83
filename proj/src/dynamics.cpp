#include "gmak/dynamics.hpp"

#include <cmath>
#include <iomanip>
#include <optional>

#include "gmak/errors.hpp"

namespace gmak {

Eigen::VectorXd formation_rate(const GeneralizedNetwork& net, const std::vector<Rational>& rates,
                               const Eigen::VectorXd& c) {
    check_rates(net, rates);
    if (c.size() != net.species_count()) throw ValidationError("concentration vector length mismatch");
    for (int i = 0; i < c.size(); ++i)
        if (c[i] < 0) throw ValidationError("negative concentration");

    Eigen::VectorXd r = Eigen::VectorXd::Zero(net.species_count());
    for (int i = 0; i < net.reaction_count(); ++i) {
        const auto& rx = net.reactions[i];
        double flow = to_double(rates[i]);
        for (const auto& [s, q] : net.kinetic_complexes[rx.source].coeffs())
            flow *= std::pow(c[s], to_double(q));
        for (const auto& [s, q] : net.complexes[rx.target].coeffs()) r[s] += flow * to_double(q);
        for (const auto& [s, q] : net.complexes[rx.source].coeffs()) r[s] -= flow * to_double(q);
    }
    return r;
}

Eigen::MatrixXd rate_jacobian(const GeneralizedNetwork& net, const std::vector<Rational>& rates,
                              const Eigen::VectorXd& c) {
    check_rates(net, rates);
    const int n = net.species_count();
    if (c.size() != n) throw ValidationError("concentration vector length mismatch");
    for (int i = 0; i < n; ++i) {
        if (c[i] > 0) continue;
        if (c[i] < 0) throw ValidationError("negative concentration");
        for (const auto& kin : net.kinetic_complexes)
            if (kin.coeff(i) > 0)
                throw ValidationError("zero concentration with positive kinetic exponent for species '" +
                                      net.species[i].name + "'");
    }

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < net.reaction_count(); ++i) {
        const auto& rx = net.reactions[i];
        const auto& kin = net.kinetic_complexes[rx.source];
        double flow = to_double(rates[i]);
        for (const auto& [s, q] : kin.coeffs()) flow *= std::pow(c[s], to_double(q));
        for (const auto& [sigma, exp] : kin.coeffs()) {
            double dflow = flow * to_double(exp) / c[sigma];
            for (const auto& [s, q] : net.complexes[rx.target].coeffs()) jac(s, sigma) += dflow * to_double(q);
            for (const auto& [s, q] : net.complexes[rx.source].coeffs()) jac(s, sigma) -= dflow * to_double(q);
        }
    }
    return jac;
}

namespace {

// Dormand-Prince 5(4) pair
const double A21 = 1.0 / 5;
const double A31 = 3.0 / 40, A32 = 9.0 / 40;
const double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
const double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561, A54 = -212.0 / 729;
const double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
             A65 = -5103.0 / 18656;
const double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784, B6 = 11.0 / 84;
const double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
             E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
             E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

}  // namespace

Trajectory integrate(const GeneralizedNetwork& net, const std::vector<Rational>& rates,
                     const Eigen::VectorXd& c0, double t_end, double rtol, double atol) {
    if (!(t_end > 0)) throw ValidationError("t_end must be positive");
    for (int i = 0; i < c0.size(); ++i)
        if (!(c0[i] > 0)) throw ValidationError("initial concentrations must be strictly positive");

    // stage evaluator; declines when an intermediate point leaves the
    // nonnegative orthant so the caller can reject the step
    auto f = [&](const Eigen::VectorXd& y) -> std::optional<Eigen::VectorXd> {
        if ((y.array() < 0).any()) return std::nullopt;
        return formation_rate(net, rates, y);
    };

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.states.push_back(c0);

    const double h_min = 1e-14 * t_end;
    double t = 0.0;
    Eigen::VectorXd y = c0;
    Eigen::VectorXd k1 = *f(y);

    double f_norm = k1.cwiseAbs().maxCoeff();
    double h = f_norm > 0 ? std::min(t_end / 10.0, 0.01 * (1.0 + y.cwiseAbs().maxCoeff()) / f_norm)
                          : t_end / 10.0;
    double err_prev = 1.0;

    while (t < t_end) {
        if (h < h_min) throw NumericsError("integration step underflow (state near the boundary?)");
        h = std::min(h, t_end - t);

        auto reject = [&] {
            ++traj.rejected_steps;
            h *= 0.5;
        };
        auto k2 = f(y + h * (A21 * k1));
        if (!k2) { reject(); continue; }
        auto k3 = f(y + h * (A31 * k1 + A32 * *k2));
        if (!k3) { reject(); continue; }
        auto k4 = f(y + h * (A41 * k1 + A42 * *k2 + A43 * *k3));
        if (!k4) { reject(); continue; }
        auto k5 = f(y + h * (A51 * k1 + A52 * *k2 + A53 * *k3 + A54 * *k4));
        if (!k5) { reject(); continue; }
        auto k6 = f(y + h * (A61 * k1 + A62 * *k2 + A63 * *k3 + A64 * *k4 + A65 * *k5));
        if (!k6) { reject(); continue; }
        Eigen::VectorXd ynew = y + h * (B1 * k1 + B3 * *k3 + B4 * *k4 + B5 * *k5 + B6 * *k6);

        if (!ynew.allFinite()) throw NumericsError("non-finite state during integration");
        if ((ynew.array() < 0).any()) {  // positivity by rejection
            reject();
            continue;
        }

        Eigen::VectorXd k7 = *f(ynew);
        Eigen::VectorXd errv = h * (E1 * k1 + E3 * *k3 + E4 * *k4 + E5 * *k5 + E6 * *k6 + E7 * k7);
        double err = 0.0;
        for (int i = 0; i < y.size(); ++i) {
            double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err = std::max(err, std::abs(errv[i]) / sc);
        }

        if (err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;  // FSAL
            traj.times.push_back(t);
            traj.states.push_back(y);
            double e = std::max(err, 1e-10);
            double factor = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
            h *= std::clamp(factor, 0.2, 5.0);
            err_prev = e;
        } else {
            ++traj.rejected_steps;
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
        }
    }
    return traj;
}

std::vector<double> conservation_residuals(const Trajectory& traj, const SubspaceBasis& sperp) {
    if (traj.states.empty()) throw ValidationError("empty trajectory");
    const int d = sperp.dim();
    std::vector<double> out(d, 0.0);
    Eigen::MatrixXd basis(sperp.ambient_dim(), d);
    for (int i = 0; i < sperp.ambient_dim(); ++i)
        for (int j = 0; j < d; ++j) basis(i, j) = to_double(sperp.basis().at(i, j));
    const Eigen::VectorXd& c0 = traj.states.front();
    for (const auto& c : traj.states) {
        Eigen::VectorXd drift = basis.transpose() * (c - c0);
        for (int j = 0; j < d; ++j) out[j] = std::max(out[j], std::abs(drift[j]));
    }
    return out;
}

void write_csv(std::ostream& out, const GeneralizedNetwork& net, const Trajectory& traj) {
    out << "t";
    for (const auto& s : net.species) out << "," << s.name;
    out << "\n";
    out << std::setprecision(17);
    for (size_t i = 0; i < traj.times.size(); ++i) {
        out << traj.times[i];
        for (int j = 0; j < traj.states[i].size(); ++j) out << "," << traj.states[i][j];
        out << "\n";
    }
}

}  // namespace gmak
