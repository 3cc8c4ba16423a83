// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gmak/dynamics.hpp"
#include "gmak/equilibria.hpp"
#include "gmak/graph.hpp"
#include "gmak/network_io.hpp"
#include "gmak/report.hpp"
#include "gmak/signspace.hpp"
#include "testutil.hpp"

using namespace gmak;

namespace {

int g_failures = 0;

struct Check {
    std::ostringstream log;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    failed: " << what << "\n";
        }
    }
};

void criterion(int id, const std::string& name, double budget_seconds, const std::function<void(Check&)>& body) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.log << "    exception: " << e.what() << "\n";
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        c.ok = false;
        c.log << "    runtime " << elapsed << " s exceeds budget " << budget_seconds << " s\n";
    }
    std::printf("%s criterion %d: %s (%.2f s)\n", c.ok ? "PASS" : "FAIL", id, name.c_str(), elapsed);
    if (!c.ok) {
        std::fputs(c.log.str().c_str(), stdout);
        ++g_failures;
    }
}

const char* kClassicalPair = "A + B <=> C\n";
const char* kGeneralizedPair =
    "A + B <=> C\n"
    "A + B ~ 1/2 A + 3/2 B\n"
    "C ~ 2 C\n";
const char* kAutocatalytic =
    "A + 2 B <=> B + C\n"
    "A + 2 B ~ A + B\n"
    "B + C ~ 2 B + C\n";
const char* kHornJacksonInput =
    "A + B <=> C\n"
    "A + B ~ 2 A + 3 B\n"
    "C ~ 2 C\n";

Eigen::VectorXd vec3(double a, double b, double c) {
    Eigen::VectorXd v(3);
    v << a, b, c;
    return v;
}

SignVectorSet parse_set(const std::vector<std::string>& strs) {
    SignVectorSet out;
    for (const auto& s : strs) out.insert(SignVector::parse(s));
    return out;
}

std::vector<SignVector> parse_list(const std::vector<std::string>& strs) {
    std::vector<SignVector> out;
    for (const auto& s : strs) out.push_back(SignVector::parse(s));
    return out;
}

// positive roots of the class quadratic x^2 - (K + sum_bc) x + K sum_ac with
// the class positivity filters
std::vector<double> quadratic_oracle(double k, double sum_ac, double sum_bc) {
    double half = (k + sum_bc) / 2.0;
    double disc = half * half - k * sum_ac;
    std::vector<double> roots;
    if (disc < 0) return roots;
    for (double r : {half - std::sqrt(disc), half + std::sqrt(disc)}) {
        if (r > 0 && sum_ac - r > 0 && sum_bc - r > 0) roots.push_back(r);
    }
    if (roots.size() == 2 && roots[0] == roots[1]) roots.pop_back();
    return roots;
}

void criterion1(Check& c) {
    for (const char* text : {kClassicalPair, kGeneralizedPair}) {
        auto rep = analyze(parse_network(text));
        c.require(rep.net.complex_count() == 2, "m = 2");
        c.require(rep.graph.l == 1, "l = 1");
        c.require(rep.s.dim() == 1 && rep.s_tilde.dim() == 1, "s = s~ = 1");
        c.require(rep.deficiency.delta == 0 && rep.deficiency.delta_tilde == 0, "delta = delta~ = 0");
        c.require(rep.graph.weakly_reversible, "weakly reversible");
        c.require(rep.verdict.conservative, "conservative");
        c.require(rep.conservativity.witness == std::vector<Rational>{1, 1, 2}, "witness (1,1,2)");
        c.require(rep.verdict.sign_sets_equal, "sigma(S) = sigma(S~)");
        c.require(rep.verdict.genthm_applies, "genthm applies");
    }
}

void criterion2(Check& c) {
    auto net = parse_network(kHornJacksonInput);
    auto tr = pseudo_reaction_transform(net);
    c.require(tr.complex_count() == 4, "4 complexes");
    auto dec = decompose(tr);
    c.require(dec.l == 2, "2 linkage classes");
    c.require(!dec.weakly_reversible, "not weakly reversible");
    c.require(structural_deficiencies(tr).delta == 1, "delta = 1");
    c.require(subspaces_equal(stoichiometric_subspace(tr), stoichiometric_subspace(net)),
              "stoichiometric subspace unchanged");
}

void criterion3(Check& c) {
    auto rep = analyze(parse_network(kAutocatalytic));
    c.require(rep.sigma_s == parse_set({"000", "--+", "++-"}), "sigma(S) exact");
    c.require(rep.sigma_s_tilde_perp == parse_set({"000", "+++", "---", "+0+", "-0-", "+-+", "-+-", "0-+",
                                                   "0+-", "--+", "++-", "--0", "++0"}),
              "sigma(S~-perp) equals the 13-vector set");
    c.require(rep.sigma_s_tilde_perp.count(SignVector::parse("--+")) == 1 &&
                  rep.sigma_s.count(SignVector::parse("--+")) == 1,
              "--+ lies in the intersection");
    c.require(!rep.verdict.uniqueness, "uniqueness = false");
    c.require(rep.lattice_s_perp.elements == parse_list({"000", "0++", "+0+", "+++"}),
              "face lattice of cone(V rows)");
    c.require(rep.lattice_s_tilde_perp.elements == parse_list({"000", "+0+", "++0", "+++"}),
              "face lattice of cone(V~ rows)");
    c.require(!rep.lattice_iso.has_value(), "no dominant lattice isomorphism");
    c.require(!rep.verdict.genthm_applies, "genthm does not apply");
}

void criterion4(Check& c) {
    auto net = parse_network(kAutocatalytic);
    std::vector<Rational> rates{1, 1};
    auto cstar = find_complex_balancing(net, rates);
    c.require(cstar.has_value(), "complex balancing equilibrium exists");
    if (!cstar) return;

    const double k = 1.0;
    const std::vector<std::pair<double, double>> classes{{5, 4}, {2, 3}, {2, 1}};
    const std::vector<size_t> expected_counts{2, 1, 0};
    for (size_t i = 0; i < classes.size(); ++i) {
        auto [sum_ac, sum_bc] = classes[i];
        auto oracle = quadratic_oracle(k, sum_ac, sum_bc);
        c.require(oracle.size() == expected_counts[i], "oracle count for class " + std::to_string(i));

        double c0 = std::min(sum_ac, sum_bc) / 2.0;
        Eigen::VectorXd cprime = vec3(sum_ac - c0, sum_bc - c0, c0);
        SolveOptions opts;
        opts.starts = 32;
        opts.seed = 0;
        auto sols = solve_in_class(net, rates, *cstar, cprime, opts);
        c.require(sols.size() == oracle.size(),
                  "solver count matches oracle for class (" + std::to_string(sum_ac) + "," +
                      std::to_string(sum_bc) + ")");
        // solutions are sorted by [A] = sum_ac - [C]: reverse of root order
        for (size_t s = 0; s < std::min(sols.size(), oracle.size()); ++s) {
            double root = oracle[oracle.size() - 1 - s];
            c.require(std::abs(sols[s][2] - root) <= 1e-8 * root, "root accuracy");
            c.require(std::abs(sols[s][0] - (sum_ac - root)) <= 1e-8 * std::abs(sum_ac - root),
                      "[A] accuracy");
        }
    }
}

void criterion5(Check& c) {
    auto w = multistationarity_witness(parse_network(kAutocatalytic));
    c.require(w.residual1 <= 1e-9, "residual of c1 <= 1e-9");
    c.require(w.residual2 <= 1e-9, "residual of c2 <= 1e-9");
    c.require(w.class_residual <= 1e-8, "c1 - c2 in S within 1e-8");
    c.require((w.c1 - w.c2).cwiseAbs().maxCoeff() > 1e-6, "equilibria distinct");
    c.require(w.c1.minCoeff() > 0 && w.c2.minCoeff() > 0, "equilibria positive");
    for (double r : w.rates) c.require(r > 0, "rates positive");
}

void criterion6(Check& c) {
    std::mt19937_64 rng(2024);

    // (a), (b), (e): 200 random networks
    for (int trial = 0; trial < 200; ++trial) {
        auto net = testutil::random_network(rng, trial % 2 == 0);
        auto rates = testutil::random_rates(rng, net);
        auto dec = decompose(net);

        auto chis = kernel_positive_basis(net, rates);  // validates dim ker A = t internally
        bool supports_ok = static_cast<int>(chis.size()) == dec.t;
        for (int i = 0; i < dec.t && supports_ok; ++i)
            for (int y = 0; y < net.complex_count() && supports_ok; ++y) {
                bool in_class = std::find(dec.terminal_classes[i].begin(), dec.terminal_classes[i].end(),
                                          y) != dec.terminal_classes[i].end();
                supports_ok = (chis[i][y] > 0) == in_class;
            }
        c.require(supports_ok, "kernel supports = terminal classes (trial " + std::to_string(trial) + ")");

        if (dec.t == dec.l) {
            auto direct = direct_deficiencies(net, rates);
            auto structural = structural_deficiencies(net);
            c.require(direct.delta == structural.delta && direct.delta_tilde == structural.delta_tilde,
                      "direct = structural deficiency (trial " + std::to_string(trial) + ")");
        }

        if (dec.weakly_reversible) {
            auto k = circulation_rates(net);
            std::vector<Rational> balance(net.complex_count());
            bool positive = true;
            for (int r = 0; r < net.reaction_count(); ++r) {
                positive = positive && k[r] > 0;
                balance[net.reactions[r].target] += k[r];
                balance[net.reactions[r].source] -= k[r];
            }
            bool balanced = positive;
            for (const auto& b : balance) balanced = balanced && b == 0;
            c.require(balanced, "circulation balances exactly (trial " + std::to_string(trial) + ")");
        }
    }

    // (c): 100 random subspaces, n <= 8
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        int d = 1 + static_cast<int>(rng() % n);
        auto res = duality_check(testutil::random_subspace(rng, n, d));
        c.require(res.ok, "duality on random subspace " + std::to_string(trial));
    }

    // (d): 100 random basis pairs, chirotope equality vs enumeration equality
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        int d = 1 + static_cast<int>(rng() % n);
        auto b1 = testutil::random_subspace(rng, n, d);
        SubspaceBasis b2 = trial % 3 == 0 ? column_space_basis(hcat(b1.basis(), b1.basis()))
                                          : testutil::random_subspace(rng, n, 1 + static_cast<int>(rng() % n));
        bool by_enum = enumerate_sign_vectors(b1) == enumerate_sign_vectors(b2);
        c.require(sign_sets_equal(b1, b2) == by_enum, "chirotope equality trial " + std::to_string(trial));
    }
}

void criterion7(Check& c) {
    std::mt19937_64 rng(4096);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);

    // Birch map Jacobian vs central differences, 20 random points
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        int d = 1 + static_cast<int>(rng() % 3);
        int dt = 1 + static_cast<int>(rng() % 3);
        BirchMap bm;
        bm.cstar = Eigen::VectorXd::NullaryExpr(n, [&] { return 0.2 + std::abs(uni(rng)); });
        bm.v_rows = Eigen::MatrixXd::NullaryExpr(n, d, [&] { return uni(rng); });
        bm.vt_rows = Eigen::MatrixXd::NullaryExpr(n, dt, [&] { return uni(rng); });
        Eigen::VectorXd lambda = Eigen::VectorXd::NullaryExpr(dt, [&] { return uni(rng); });
        Eigen::MatrixXd jac = jacobian_F(bm, lambda);
        const double h = 1e-6;
        for (int j = 0; j < dt; ++j) {
            Eigen::VectorXd lp = lambda, lm = lambda;
            lp[j] += h;
            lm[j] -= h;
            Eigen::VectorXd fd = (evaluate_F(bm, lp) - evaluate_F(bm, lm)) / (2 * h);
            for (int i = 0; i < d; ++i)
                c.require(std::abs(fd[i] - jac(i, j)) <= 1e-6 * (1.0 + std::abs(jac(i, j))),
                          "jacobian_F finite differences");
        }
    }

    // species-rate Jacobian vs central differences, 20 random points
    std::uniform_real_distribution<double> pos(0.2, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        auto net = testutil::random_network(rng, trial % 2 == 0);
        auto rates = testutil::random_rates(rng, net);
        Eigen::VectorXd conc(net.species_count());
        for (int i = 0; i < conc.size(); ++i) conc[i] = pos(rng);
        Eigen::MatrixXd jac = rate_jacobian(net, rates, conc);
        const double h = 1e-6;
        for (int j = 0; j < net.species_count(); ++j) {
            Eigen::VectorXd cp = conc, cm = conc;
            cp[j] += h;
            cm[j] -= h;
            Eigen::VectorXd fd = (formation_rate(net, rates, cp) - formation_rate(net, rates, cm)) / (2 * h);
            for (int i = 0; i < net.species_count(); ++i)
                c.require(std::abs(fd[i] - jac(i, j)) <= 1e-6 * (1.0 + std::abs(jac(i, j))),
                          "rate_jacobian finite differences");
        }
    }

    // conservation over t in [0,100] on both worked examples
    struct Case {
        const char* text;
        Eigen::VectorXd c0;
    };
    for (const auto& [text, c0] : {Case{kGeneralizedPair, vec3(2, 1, 1)}, Case{kAutocatalytic, vec3(4, 3, 1)}}) {
        auto net = parse_network(text);
        auto sperp = orthogonal_complement(stoichiometric_subspace(net));
        auto traj = integrate(net, {1, 1}, c0, 100.0, 1e-8, 1e-10);
        auto residuals = conservation_residuals(traj, sperp);
        for (int j = 0; j < sperp.dim(); ++j) {
            double scale = 0;
            for (int i = 0; i < sperp.ambient_dim(); ++i)
                scale += std::abs(to_double(sperp.basis().at(i, j)) * c0[i]);
            c.require(residuals[j] <= 1e-8 * std::max(scale, 1.0), "conservation drift <= 1e-8 relative");
        }
    }
}

void criterion8(Check& c) {
    std::mt19937_64 rng(8192);
    std::uniform_real_distribution<double> uni(-5.0, 5.0);
    std::uniform_real_distribution<double> pos(0.2, 2.0);

    for (int trial = 0; trial < 20; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        int n = d + 1 + static_cast<int>(rng() % 3);
        // lifted configuration: first coordinate 1 makes the cone pointed
        RationalMatrix m(n, d);
        do {
            for (int i = 0; i < n; ++i) {
                m.at(i, 0) = 1;
                for (int j = 1; j < d; ++j) m.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
            }
        } while (rank(m) != d);

        BirchMap bm;
        bm.v_rows = Eigen::MatrixXd(n, d);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) bm.v_rows(i, j) = to_double(m.at(i, j));
        bm.vt_rows = bm.v_rows;  // base case V = V~
        bm.cstar = Eigen::VectorXd::NullaryExpr(n, [&] { return pos(rng); });

        // random target inside the cone
        Eigen::VectorXd cprime = Eigen::VectorXd::NullaryExpr(n, [&] { return pos(rng); });
        Eigen::VectorXd gamma = bm.v_rows.transpose() * cprime;

        auto base = solve_birch(bm, gamma, Eigen::VectorXd::Zero(d));
        c.require(base.converged, "Newton from 0 converges (trial " + std::to_string(trial) + ")");

        for (int restart = 0; restart < 32; ++restart) {
            Eigen::VectorXd lambda0 = Eigen::VectorXd::NullaryExpr(d, [&] { return uni(rng); });
            auto res = solve_birch(bm, gamma, lambda0);
            c.require(res.converged, "restart converges");
            if (res.converged && base.converged)
                c.require((res.lambda - base.lambda).norm() <= 1e-6, "restarts agree to 1e-6");
        }
    }
}

}  // namespace

int main() {
    criterion(1, "reversible pair report (classical and power-law kinetics)", 1.0, criterion1);
    criterion(2, "Horn-Jackson pseudo-reaction rewriting", 0, criterion2);
    criterion(3, "autocatalytic example: sign vector data", 0, criterion3);
    criterion(4, "autocatalytic example: equilibrium counts per class", 5.0, criterion4);
    criterion(5, "multistationarity witness construction", 0, criterion5);
    criterion(6, "randomized property suite", 60.0, criterion6);
    criterion(7, "derivative and conservation checks", 0, criterion7);
    criterion(8, "Birch base case: global Newton agreement", 0, criterion8);

    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
