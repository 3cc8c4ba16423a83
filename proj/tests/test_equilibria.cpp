#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gmak/equilibria.hpp"
#include "gmak/errors.hpp"
#include "gmak/graph.hpp"
#include "gmak/signspace.hpp"
#include "gmak/network_io.hpp"
#include "testutil.hpp"

using namespace gmak;

namespace {

const char* kAutocatalytic =
    "A + 2 B <=> B + C\n"
    "A + 2 B ~ A + B\n"
    "B + C ~ 2 B + C\n";

GeneralizedNetwork autocat() { return parse_network(kAutocatalytic); }

Eigen::VectorXd vec3(double a, double b, double c) {
    Eigen::VectorXd v(3);
    v << a, b, c;
    return v;
}

}  // namespace

TEST_CASE("laplacian of the reversible pair") {
    auto lap = laplacian(parse_network("A + B <=> C\n"), {1, 1});
    CHECK(lap.a.at(0, 0) == Rational(-1));
    CHECK(lap.a.at(0, 1) == Rational(1));
    CHECK(lap.a.at(1, 0) == Rational(1));
    CHECK(lap.a.at(1, 1) == Rational(-1));
}

TEST_CASE("laplacian of the unit three-cycle is circulant") {
    auto lap = laplacian(parse_network("A -> B\nB -> C\nC -> A\n"), {1, 1, 1});
    for (int j = 0; j < 3; ++j) {
        CHECK(lap.a.at(j, j) == Rational(-1));
        CHECK(lap.a.at((j + 1) % 3, j) == Rational(1));
    }
}

TEST_CASE("laplacian column sums vanish exactly on random networks") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        auto net = testutil::random_network(rng, trial % 2 == 0);
        auto lap = laplacian(net, testutil::random_rates(rng, net));
        for (int j = 0; j < net.complex_count(); ++j) {
            Rational sum = 0;
            for (int i = 0; i < net.complex_count(); ++i) sum += lap.a.at(i, j);
            CHECK(sum == 0);
        }
    }
    CHECK_THROWS_AS(laplacian(parse_network("A -> B\n"), {Rational(0)}), ValidationError);
}

TEST_CASE("positive kernel basis") {
    auto chis = kernel_positive_basis(parse_network("A + B <=> C\n"), {1, 1});
    REQUIRE(chis.size() == 1);
    CHECK(chis[0] == std::vector<Rational>{1, 1});

    auto sink = kernel_positive_basis(parse_network("A -> B\n"), {1});
    REQUIRE(sink.size() == 1);
    CHECK(sink[0] == std::vector<Rational>{0, 1});
}

TEST_CASE("kernel basis supports equal the terminal classes on random networks") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        auto net = testutil::random_network(rng, trial % 2 == 0);
        auto rates = testutil::random_rates(rng, net);
        auto dec = decompose(net);
        auto chis = kernel_positive_basis(net, rates);
        REQUIRE(static_cast<int>(chis.size()) == dec.t);
        auto lap = laplacian(net, rates);
        for (int i = 0; i < dec.t; ++i) {
            // support matches T_i exactly
            for (int y = 0; y < net.complex_count(); ++y) {
                bool in_class = std::find(dec.terminal_classes[i].begin(), dec.terminal_classes[i].end(), y) !=
                                dec.terminal_classes[i].end();
                CHECK((chis[i][y] > 0) == in_class);
            }
            // exact kernel membership
            auto prod = lap.a * chis[i];
            for (const auto& q : prod) CHECK(q == 0);
        }
        if (dec.weakly_reversible) CHECK(static_cast<int>(chis.size()) == dec.l);
    }
}

TEST_CASE("psi_tilde evaluates the kinetic monomials") {
    auto net = autocat();
    Eigen::VectorXd psi = psi_tilde(net, vec3(1, 2, 3));
    CHECK(psi[0] == doctest::Approx(2).epsilon(1e-14));   // [A][B]
    CHECK(psi[1] == doctest::Approx(12).epsilon(1e-14));  // [B]^2 [C]

    Eigen::VectorXd ones = psi_tilde(net, vec3(1, 1, 1));
    CHECK(ones[0] == 1.0);
    CHECK(ones[1] == 1.0);

    // empty kinetic complex evaluates to 1 even at zero concentrations (0^0 = 1)
    auto inflow = parse_network("0 -> A\nA -> 0\n");
    Eigen::VectorXd c1(1);
    c1 << 0.0;
    CHECK(psi_tilde(inflow, c1)[0] == 1.0);

    Eigen::VectorXd neg(3);
    neg << 1, -1, 1;
    CHECK_THROWS_AS(psi_tilde(net, neg), ValidationError);
}

TEST_CASE("find_complex_balancing on the worked examples") {
    auto net = autocat();
    auto cstar = find_complex_balancing(net, {1, 1});
    REQUIRE(cstar.has_value());
    CHECK((*cstar - vec3(1, 1, 1)).cwiseAbs().maxCoeff() < 1e-12);

    auto classical = parse_network("A + B <=> C\n");
    auto c2 = find_complex_balancing(classical, {2, 1});
    REQUIRE(c2.has_value());
    CHECK((*c2)[0] * (*c2)[1] / (*c2)[2] == doctest::Approx(0.5).epsilon(1e-10));

    CHECK_FALSE(find_complex_balancing(parse_network("A -> B\n"), {1}).has_value());
}

TEST_CASE("weakly reversible kinetic-deficiency-zero networks always balance") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 40) {
        auto net = testutil::random_network(rng, true);
        auto dec = decompose(net);
        if (!dec.weakly_reversible) continue;
        if (structural_deficiencies(net).delta_tilde != 0) continue;
        auto rates = testutil::random_rates(rng, net);
        auto cstar = find_complex_balancing(net, rates);
        REQUIRE(cstar.has_value());
        auto res = complex_balance_residual(net, to_double_vec(rates), *cstar);
        CHECK(res.residual <= 1e-9 * res.scale);
        ++done;
    }
}

TEST_CASE("Birch map evaluation and Jacobian at zero") {
    Eigen::MatrixXd v(3, 2);
    v << 1, 0, 0, 1, 1, 1;
    BirchMap bm{Eigen::VectorXd::Ones(3), v, v};
    Eigen::VectorXd f0 = evaluate_F(bm, Eigen::VectorXd::Zero(2));
    CHECK(f0[0] == doctest::Approx(2).epsilon(1e-14));
    CHECK(f0[1] == doctest::Approx(2).epsilon(1e-14));

    Eigen::MatrixXd j0 = jacobian_F(bm, Eigen::VectorXd::Zero(2));
    CHECK(j0(0, 0) == doctest::Approx(2).epsilon(1e-14));
    CHECK(j0(0, 1) == doctest::Approx(1).epsilon(1e-14));
    CHECK(j0(1, 0) == doctest::Approx(1).epsilon(1e-14));
    CHECK(j0(1, 1) == doctest::Approx(2).epsilon(1e-14));

    Eigen::VectorXd huge = Eigen::VectorXd::Constant(2, 1000.0);
    CHECK_THROWS_AS(evaluate_F(bm, huge), NumericsError);
}

TEST_CASE("Jacobian of F matches central finite differences") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        int d = 1 + static_cast<int>(rng() % 2);
        int dt = 1 + static_cast<int>(rng() % 2);
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
                CHECK(std::abs(fd[i] - jac(i, j)) <= 1e-6 * (1.0 + std::abs(jac(i, j))));
        }
    }
}

TEST_CASE("solve_in_class: unique equilibrium for the classical pair") {
    auto net = parse_network("A + B <=> C\n");
    auto cstar = find_complex_balancing(net, {1, 1});
    REQUIRE(cstar.has_value());
    auto sols = solve_in_class(net, {1, 1}, *cstar, vec3(2, 1, 1), {});
    REQUIRE(sols.size() == 1);
    // invariants: -A + B = -1, A + C = 3, balance A*B = C
    const auto& c = sols[0];
    CHECK(c[0] * c[1] == doctest::Approx(c[2]).epsilon(1e-9));
    CHECK(c[1] - c[0] == doctest::Approx(-1).epsilon(1e-9));
    CHECK(c[0] + c[2] == doctest::Approx(3).epsilon(1e-9));
    CHECK(c[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("solve_in_class: the autocatalytic quadratic, three class regimes") {
    auto net = autocat();
    auto cstar = find_complex_balancing(net, {1, 1});
    REQUIRE(cstar.has_value());

    SUBCASE("two equilibria") {
        auto sols = solve_in_class(net, {1, 1}, *cstar, vec3(4, 3, 1), {});
        REQUIRE(sols.size() == 2);
        double r1 = 2.5 - std::sqrt(1.25), r2 = 2.5 + std::sqrt(1.25);
        CHECK(std::abs(sols[1][2] - r1) <= 1e-8 * r1);
        CHECK(std::abs(sols[0][2] - r2) <= 1e-8 * r2);
        for (const auto& c : sols) {
            CHECK(c[0] + c[2] == doctest::Approx(5).epsilon(1e-9));
            CHECK(c[1] + c[2] == doctest::Approx(4).epsilon(1e-9));
        }
    }
    SUBCASE("one equilibrium") {
        auto sols = solve_in_class(net, {1, 1}, *cstar, vec3(1, 2, 1), {});
        REQUIRE(sols.size() == 1);
        CHECK(std::abs(sols[0][2] - (2.0 - std::sqrt(2.0))) <= 1e-8);
    }
    SUBCASE("empty class") {
        auto sols = solve_in_class(net, {1, 1}, *cstar, vec3(1.5, 0.5, 0.5), {});
        CHECK(sols.empty());
    }
}

TEST_CASE("uniqueness condition") {
    CHECK_FALSE(check_uniqueness(autocat()).unique);
    CHECK(check_uniqueness(autocat()).witness == SignVector::parse("--+"));

    CHECK(check_uniqueness(parse_network(
                               "A + B <=> C\n"
                               "A + B ~ 1/2 A + 3/2 B\n"
                               "C ~ 2 C\n"))
              .unique);

    // S = span{(-1,1)}, Stilde = span{(-1,0)}: unique although sign sets differ
    auto remark = parse_network("A -> B\nB ~ 0\n");
    CHECK(check_uniqueness(remark).unique);
    CHECK_FALSE(sign_sets_equal(stoichiometric_subspace(remark), kinetic_order_subspace(remark)));
}

TEST_CASE("genthm condition bundle") {
    auto v1 = check_genthm(parse_network(
        "A + B <=> C\n"
        "A + B ~ 1/2 A + 3/2 B\n"
        "C ~ 2 C\n"));
    CHECK(v1.weakly_reversible);
    CHECK(v1.deficiency_zero);
    CHECK(v1.kinetic_deficiency_zero);
    CHECK(v1.sign_sets_equal);
    CHECK(v1.conservative);
    CHECK(v1.uniqueness);
    CHECK(v1.surjectivity_hypothesis);
    CHECK(v1.genthm_applies);

    auto v2 = check_genthm(autocat());
    CHECK_FALSE(v2.genthm_applies);
    CHECK_FALSE(v2.surjectivity_hypothesis);
    CHECK_FALSE(v2.uniqueness);
    CHECK(v2.witness_sign_vector == SignVector::parse("--+"));

    auto v3 = check_genthm(parse_network("A + B <=> C\n"));
    CHECK(v3.sign_sets_equal);  // classical: identical subspaces
}

TEST_CASE("multistationarity witness on the autocatalytic example") {
    auto net = autocat();
    auto w = multistationarity_witness(net);
    CHECK(w.tau == SignVector::parse("--+"));
    CHECK(w.residual1 <= 1e-9);
    CHECK(w.residual2 <= 1e-9);
    CHECK(w.class_residual <= 1e-8);
    CHECK((w.c1 - w.c2).cwiseAbs().maxCoeff() > 1e-3);
    for (double k : w.rates) CHECK(k > 0);
    for (int i = 0; i < 3; ++i) {
        CHECK(w.c1[i] > 0);
        CHECK(w.c2[i] > 0);
    }
    // c1 - c2 realizes tau, as in the construction
    Eigen::VectorXd diff = w.c1 - w.c2;
    CHECK(diff[0] < 0);
    CHECK(diff[1] < 0);
    CHECK(diff[2] > 0);
}

TEST_CASE("multistationarity witness rejects classical networks") {
    CHECK_THROWS_AS(multistationarity_witness(parse_network("A + B <=> C\n")), HypothesisError);
    CHECK_THROWS_AS(multistationarity_witness(parse_network("A -> B\n")), HypothesisError);
}

TEST_CASE("pseudo-reaction transform of the generalized reversible pair") {
    auto net = parse_network(
        "A + B <=> C\n"
        "A + B ~ 2 A + 3 B\n"
        "C ~ 2 C\n");
    auto tr = pseudo_reaction_transform(net);
    CHECK(tr.complex_count() == 4);
    CHECK(tr.classical());
    auto dec = decompose(tr);
    CHECK(dec.l == 2);
    CHECK_FALSE(dec.weakly_reversible);
    CHECK(structural_deficiencies(tr).delta == 1);
    CHECK(subspaces_equal(stoichiometric_subspace(tr), stoichiometric_subspace(net)));
}

TEST_CASE("pseudo-reaction transform is the identity on classical networks") {
    auto net = parse_network("A + B <=> C\nA -> 2 B\n");
    auto tr = pseudo_reaction_transform(net);
    CHECK(tr == net);
}

TEST_CASE("pseudo-reaction transform rejects negative coefficients") {
    auto net = parse_network(
        "A + B <=> C\n"
        "A + B ~ 1/2 A + 3/2 B\n"
        "C ~ 2 C\n");
    CHECK_THROWS_AS(pseudo_reaction_transform(net), TransformError);
}

TEST_CASE("transform preserves the stoichiometric subspace on random networks") {
    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 30) {
        auto net = testutil::random_network(rng, done % 2 == 0);
        GeneralizedNetwork tr;
        try {
            tr = pseudo_reaction_transform(net);
        } catch (const TransformError&) {
            continue;  // rewriting not applicable to this sample
        }
        CHECK(subspaces_equal(stoichiometric_subspace(tr), stoichiometric_subspace(net)));
        ++done;
    }
}
