#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gmak/dynamics.hpp"
#include "gmak/equilibria.hpp"
#include "gmak/errors.hpp"
#include "gmak/network_io.hpp"
#include "gmak/report.hpp"

namespace {

using namespace gmak;

constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitWitness = 4;

GeneralizedNetwork load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_network(ss.str());
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw ValidationError("empty entry in list '" + text + "'");
        out.push_back(parse_rational_flexible(item.substr(a, b - a + 1)));
    }
    return out;
}

std::vector<Rational> resolve_rates(const GeneralizedNetwork& net, const std::string& rates_flag) {
    std::vector<Rational> rates;
    if (!rates_flag.empty()) {
        rates = parse_rational_list(rates_flag);
    } else {
        rates = net.rates_or_throw();
    }
    check_rates(net, rates);
    return rates;
}

Eigen::VectorXd parse_concentrations(const GeneralizedNetwork& net, const std::string& flag, const char* what) {
    auto vals = parse_rational_list(flag);
    if (static_cast<int>(vals.size()) != net.species_count())
        throw ValidationError(std::string(what) + ": expected " + std::to_string(net.species_count()) +
                              " entries (species order)");
    Eigen::VectorXd c(net.species_count());
    for (int i = 0; i < net.species_count(); ++i) c[i] = to_double(vals[i]);
    return c;
}

std::string reaction_label(const GeneralizedNetwork& net, const Reaction& r) {
    return complex_to_string(net, net.complexes[r.source]) + " -> " +
           complex_to_string(net, net.complexes[r.target]);
}

nlohmann::json vec_to_json(const Eigen::VectorXd& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

int cmd_analyze(const std::string& file, bool json) {
    auto net = load_network(file);
    Report rep = analyze(net);
    if (json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        std::cout << report_to_text(rep);
    return 0;
}

int cmd_equilibria(const std::string& file, const std::string& rates_flag, const std::string& init_flag,
                   int starts, unsigned long seed, bool json) {
    auto net = load_network(file);
    auto rates = resolve_rates(net, rates_flag);

    auto cstar = find_complex_balancing(net, rates);
    if (!cstar) {
        auto dec = decompose(net);
        if (!dec.weakly_reversible)
            throw HypothesisError(
                "no complex balancing equilibrium: the network is not weakly reversible, "
                "and weak reversibility is necessary for one to exist");
        throw HypothesisError("no complex balancing equilibrium found via the log-linear solve");
    }

    Eigen::VectorXd cprime = parse_concentrations(net, init_flag, "--init");
    SolveOptions opts;
    opts.starts = starts;
    opts.seed = seed;
    auto sols = solve_in_class(net, rates, *cstar, cprime, opts);

    auto rates_d = to_double_vec(rates);
    Eigen::MatrixXd vperp(net.species_count(), 0);
    {
        auto b = orthogonal_complement(stoichiometric_subspace(net)).basis();
        vperp.resize(b.rows(), b.cols());
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) vperp(i, j) = to_double(b.at(i, j));
    }

    nlohmann::json j;
    j["rates"] = nlohmann::json::object();
    for (int r = 0; r < net.reaction_count(); ++r)
        j["rates"][reaction_label(net, net.reactions[r])] = to_string(rates[r]);
    j["cstar"] = vec_to_json(*cstar);
    j["class"]["gamma"] = vec_to_json(vperp.transpose() * cprime);
    j["equilibria"] = nlohmann::json::array();
    j["residuals"] = nlohmann::json::array();
    for (const auto& c : sols) {
        j["equilibria"].push_back(vec_to_json(c));
        j["residuals"].push_back(complex_balance_residual(net, rates_d, c).residual);
    }
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout.precision(17);
        std::cout << "complex balancing equilibrium c* =";
        for (int i = 0; i < cstar->size(); ++i) std::cout << " " << (*cstar)[i];
        std::cout << "\nequilibria in the class of c' (" << sols.size() << "):\n";
        for (const auto& c : sols) {
            std::cout << " ";
            for (int i = 0; i < c.size(); ++i) std::cout << " " << c[i];
            std::cout << "   residual " << complex_balance_residual(net, rates_d, c).residual << "\n";
        }
    }
    return 0;
}

int cmd_witness(const std::string& file, bool json) {
    auto net = load_network(file);
    auto w = multistationarity_witness(net);

    nlohmann::json j;
    j["tau"] = w.tau.str();
    j["rates"] = nlohmann::json::object();
    for (int r = 0; r < net.reaction_count(); ++r)
        j["rates"][reaction_label(net, net.reactions[r])] = w.rates[r];
    j["cstar"] = vec_to_json(w.cstar);
    j["class"]["cprime"] = vec_to_json(w.cprime);
    j["equilibria"] = {vec_to_json(w.c1), vec_to_json(w.c2)};
    j["residuals"] = {w.residual1, w.residual2};
    j["class_residual"] = w.class_residual;
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout.precision(17);
        std::cout << "witness sign vector " << w.tau.str() << "\nrates:\n";
        for (int r = 0; r < net.reaction_count(); ++r)
            std::cout << "  " << reaction_label(net, net.reactions[r]) << " : " << w.rates[r] << "\n";
        auto pv = [&](const char* name, const Eigen::VectorXd& v) {
            std::cout << name;
            for (int i = 0; i < v.size(); ++i) std::cout << " " << v[i];
            std::cout << "\n";
        };
        pv("c*       ", w.cstar);
        pv("c1       ", w.c1);
        pv("c2       ", w.c2);
        std::cout << "balance residuals " << w.residual1 << " " << w.residual2 << ", class residual "
                  << w.class_residual << "\n";
    }
    return 0;
}

int cmd_simulate(const std::string& file, const std::string& rates_flag, const std::string& init_flag,
                 double t_end, double rtol, double atol) {
    auto net = load_network(file);
    auto rates = resolve_rates(net, rates_flag);
    Eigen::VectorXd c0 = parse_concentrations(net, init_flag, "--init");
    Trajectory traj = integrate(net, rates, c0, t_end, rtol, atol);
    write_csv(std::cout, net, traj);
    return 0;
}

int cmd_transform(const std::string& file, bool json) {
    auto net = load_network(file);
    auto transformed = pseudo_reaction_transform(net);
    Report rep = analyze(transformed);
    if (json) {
        nlohmann::json j;
        j["network"] = network_to_json(transformed);
        j["network_text"] = serialize(transformed);
        j["report"] = report_to_json(rep);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << serialize(transformed);
        std::cout << "# m=" << transformed.complex_count() << " l=" << rep.graph.l
                  << " weakly_reversible=" << (rep.graph.weakly_reversible ? "yes" : "no")
                  << " delta=" << rep.deficiency.delta << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis of generalized mass-action reaction networks"};
    app.require_subcommand(1);

    std::string file, rates_flag, init_flag;
    bool json = false;
    int starts = 32;
    unsigned long seed = 0;
    double t_end = 100.0, rtol = 1e-8, atol = 1e-10;

    auto* analyze_cmd = app.add_subcommand("analyze", "graph, subspace, deficiency and sign-vector report");
    analyze_cmd->add_option("file", file, "network file")->required();
    analyze_cmd->add_flag("--json", json, "emit JSON");

    auto* eq_cmd = app.add_subcommand("equilibria", "complex balancing equilibria in a compatibility class");
    eq_cmd->add_option("file", file)->required();
    eq_cmd->add_option("--rates", rates_flag, "comma list, reaction order (default: rates from the file)");
    eq_cmd->add_option("--init", init_flag, "initial concentrations c', species order")->required();
    eq_cmd->add_option("--starts", starts, "Newton starts");
    eq_cmd->add_option("--seed", seed, "random seed");
    eq_cmd->add_flag("--json", json);

    auto* wit_cmd = app.add_subcommand("witness", "construct rates with two equilibria in one class");
    wit_cmd->add_option("file", file)->required();
    wit_cmd->add_flag("--json", json);

    auto* sim_cmd = app.add_subcommand("simulate", "integrate the ODE, CSV on stdout");
    sim_cmd->add_option("file", file)->required();
    sim_cmd->add_option("--rates", rates_flag);
    sim_cmd->add_option("--init", init_flag)->required();
    sim_cmd->add_option("--t-end", t_end);
    sim_cmd->add_option("--rtol", rtol);
    sim_cmd->add_option("--atol", atol);

    auto* tr_cmd = app.add_subcommand("transform", "Horn-Jackson pseudo-reaction rewriting");
    tr_cmd->add_option("file", file)->required();
    tr_cmd->add_flag("--json", json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(file, json);
        if (eq_cmd->parsed()) return cmd_equilibria(file, rates_flag, init_flag, starts, seed, json);
        if (wit_cmd->parsed()) return cmd_witness(file, json);
        if (sim_cmd->parsed()) return cmd_simulate(file, rates_flag, init_flag, t_end, rtol, atol);
        if (tr_cmd->parsed()) return cmd_transform(file, json);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const HypothesisError& e) {
        std::cerr << e.what() << "\n";
        return wit_cmd->parsed() ? kExitWitness : kExitSolver;
    } catch (const TransformError& e) {
        std::cerr << e.what() << "\n";
        return kExitSolver;
    } catch (const NumericsError& e) {
        std::cerr << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
