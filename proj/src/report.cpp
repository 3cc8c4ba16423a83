#include "gmak/report.hpp"

#include <sstream>

#include "gmak/network_io.hpp"

namespace gmak {

Report analyze(const GeneralizedNetwork& net) {
    Report rep;
    rep.net = net;
    rep.graph = decompose(net);
    rep.s = stoichiometric_subspace(net);
    rep.s_tilde = kinetic_order_subspace(net);
    rep.s_perp = orthogonal_complement(rep.s);
    rep.s_tilde_perp = orthogonal_complement(rep.s_tilde);

    if (rep.graph.t == rep.graph.l) {
        rep.deficiency = structural_deficiencies(net);
    } else {
        bool have_rates = true;
        for (const auto& r : net.reactions) have_rates = have_rates && r.rate.has_value();
        std::vector<Rational> rates =
            have_rates ? net.rates_or_throw() : std::vector<Rational>(net.reaction_count(), Rational(1));
        rep.deficiency = direct_deficiencies(net, rates);
        rep.deficiency_note = have_rates ? "direct method with file rates (t != l)"
                                         : "direct method with unit rates (t != l)";
    }

    rep.sigma_s = enumerate_sign_vectors(rep.s);
    rep.sigma_s_tilde = enumerate_sign_vectors(rep.s_tilde);
    rep.sigma_s_perp = enumerate_sign_vectors(rep.s_perp);
    rep.sigma_s_tilde_perp = enumerate_sign_vectors(rep.s_tilde_perp);
    rep.lattice_s_perp = face_lattice(rep.s_perp);
    rep.lattice_s_tilde_perp = face_lattice(rep.s_tilde_perp);
    rep.lattice_iso = find_dominant_lattice_iso(rep.lattice_s_tilde_perp, rep.lattice_s_perp);
    rep.conservativity = is_conservative(rep.s_perp);
    rep.uniqueness = check_uniqueness(net);

    auto& v = rep.verdict;
    v.weakly_reversible = rep.graph.weakly_reversible;
    v.deficiency_zero = rep.deficiency.delta == 0;
    v.kinetic_deficiency_zero = rep.deficiency.delta_tilde == 0;
    v.sign_sets_equal = sign_sets_equal(rep.s, rep.s_tilde);
    v.conservative = rep.conservativity.conservative;
    v.uniqueness = rep.uniqueness.unique;
    v.witness_sign_vector = rep.uniqueness.witness;
    v.surjectivity_hypothesis = rep.lattice_iso.has_value() && v.conservative;
    v.genthm_applies = v.sign_sets_equal && v.conservative;
    return rep;
}

nlohmann::json basis_to_json(const SubspaceBasis& b) {
    nlohmann::json cols = nlohmann::json::array();
    for (int j = 0; j < b.dim(); ++j) {
        nlohmann::json col = nlohmann::json::array();
        for (int i = 0; i < b.ambient_dim(); ++i) col.push_back(to_string(b.basis().at(i, j)));
        cols.push_back(col);
    }
    return cols;
}

static nlohmann::json signs_to_json(const SignVectorSet& set) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : set) arr.push_back(v.str());
    return arr;
}

static nlohmann::json lattice_to_json(const FaceLattice& lat) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : lat.elements) arr.push_back(v.str());
    return arr;
}

static nlohmann::json classes_to_json(const std::vector<std::vector<int>>& classes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : classes) arr.push_back(c);
    return arr;
}

nlohmann::json report_to_json(const Report& rep) {
    nlohmann::json j;
    j["network"] = network_to_json(rep.net);
    j["network"]["n"] = rep.net.species_count();
    j["network"]["m"] = rep.net.complex_count();
    j["network"]["r"] = rep.net.reaction_count();

    j["graph"] = {
        {"l", rep.graph.l},
        {"t", rep.graph.t},
        {"weakly_reversible", rep.graph.weakly_reversible},
        {"linkage_classes", classes_to_json(rep.graph.linkage_classes)},
        {"strong_linkage_classes", classes_to_json(rep.graph.strong_linkage_classes)},
        {"terminal_classes", classes_to_json(rep.graph.terminal_classes)},
    };

    j["subspaces"] = {
        {"s", rep.s.dim()},
        {"s_tilde", rep.s_tilde.dim()},
        {"S_basis", basis_to_json(rep.s)},
        {"S_tilde_basis", basis_to_json(rep.s_tilde)},
        {"S_perp_basis", basis_to_json(rep.s_perp)},
        {"S_tilde_perp_basis", basis_to_json(rep.s_tilde_perp)},
    };

    j["deficiency"] = {
        {"m", rep.deficiency.m},
        {"l", rep.deficiency.l},
        {"s", rep.deficiency.s},
        {"s_tilde", rep.deficiency.s_tilde},
        {"delta", rep.deficiency.delta},
        {"delta_tilde", rep.deficiency.delta_tilde},
        {"method", rep.deficiency.method == DeficiencyReport::Method::structural ? "structural" : "direct"},
    };
    if (!rep.deficiency_note.empty()) j["deficiency"]["note"] = rep.deficiency_note;

    nlohmann::json witness = nlohmann::json::array();
    for (const auto& q : rep.conservativity.witness) witness.push_back(to_string(q));
    j["signs"] = {
        {"sigma_S", signs_to_json(rep.sigma_s)},
        {"sigma_S_tilde", signs_to_json(rep.sigma_s_tilde)},
        {"sigma_S_perp", signs_to_json(rep.sigma_s_perp)},
        {"sigma_S_tilde_perp", signs_to_json(rep.sigma_s_tilde_perp)},
        {"face_lattice_S_perp", lattice_to_json(rep.lattice_s_perp)},
        {"face_lattice_S_tilde_perp", lattice_to_json(rep.lattice_s_tilde_perp)},
        {"dominant_lattice_iso_exists", rep.lattice_iso.has_value()},
        {"conservation_witness", witness},
    };
    if (rep.lattice_iso) {
        nlohmann::json iso = nlohmann::json::object();
        for (int i = 0; i < rep.lattice_s_tilde_perp.size(); ++i)
            iso[rep.lattice_s_tilde_perp.elements[i].str()] =
                rep.lattice_s_perp.elements[(*rep.lattice_iso)[i]].str();
        j["signs"]["dominant_lattice_iso"] = iso;
    }

    const auto& v = rep.verdict;
    j["verdict"] = {
        {"weakly_reversible", v.weakly_reversible},
        {"deficiency_zero", v.deficiency_zero},
        {"kinetic_deficiency_zero", v.kinetic_deficiency_zero},
        {"sign_sets_equal", v.sign_sets_equal},
        {"conservative", v.conservative},
        {"uniqueness", v.uniqueness},
        {"surjectivity_hypothesis", v.surjectivity_hypothesis},
        {"genthm_applies", v.genthm_applies},
        {"witness_sign_vector",
         v.witness_sign_vector ? nlohmann::json(v.witness_sign_vector->str()) : nlohmann::json(nullptr)},
    };
    return j;
}

static std::string bool_str(bool b) { return b ? "yes" : "no"; }

std::string report_to_text(const Report& rep) {
    std::ostringstream out;
    out << "network      n=" << rep.net.species_count() << "  m=" << rep.net.complex_count()
        << "  reactions=" << rep.net.reaction_count() << "\n";
    out << "species     ";
    for (const auto& s : rep.net.species) out << " " << s.name;
    out << "\n";
    out << "graph        l=" << rep.graph.l << "  t=" << rep.graph.t
        << "  weakly reversible: " << bool_str(rep.graph.weakly_reversible) << "\n";
    out << "subspaces    s=" << rep.s.dim() << "  s~=" << rep.s_tilde.dim() << "\n";
    out << "deficiency   delta=" << rep.deficiency.delta << "  delta~=" << rep.deficiency.delta_tilde
        << "  ("
        << (rep.deficiency.method == DeficiencyReport::Method::structural ? "structural m-l-s" : "direct")
        << (rep.deficiency_note.empty() ? "" : "; " + rep.deficiency_note) << ")\n";

    auto print_signs = [&](const char* name, const SignVectorSet& set) {
        out << name << " {";
        bool first = true;
        for (const auto& v : set) {
            out << (first ? "" : ", ") << v.str();
            first = false;
        }
        out << "}\n";
    };
    print_signs("sigma(S)    ", rep.sigma_s);
    print_signs("sigma(S~)   ", rep.sigma_s_tilde);
    print_signs("sigma(S~+)  ", rep.sigma_s_tilde_perp);

    out << "face lattice of cone(S+ rows)  {";
    for (int i = 0; i < rep.lattice_s_perp.size(); ++i)
        out << (i ? ", " : "") << rep.lattice_s_perp.elements[i].str();
    out << "}\n";
    out << "face lattice of cone(S~+ rows) {";
    for (int i = 0; i < rep.lattice_s_tilde_perp.size(); ++i)
        out << (i ? ", " : "") << rep.lattice_s_tilde_perp.elements[i].str();
    out << "}\n";

    const auto& v = rep.verdict;
    out << "conditions   sigma(S) = sigma(S~): " << bool_str(v.sign_sets_equal) << "\n";
    out << "             conservative: " << bool_str(v.conservative);
    if (v.conservative) {
        out << "  witness (";
        for (size_t i = 0; i < rep.conservativity.witness.size(); ++i)
            out << (i ? "," : "") << to_string(rep.conservativity.witness[i]);
        out << ")";
    }
    out << "\n";
    out << "             uniqueness sigma(S) cap sigma(S~+) = {0}: " << bool_str(v.uniqueness);
    if (v.witness_sign_vector) out << "  witness " << v.witness_sign_vector->str();
    out << "\n";
    out << "             dominant lattice isomorphism: " << bool_str(rep.lattice_iso.has_value()) << "\n";
    out << "verdict      weakly_reversible=" << bool_str(v.weakly_reversible)
        << "  deficiency_zero=" << bool_str(v.deficiency_zero)
        << "  kinetic_deficiency_zero=" << bool_str(v.kinetic_deficiency_zero) << "\n";
    out << "             surjectivity_hypothesis=" << bool_str(v.surjectivity_hypothesis)
        << "  genthm_applies=" << bool_str(v.genthm_applies) << "\n";
    return out.str();
}

}  // namespace gmak
