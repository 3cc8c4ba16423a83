#ifndef GMAK_REPORT_HPP
#define GMAK_REPORT_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "gmak/equilibria.hpp"
#include "gmak/exactla.hpp"
#include "gmak/graph.hpp"
#include "gmak/network.hpp"
#include "gmak/signspace.hpp"

namespace gmak {

// Aggregated analysis of one network: graph structure, subspaces,
// deficiencies, sign-vector conditions and the resulting verdict.
struct Report {
    GeneralizedNetwork net;
    LinkageDecomposition graph;
    SubspaceBasis s, s_tilde, s_perp, s_tilde_perp;
    DeficiencyReport deficiency;
    std::string deficiency_note;  // e.g. "direct method with unit rates (t != l)"
    SignVectorSet sigma_s, sigma_s_tilde, sigma_s_perp, sigma_s_tilde_perp;
    FaceLattice lattice_s_perp, lattice_s_tilde_perp;
    std::optional<std::vector<int>> lattice_iso;
    ConservativityResult conservativity;
    UniquenessResult uniqueness;
    AnalysisVerdict verdict;
};

Report analyze(const GeneralizedNetwork& net);

nlohmann::json report_to_json(const Report& rep);
std::string report_to_text(const Report& rep);

nlohmann::json basis_to_json(const SubspaceBasis& b);

}  // namespace gmak

#endif
