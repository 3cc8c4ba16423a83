#ifndef GMAK_GRAPH_HPP
#define GMAK_GRAPH_HPP

#include <vector>

#include "gmak/network.hpp"

namespace gmak {

// Partition data of the complex digraph. Classes are sorted by smallest member
// id and each class lists its members in ascending order, so reports are
// reproducible.
struct LinkageDecomposition {
    std::vector<std::vector<int>> linkage_classes;         // L_1..L_l
    std::vector<std::vector<int>> strong_linkage_classes;  // strongly connected components
    std::vector<std::vector<int>> terminal_classes;        // T_1..T_t, no outgoing edge leaves the class
    int l = 0;
    int t = 0;
    bool weakly_reversible = false;

    // linkage class index of a complex
    std::vector<int> linkage_of;
};

LinkageDecomposition decompose(const GeneralizedNetwork& net);

// Positive integer rate vector k (one entry per reaction, reaction order) with
// sum k_{y->y'} (w_{y'} - w_y) = 0, built by covering each reaction with a
// directed cycle and counting multiplicities. Throws HypothesisError if the
// network is not weakly reversible.
std::vector<Rational> circulation_rates(const GeneralizedNetwork& net);

}  // namespace gmak

#endif
