#include "gmak/network.hpp"

#include <set>

#include "gmak/errors.hpp"

namespace gmak {

Rational Complex::coeff(int species) const {
    auto it = coeffs_.find(species);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void Complex::set(int species, const Rational& value) {
    if (value < 0) throw ValidationError("negative stoichiometric coefficient");
    if (value == 0)
        coeffs_.erase(species);
    else
        coeffs_[species] = value;
}

std::vector<Rational> Complex::dense(int n) const {
    std::vector<Rational> v(n);
    for (const auto& [s, q] : coeffs_) v[s] = q;
    return v;
}

std::vector<Rational> GeneralizedNetwork::rates_or_throw() const {
    std::vector<Rational> k;
    k.reserve(reactions.size());
    for (const auto& r : reactions) {
        if (!r.rate) throw ValidationError("reaction without rate constant");
        k.push_back(*r.rate);
    }
    return k;
}

void GeneralizedNetwork::validate() const {
    std::set<std::string> names;
    for (int i = 0; i < species_count(); ++i) {
        if (species[i].name.empty()) throw ValidationError("empty species name");
        if (species[i].index != i) throw ValidationError("species indices not contiguous");
        if (!names.insert(species[i].name).second)
            throw ValidationError("duplicate species name '" + species[i].name + "'");
    }
    if (kinetic_complexes.size() != complexes.size())
        throw ValidationError("kinetic complex list length differs from complex list");

    const int m = complex_count();
    for (const auto& c : complexes)
        for (const auto& [s, q] : c.coeffs()) {
            if (s < 0 || s >= species_count()) throw ValidationError("complex references unknown species");
            if (q < 0) throw ValidationError("negative stoichiometric coefficient");
        }
    for (const auto& c : kinetic_complexes)
        for (const auto& [s, q] : c.coeffs()) {
            if (s < 0 || s >= species_count()) throw ValidationError("kinetic complex references unknown species");
            if (q < 0) throw ValidationError("negative kinetic-order coefficient");
        }

    std::set<Complex> distinct(complexes.begin(), complexes.end());
    if (static_cast<int>(distinct.size()) != m) throw ValidationError("complexes not pairwise distinct");
    std::set<Complex> distinct_kin(kinetic_complexes.begin(), kinetic_complexes.end());
    if (static_cast<int>(distinct_kin.size()) != m)
        throw ValidationError("kinetic complexes not pairwise distinct");

    std::vector<bool> used(m, false);
    std::set<std::pair<int, int>> edges;
    for (const auto& r : reactions) {
        if (r.source < 0 || r.source >= m || r.target < 0 || r.target >= m)
            throw ValidationError("reaction references unknown complex");
        if (r.source == r.target) throw ValidationError("self-loop reaction y -> y");
        if (!edges.insert({r.source, r.target}).second)
            throw ValidationError("duplicate reaction");
        if (r.rate && *r.rate <= 0) throw ValidationError("nonpositive rate constant");
        used[r.source] = used[r.target] = true;
    }
    for (int y = 0; y < m; ++y)
        if (!used[y]) throw ValidationError("orphan complex (appears in no reaction)");
}

static RationalMatrix coefficient_matrix(const GeneralizedNetwork& net, const std::vector<Complex>& cs) {
    RationalMatrix m(net.species_count(), static_cast<int>(cs.size()));
    for (int y = 0; y < static_cast<int>(cs.size()); ++y)
        for (const auto& [s, q] : cs[y].coeffs()) m.at(s, y) = q;
    return m;
}

RationalMatrix complex_matrix(const GeneralizedNetwork& net) {
    return coefficient_matrix(net, net.complexes);
}

RationalMatrix kinetic_matrix(const GeneralizedNetwork& net) {
    return coefficient_matrix(net, net.kinetic_complexes);
}

void check_rates(const GeneralizedNetwork& net, const std::vector<Rational>& rates) {
    if (static_cast<int>(rates.size()) != net.reaction_count())
        throw ValidationError("rate vector length differs from reaction count");
    for (const auto& k : rates)
        if (k <= 0) throw ValidationError("nonpositive rate constant");
}

}  // namespace gmak
