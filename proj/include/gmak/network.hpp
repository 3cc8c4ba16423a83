#ifndef GMAK_NETWORK_HPP
#define GMAK_NETWORK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmak/matrix.hpp"
#include "gmak/rational.hpp"

namespace gmak {

struct Species {
    std::string name;
    int index = 0;  // declaration order, fixes the identification of species space with R^n

    bool operator==(const Species&) const = default;
};

// Formal nonnegative combination of species, stored sparsely (absent = 0).
class Complex {
public:
    Complex() = default;

    Rational coeff(int species) const;
    void set(int species, const Rational& value);  // rejects negatives, drops zeros

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    std::vector<Rational> dense(int n) const;

    bool operator==(const Complex&) const = default;
    auto operator<=>(const Complex&) const = default;

private:
    std::map<int, Rational> coeffs_;
};

struct Reaction {
    int source = -1;  // complex id
    int target = -1;
    std::optional<Rational> rate;  // positive when present

    bool operator==(const Reaction&) const = default;
};

// The tuple (S, C, Ctilde, R, k): a reaction network whose complexes carry a
// parallel family of kinetic complexes fixing the rate-function exponents.
// All values are immutable after construction and safe to share across threads.
struct GeneralizedNetwork {
    std::vector<Species> species;
    std::vector<Complex> complexes;
    std::vector<Complex> kinetic_complexes;  // parallel to complexes
    std::vector<Reaction> reactions;

    int species_count() const { return static_cast<int>(species.size()); }
    int complex_count() const { return static_cast<int>(complexes.size()); }
    int reaction_count() const { return static_cast<int>(reactions.size()); }

    // True when every kinetic complex equals its stoichiometric complex.
    bool classical() const { return kinetic_complexes == complexes; }

    // Rates for all reactions, in reaction order. Throws ValidationError if any
    // reaction is missing one.
    std::vector<Rational> rates_or_throw() const;

    // Throws ValidationError naming the first violated invariant.
    void validate() const;

    bool operator==(const GeneralizedNetwork&) const = default;
};

// n x m matrix Y with column y holding that complex's coefficients.
RationalMatrix complex_matrix(const GeneralizedNetwork& net);

// n x m matrix over the kinetic complexes.
RationalMatrix kinetic_matrix(const GeneralizedNetwork& net);

// Positive rate vector checked against the network's reaction count.
void check_rates(const GeneralizedNetwork& net, const std::vector<Rational>& rates);

}  // namespace gmak

#endif
