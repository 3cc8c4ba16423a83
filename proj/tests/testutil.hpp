#ifndef GMAK_TESTUTIL_HPP
#define GMAK_TESTUTIL_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "gmak/exactla.hpp"
#include "gmak/network.hpp"

namespace gmak::testutil {

inline Rational random_coeff(std::mt19937_64& rng) {
    static const Rational pool[] = {Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(3, 2)};
    return pool[rng() % 5];
}

inline Rational random_positive_rational(std::mt19937_64& rng) {
    long p = 1 + static_cast<long>(rng() % 9);
    long q = 1 + static_cast<long>(rng() % 9);
    return make_rational(p, q);
}

inline Complex random_complex(std::mt19937_64& rng, int n) {
    Complex c;
    for (int s = 0; s < n; ++s)
        if (rng() % 2 == 0) c.set(s, random_coeff(rng));
    return c;
}

// Random valid network: n <= 6 species, m <= 8 complexes, every complex in at
// least one reaction, no duplicate edges. When weakly_reversible is set the
// edge set is a union of directed cycles (plus chords inside them).
inline GeneralizedNetwork random_network(std::mt19937_64& rng, bool weakly_reversible,
                                         bool random_kinetics = true) {
    const int n = 1 + static_cast<int>(rng() % 6);
    // with few species only a few distinct complexes exist (6 for n = 1)
    const int m = std::min(2 + static_cast<int>(rng() % 7), n == 1 ? 4 : 8);

    GeneralizedNetwork net;
    for (int s = 0; s < n; ++s) net.species.push_back({std::string(1, static_cast<char>('A' + s)), s});

    std::set<Complex> seen;
    while (static_cast<int>(net.complexes.size()) < m) {
        Complex c = random_complex(rng, n);
        if (seen.insert(c).second) net.complexes.push_back(c);
    }

    std::set<std::pair<int, int>> edges;
    auto add_edge = [&](int a, int b) {
        if (a != b && edges.insert({a, b}).second) net.reactions.push_back({a, b, random_positive_rational(rng)});
    };

    if (weakly_reversible) {
        // partition complexes into cyclic groups
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        size_t pos = 0;
        while (pos < perm.size()) {
            size_t len = 2 + rng() % 3;
            len = std::min(len, perm.size() - pos);
            if (perm.size() - (pos + len) == 1) ++len;  // no singleton leftovers
            if (len == 1) break;
            for (size_t i = 0; i < len; ++i) add_edge(perm[pos + i], perm[pos + (i + 1) % len]);
            // a chord inside the cycle keeps strong connectivity
            if (len > 2 && rng() % 2 == 0) add_edge(perm[pos + rng() % len], perm[pos + rng() % len]);
            pos += len;
        }
    } else {
        int extra = 1 + static_cast<int>(rng() % (2 * m));
        for (int e = 0; e < extra; ++e) add_edge(static_cast<int>(rng() % m), static_cast<int>(rng() % m));
        // cover complexes that ended up isolated
        std::vector<bool> used(m, false);
        for (const auto& r : net.reactions) used[r.source] = used[r.target] = true;
        for (int y = 0; y < m; ++y)
            if (!used[y]) add_edge(y, (y + 1 + static_cast<int>(rng() % (m - 1))) % m);
    }

    net.kinetic_complexes = net.complexes;
    if (random_kinetics && rng() % 2 == 0) {
        std::set<Complex> kin_seen;
        for (int y = 0; y < m; ++y) {
            if (rng() % 3 == 0) {
                Complex c = random_complex(rng, n);
                if (!kin_seen.count(c)) net.kinetic_complexes[y] = c;
            }
            kin_seen.insert(net.kinetic_complexes[y]);
        }
        // fall back to the stoichiometric complexes if distinctness broke
        std::set<Complex> all(net.kinetic_complexes.begin(), net.kinetic_complexes.end());
        if (static_cast<int>(all.size()) != m) net.kinetic_complexes = net.complexes;
    }

    net.validate();
    return net;
}

inline std::vector<Rational> random_rates(std::mt19937_64& rng, const GeneralizedNetwork& net) {
    std::vector<Rational> k;
    for (int r = 0; r < net.reaction_count(); ++r) k.push_back(random_positive_rational(rng));
    return k;
}

// Random subspace basis: n x d integer matrix of full column rank.
inline SubspaceBasis random_subspace(std::mt19937_64& rng, int n, int d) {
    while (true) {
        RationalMatrix m(n, d);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) m.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
        if (rank(m) == d) return SubspaceBasis(m);
    }
}

}  // namespace gmak::testutil

#endif
