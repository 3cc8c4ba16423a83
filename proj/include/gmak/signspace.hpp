#ifndef GMAK_SIGNSPACE_HPP
#define GMAK_SIGNSPACE_HPP

#include <optional>

#include "gmak/exactla.hpp"
#include "gmak/signvec.hpp"

namespace gmak {

// Ambient-dimension cap for full sign-vector enumeration (the output can have
// up to 3^n members). Default 14; overridable via GMAK_ENUM_LIMIT.
int enumeration_limit();

// All sign vectors realized by the subspace im(B): the covectors of the
// oriented matroid of the rows of B. Computed exactly as the composition
// closure of the cocircuits; closed under negation and contains 0.
SignVectorSet enumerate_sign_vectors(const SubspaceBasis& b);

// Reference enumeration: walks all 3^n candidates, prunes by zero-set rank,
// and decides each survivor by exact LP feasibility. Exponentially slower than
// enumerate_sign_vectors; kept as an independent route for cross-checks.
SignVectorSet enumerate_sign_vectors_candidates(const SubspaceBasis& b);

// A rational vector x in im(B) with sign(x) = tau, if one exists. Strict
// inequalities are homogenized to >= 1 / <= -1.
std::optional<std::vector<Rational>> realization_in_subspace(const SubspaceBasis& b, const SignVector& tau);

// sign(det) for each d-tuple of rows of the basis matrix, in lexicographic
// tuple order; alternating extension to arbitrary index tuples.
class Chirotope {
public:
    Chirotope(int n, int d, std::vector<int8_t> signs);

    int n() const { return n_; }
    int d() const { return d_; }
    int8_t sign_of_sorted(const std::vector<int>& tuple) const;  // strictly increasing indices
    int8_t sign_of(std::vector<int> tuple) const;                // any order; repeats give 0
    const std::vector<int8_t>& raw() const { return signs_; }

private:
    int n_ = 0, d_ = 0;
    std::vector<int8_t> signs_;
    std::vector<std::vector<long long>> binom_;
};

Chirotope chirotope_of(const SubspaceBasis& b);

// True iff sigma(im B1) = sigma(im B2). Decided by chirotope comparison (equal
// ranks, equal up to one global sign flip); cross-checked against enumeration
// while n is within the enumeration limit.
bool sign_sets_equal(const SubspaceBasis& b1, const SubspaceBasis& b2);

struct DualityResult {
    bool ok = false;
    std::optional<SignVector> counterexample;  // set when the two routes disagree
};

// Verifies sigma(B-perp) = sigma(B)-perp by brute-force orthogonality over all
// of {-,0,+}^n. A failure indicates an implementation bug.
DualityResult duality_check(const SubspaceBasis& b);

// Nonnegative sign vectors of im(B) under componentwise 0 < + dominance: the
// face lattice of the cone generated by the rows of B.
struct FaceLattice {
    int ambient_dim = 0;
    std::vector<SignVector> elements;  // sorted; contains the zero vector
    std::vector<int> height;           // longest chain from the zero vector

    int size() const { return static_cast<int>(elements.size()); }
    bool leq(int i, int j) const { return elements[i].below(elements[j]); }
    int index_of(const SignVector& v) const;
};

FaceLattice face_lattice(const SubspaceBasis& b);

// Order isomorphism phi : Ft -> F with tau >= phi(tau) componentwise, as an
// index map into F.elements; nullopt when none exists. Exhaustive search with
// grade and dominance pruning.
std::optional<std::vector<int>> find_dominant_lattice_iso(const FaceLattice& ft, const FaceLattice& f);

struct ConservativityResult {
    bool conservative = false;
    std::vector<Rational> witness;  // strictly positive vector in im(B) when conservative
};

// Exact test for a strictly positive vector in im(B_Sperp). The witness is the
// min-coordinate-sum vertex, scaled to a primitive integer vector.
ConservativityResult is_conservative(const SubspaceBasis& b_sperp);

}  // namespace gmak

#endif
