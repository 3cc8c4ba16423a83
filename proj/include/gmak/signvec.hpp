#ifndef GMAK_SIGNVEC_HPP
#define GMAK_SIGNVEC_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gmak/rational.hpp"

namespace gmak {

// Vector over {-,0,+}, stored as int8 in {-1,0,+1}. Renders as e.g. "--+".
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<int8_t> entries) : s_(std::move(entries)) {}

    static SignVector zero(int n) { return SignVector(std::vector<int8_t>(n, 0)); }
    static SignVector of(const std::vector<Rational>& x);
    static SignVector of(const std::vector<double>& x);
    static SignVector parse(const std::string& text);  // characters '-', '0', '+'

    int size() const { return static_cast<int>(s_.size()); }
    int8_t operator[](int i) const { return s_[i]; }
    const std::vector<int8_t>& entries() const { return s_; }

    bool is_zero() const;
    bool is_nonnegative() const;  // lies in {0,+}^n
    int support_size() const;

    SignVector negated() const;
    // composition: keep own sign where nonzero, fill from other
    SignVector composed(const SignVector& other) const;
    // conformal order: this <= other iff every nonzero entry agrees with other
    bool below(const SignVector& other) const;

    std::string str() const;

    auto operator<=>(const SignVector&) const = default;

private:
    std::vector<int8_t> s_;
};

// Orthogonality of sign vectors: all products zero, or both a negative and a
// positive product occur. Throws std::invalid_argument on length mismatch.
bool orthogonal_pair(const SignVector& a, const SignVector& b);

using SignVectorSet = std::set<SignVector>;

}  // namespace gmak

#endif
