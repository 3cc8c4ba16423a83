#include "gmak/signvec.hpp"

#include <stdexcept>

namespace gmak {

SignVector SignVector::of(const std::vector<Rational>& x) {
    std::vector<int8_t> s(x.size());
    for (size_t i = 0; i < x.size(); ++i) s[i] = static_cast<int8_t>(sgn(x[i]));
    return SignVector(std::move(s));
}

SignVector SignVector::of(const std::vector<double>& x) {
    std::vector<int8_t> s(x.size());
    for (size_t i = 0; i < x.size(); ++i) s[i] = x[i] > 0 ? 1 : (x[i] < 0 ? -1 : 0);
    return SignVector(std::move(s));
}

SignVector SignVector::parse(const std::string& text) {
    std::vector<int8_t> s;
    s.reserve(text.size());
    for (char c : text) {
        if (c == '-')
            s.push_back(-1);
        else if (c == '0')
            s.push_back(0);
        else if (c == '+')
            s.push_back(1);
        else
            throw std::invalid_argument("sign vector characters are '-', '0', '+'");
    }
    return SignVector(std::move(s));
}

bool SignVector::is_zero() const {
    for (int8_t v : s_)
        if (v != 0) return false;
    return true;
}

bool SignVector::is_nonnegative() const {
    for (int8_t v : s_)
        if (v < 0) return false;
    return true;
}

int SignVector::support_size() const {
    int n = 0;
    for (int8_t v : s_)
        if (v != 0) ++n;
    return n;
}

SignVector SignVector::negated() const {
    std::vector<int8_t> s(s_.size());
    for (size_t i = 0; i < s_.size(); ++i) s[i] = static_cast<int8_t>(-s_[i]);
    return SignVector(std::move(s));
}

SignVector SignVector::composed(const SignVector& other) const {
    if (s_.size() != other.s_.size()) throw std::invalid_argument("sign vector length mismatch");
    std::vector<int8_t> s(s_.size());
    for (size_t i = 0; i < s_.size(); ++i) s[i] = s_[i] != 0 ? s_[i] : other.s_[i];
    return SignVector(std::move(s));
}

bool SignVector::below(const SignVector& other) const {
    if (s_.size() != other.s_.size()) throw std::invalid_argument("sign vector length mismatch");
    for (size_t i = 0; i < s_.size(); ++i)
        if (s_[i] != 0 && s_[i] != other.s_[i]) return false;
    return true;
}

std::string SignVector::str() const {
    std::string out;
    out.reserve(s_.size());
    for (int8_t v : s_) out += v < 0 ? '-' : (v > 0 ? '+' : '0');
    return out;
}

bool orthogonal_pair(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sign vector length mismatch");
    bool has_neg = false, has_pos = false;
    for (int i = 0; i < a.size(); ++i) {
        int p = a[i] * b[i];
        if (p < 0) has_neg = true;
        if (p > 0) has_pos = true;
    }
    return (!has_neg && !has_pos) || (has_neg && has_pos);
}

}  // namespace gmak
