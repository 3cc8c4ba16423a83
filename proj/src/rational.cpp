#include "gmak/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gmak {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

static bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw std::invalid_argument("not a rational: '" + text + "'");
        return Rational(mpz_class(text, 10));  // base fixed: no octal surprises
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw std::invalid_argument("not a rational: '" + text + "'");
    Rational q{mpz_class(num, 10), mpz_class(den, 10)};
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

Rational parse_rational_flexible(const std::string& text) {
    if (text.find('/') != std::string::npos || is_integer_token(text))
        return parse_rational(text);

    // decimal with optional exponent: [-]ddd[.ddd][e[-]dd]
    std::string mantissa = text;
    long exp10 = 0;
    auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = text.substr(0, epos);
        std::string e = text.substr(epos + 1);
        if (!is_integer_token(e))
            throw std::invalid_argument("not a number: '" + text + "'");
        exp10 = std::stol(e);
    }
    auto dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exp10 -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+" || !is_integer_token(digits))
        throw std::invalid_argument("not a number: '" + text + "'");
    Rational q{mpz_class(digits, 10)};
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0)
        q /= Rational(pow10);
    else
        q *= Rational(pow10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

double to_double(const Rational& q) {
    return q.get_d();
}

std::vector<double> to_double_vec(const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(q.get_d());
    return out;
}

std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v) {
    mpz_class den_lcm = 1;
    for (const auto& q : v) {
        mpz_class d = q.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Rational> scaled;
    scaled.reserve(v.size());
    mpz_class g = 0;
    for (const auto& q : v) {
        Rational s = q * Rational(den_lcm);
        s.canonicalize();
        scaled.push_back(s);
        mpz_class n = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return scaled;  // all zero
    for (auto& s : scaled) {
        s /= Rational(g);
        s.canonicalize();
    }
    return scaled;
}

}  // namespace gmak
