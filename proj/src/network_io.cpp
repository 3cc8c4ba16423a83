#include "gmak/network_io.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "gmak/errors.hpp"

namespace gmak {

namespace {

enum class Tok { number, ident, plus, arrow, revarrow, tilde, equals, end };

struct Token {
    Tok kind;
    std::string text;
    int col;
};

std::vector<Token> tokenize_line(const std::string& line, int lineno) {
    std::vector<Token> out;
    size_t i = 0;
    auto err = [&](const std::string& msg) { throw ParseError(msg, lineno, static_cast<int>(i) + 1); };
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            std::string num = line.substr(i, j - i);
            if (j < line.size() && line[j] == '/') {
                size_t k = j + 1;
                size_t d = k;
                while (d < line.size() && std::isdigit(static_cast<unsigned char>(line[d]))) ++d;
                if (d == k) err("expected denominator after '/'");
                num += line.substr(j, d - j);
                j = d;
            }
            out.push_back({Tok::number, num, col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '\''))
                ++j;
            out.push_back({Tok::ident, line.substr(i, j - i), col});
            i = j;
        } else if (c == '+') {
            out.push_back({Tok::plus, "+", col});
            ++i;
        } else if (c == '-') {
            if (i + 1 < line.size() && line[i + 1] == '>') {
                out.push_back({Tok::arrow, "->", col});
                i += 2;
            } else {
                err("unexpected '-' (reactions use '->')");
            }
        } else if (c == '<') {
            if (i + 2 < line.size() && line[i + 1] == '=' && line[i + 2] == '>') {
                out.push_back({Tok::revarrow, "<=>", col});
                i += 3;
            } else {
                err("unexpected '<' (reversible reactions use '<=>')");
            }
        } else if (c == '~') {
            out.push_back({Tok::tilde, "~", col});
            ++i;
        } else if (c == '=') {
            out.push_back({Tok::equals, "=", col});
            ++i;
        } else {
            err(std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::end, "", static_cast<int>(line.size()) + 1});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    GeneralizedNetwork run() {
        std::istringstream in(text_);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            toks_ = tokenize_line(line, lineno);
            pos_ = 0;
            lineno_ = lineno;
            if (peek().kind == Tok::end) continue;
            if (peek().kind == Tok::ident && peek().text == "rate")
                parse_rate_line();
            else
                parse_reaction_or_kinetic_line();
        }
        finish();
        net_.validate();
        return net_;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lineno_, peek().col); }

    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail("expected " + what);
        take();
    }

    int species_id(const std::string& name) {
        if (name == "rate") fail("'rate' is a reserved word");
        auto it = species_index_.find(name);
        if (it != species_index_.end()) return it->second;
        int id = static_cast<int>(net_.species.size());
        net_.species.push_back({name, id});
        species_index_.emplace(name, id);
        return id;
    }

    Complex parse_complex() {
        Complex c;
        // lone `0` is the empty complex
        if (peek().kind == Tok::number && peek().text == "0") {
            size_t save = pos_;
            take();
            if (peek().kind != Tok::ident) return c;
            pos_ = save;
        }
        while (true) {
            Rational coeff = 1;
            if (peek().kind == Tok::number) {
                coeff = parse_rational(take().text);
                if (coeff == 0) fail("zero coefficient (omit the species instead)");
            }
            if (peek().kind != Tok::ident) fail("expected species name");
            int s = species_id(take().text);
            Rational total = c.coeff(s) + coeff;
            c.set(s, total);
            if (peek().kind != Tok::plus) break;
            take();
        }
        return c;
    }

    int complex_id(const Complex& c) {
        auto it = complex_index_.find(c);
        if (it != complex_index_.end()) return it->second;
        int id = static_cast<int>(net_.complexes.size());
        net_.complexes.push_back(c);
        complex_index_.emplace(c, id);
        return id;
    }

    void add_reaction(int src, int tgt) {
        if (src == tgt) fail("self-loop reaction y -> y is not allowed");
        if (!edge_set_.insert({src, tgt}).second) fail("duplicate reaction");
        net_.reactions.push_back({src, tgt, std::nullopt});
    }

    void parse_reaction_or_kinetic_line() {
        Complex lhs = parse_complex();
        if (peek().kind == Tok::arrow) {
            take();
            Complex rhs = parse_complex();
            expect(Tok::end, "end of line");
            int src = complex_id(lhs);  // left side registers first
            int tgt = complex_id(rhs);
            add_reaction(src, tgt);
        } else if (peek().kind == Tok::revarrow) {
            take();
            Complex rhs = parse_complex();
            expect(Tok::end, "end of line");
            int a = complex_id(lhs), b = complex_id(rhs);
            add_reaction(a, b);
            add_reaction(b, a);
        } else if (peek().kind == Tok::tilde) {
            take();
            Complex kin = parse_complex();
            expect(Tok::end, "end of line");
            auto it = complex_index_.find(lhs);
            if (it == complex_index_.end())
                fail("kinetic association for a complex that appears in no reaction");
            if (!kinetic_.emplace(it->second, kin).second)
                fail("duplicate kinetic association for this complex");
        } else {
            fail("expected '->', '<=>' or '~'");
        }
    }

    void parse_rate_line() {
        take();  // 'rate'
        Complex lhs = parse_complex();
        expect(Tok::arrow, "'->'");
        Complex rhs = parse_complex();
        expect(Tok::equals, "'='");
        if (peek().kind != Tok::number) fail("expected positive rational rate");
        Rational k = parse_rational(take().text);
        expect(Tok::end, "end of line");
        if (k <= 0) fail("rate must be positive");
        auto si = complex_index_.find(lhs);
        auto ti = complex_index_.find(rhs);
        if (si == complex_index_.end() || ti == complex_index_.end())
            fail("rate line for an unknown reaction");
        for (auto& r : net_.reactions) {
            if (r.source == si->second && r.target == ti->second) {
                if (r.rate) fail("duplicate rate line for this reaction");
                r.rate = k;
                return;
            }
        }
        fail("rate line for an unknown reaction");
    }

    void finish() {
        net_.kinetic_complexes = net_.complexes;  // classical default
        for (const auto& [id, kin] : kinetic_) net_.kinetic_complexes[id] = kin;
    }

    std::string text_;
    GeneralizedNetwork net_;
    std::map<std::string, int> species_index_;
    std::map<Complex, int> complex_index_;
    std::map<int, Complex> kinetic_;
    std::set<std::pair<int, int>> edge_set_;
    std::vector<Token> toks_;
    size_t pos_ = 0;
    int lineno_ = 0;
};

}  // namespace

GeneralizedNetwork parse_network(const std::string& text) {
    return Parser(text).run();
}

std::string complex_to_string(const GeneralizedNetwork& net, const Complex& c) {
    if (c.empty()) return "0";
    std::string out;
    for (const auto& [s, q] : c.coeffs()) {
        if (!out.empty()) out += " + ";
        if (q != 1) out += to_string(q) + " ";
        out += net.species[s].name;
    }
    return out;
}

std::string serialize(const GeneralizedNetwork& net) {
    std::string out;
    for (const auto& r : net.reactions)
        out += complex_to_string(net, net.complexes[r.source]) + " -> " +
               complex_to_string(net, net.complexes[r.target]) + "\n";
    for (int y = 0; y < net.complex_count(); ++y)
        if (net.kinetic_complexes[y] != net.complexes[y])
            out += complex_to_string(net, net.complexes[y]) + " ~ " +
                   complex_to_string(net, net.kinetic_complexes[y]) + "\n";
    for (const auto& r : net.reactions)
        if (r.rate)
            out += "rate " + complex_to_string(net, net.complexes[r.source]) + " -> " +
                   complex_to_string(net, net.complexes[r.target]) + " = " + to_string(*r.rate) + "\n";
    return out;
}

nlohmann::json network_to_json(const GeneralizedNetwork& net) {
    nlohmann::json j;
    j["species"] = nlohmann::json::array();
    for (const auto& s : net.species) j["species"].push_back(s.name);
    auto complexes_json = [&](const std::vector<Complex>& cs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : cs) {
            nlohmann::json obj = nlohmann::json::object();
            for (const auto& [s, q] : c.coeffs()) obj[net.species[s].name] = to_string(q);
            arr.push_back(obj);
        }
        return arr;
    };
    j["complexes"] = complexes_json(net.complexes);
    j["kinetic_complexes"] = complexes_json(net.kinetic_complexes);
    j["reactions"] = nlohmann::json::array();
    for (const auto& r : net.reactions) {
        nlohmann::json obj;
        obj["source"] = r.source;
        obj["target"] = r.target;
        obj["rate"] = r.rate ? nlohmann::json(to_string(*r.rate)) : nlohmann::json(nullptr);
        j["reactions"].push_back(obj);
    }
    return j;
}

}  // namespace gmak
