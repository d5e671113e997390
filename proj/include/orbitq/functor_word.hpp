#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "orbitq/automorphism.hpp"

namespace orbitq {

struct Token {
    enum Type { Tau, Shift, Phi, Rho } type = Tau;
    long long k = 0;
    friend bool operator==(const Token&, const Token&) = default;
};

struct FunctorWord {
    DynkinDiagram diagram;
    std::vector<Token> tokens;
};

inline std::string to_string(const Token& t) {
    switch (t.type) {
    case Token::Tau: return "t^" + std::to_string(t.k);
    case Token::Shift: return "[" + std::to_string(t.k) + "]";
    case Token::Phi: return "phi";
    case Token::Rho: return "rho";
    }
    return "?";
}

inline std::string to_string(const std::vector<Token>& tokens) {
    std::string out;
    for (const auto& t : tokens) out += (out.empty() ? "" : "*") + to_string(t);
    return out.empty() ? "t^0" : out;
}

inline long long parse_integer(const std::string& s, const std::string& context) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size() || s.size() - i > 9)
        throw Error(ErrorCode::ParseError, "bad integer '" + s + "' in '" + context + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw Error(ErrorCode::ParseError, "bad integer '" + s + "' in '" + context + "'");
    return std::stoll(s);
}

// Grammar: term ('*' term)*, term := t | t^k | tau^k | [k] | phi | rho.
inline std::vector<Token> parse_tokens(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty functor word");
    std::vector<Token> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t star = s.find('*', start);
        const std::string term = s.substr(start, star == std::string::npos ? std::string::npos : star - start);
        if (term == "phi") {
            out.push_back({Token::Phi, 0});
        } else if (term == "rho") {
            out.push_back({Token::Rho, 0});
        } else if (term == "t" || term == "tau") {
            out.push_back({Token::Tau, 1});
        } else if (term.rfind("t^", 0) == 0) {
            out.push_back({Token::Tau, parse_integer(term.substr(2), text)});
        } else if (term.rfind("tau^", 0) == 0) {
            out.push_back({Token::Tau, parse_integer(term.substr(4), text)});
        } else if (term.size() >= 2 && term.front() == '[' && term.back() == ']') {
            out.push_back({Token::Shift, parse_integer(term.substr(1, term.size() - 2), text)});
        } else {
            throw Error(ErrorCode::ParseError, "unrecognised term '" + term + "' in '" + text + "'");
        }
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return out;
}

inline void check_legal(const DynkinDiagram& d, const Token& t) {
    if (t.type == Token::Phi) {
        const bool ok = (d.kind() == Kind::A && d.rank() % 2 == 1) || d.kind() == Kind::D ||
                        (d.kind() == Kind::E && d.rank() == 6);
        if (!ok) throw Error(ErrorCode::IllegalToken, "phi is not available on " + d.name());
    }
    if (t.type == Token::Rho && !(d.kind() == Kind::D && d.rank() == 4))
        throw Error(ErrorCode::IllegalToken, "rho is available on D4 only, not " + d.name());
}

inline FunctorWord parse_word(const DynkinDiagram& d, const std::string& text) {
    FunctorWord w{d, parse_tokens(text)};
    for (const auto& t : w.tokens) check_legal(d, t);
    return w;
}

// Tokens compose as written: "t^5*rho" is theta^5 after chi.
inline Automorphism compile(const FunctorWord& word) {
    const DynkinDiagram& d = word.diagram;
    Automorphism g = Automorphism::identity(d);
    for (const auto& t : word.tokens) {
        check_legal(d, t);
        switch (t.type) {
        case Token::Tau: g = compose(g, theta(d, static_cast<int>(t.k))); break;
        case Token::Shift: g = compose(g, power(suspension(d), t.k)); break;
        case Token::Phi: g = compose(g, phi(d)); break;
        case Token::Rho: g = compose(g, rho(d)); break;
        }
    }
    return g;
}

inline Automorphism compile(const DynkinDiagram& d, const std::string& text) { return compile(parse_word(d, text)); }

} // namespace orbitq
