#include "weylkit/parse.hpp"

#include <cctype>
#include <vector>

namespace weylkit {

namespace {

enum class Tok { plus, minus, star, caret, slash, lparen, rparen, integer, sqrt2, var, end };

struct Token {
    Tok type;
    std::size_t pos = 0;
    std::string text; // digits for integer, name for var
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i;
        switch (c) {
        case '+': out.push_back({Tok::plus, pos, "+"}); ++i; continue;
        case '-': out.push_back({Tok::minus, pos, "-"}); ++i; continue;
        case '*': out.push_back({Tok::star, pos, "*"}); ++i; continue;
        case '^': out.push_back({Tok::caret, pos, "^"}); ++i; continue;
        case '/': out.push_back({Tok::slash, pos, "/"}); ++i; continue;
        case '(': out.push_back({Tok::lparen, pos, "("}); ++i; continue;
        case ')': out.push_back({Tok::rparen, pos, ")"}); ++i; continue;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Tok::integer, pos, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j]))))
                ++j;
            std::string name = s.substr(i, j - i);
            if (name == "sqrt2")
                out.push_back({Tok::sqrt2, pos, name});
            else if (name.size() == 1 && (name == "X" || name == "Y" || name == "x" || name == "y"))
                out.push_back({Tok::var, pos, name});
            else
                throw ParseError(pos, {"X", "Y", "x", "y", "sqrt2"},
                                 "unknown name '" + name + "' at position " + std::to_string(pos));
            i = j;
            continue;
        }
        throw ParseError(pos, {}, std::string("unexpected character '") + c + "' at position " +
                                      std::to_string(pos));
    }
    out.push_back({Tok::end, s.size(), ""});
    return out;
}

template <class Ring>
class Parser {
public:
    Parser(std::vector<Token> tokens, bool weyl_mode)
        : toks_(std::move(tokens)), weyl_(weyl_mode) {}

    Ring run() {
        Ring v = expr();
        if (peek().type != Tok::end)
            fail(peek(), {"+", "-", "*", "end of input"});
        return v;
    }

private:
    const Token& peek() const { return toks_[k_]; }
    const Token& advance() { return toks_[k_++]; }
    bool accept(Tok t) {
        if (peek().type == t) {
            ++k_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const Token& at, std::vector<std::string> expected) {
        std::string got = at.type == Tok::end ? "end of input" : "'" + at.text + "'";
        throw ParseError(at.pos, std::move(expected),
                         "unexpected " + got + " at position " + std::to_string(at.pos));
    }

    Ring expr() {
        Ring v = term();
        while (true) {
            if (accept(Tok::plus))
                v = v + term();
            else if (accept(Tok::minus))
                v = v - term();
            else
                return v;
        }
    }

    Ring term() {
        Ring v = factor();
        while (accept(Tok::star))
            v = v * factor();
        return v;
    }

    Ring factor() {
        Ring v = atom();
        if (accept(Tok::caret)) {
            if (peek().type != Tok::integer)
                fail(peek(), {"nonnegative integer"});
            v = v.pow(parse_exponent(advance()));
        }
        return v;
    }

    unsigned parse_exponent(const Token& t) {
        if (t.text.size() > 4)
            throw ParseError(t.pos, {"nonnegative integer"},
                             "exponent too large at position " + std::to_string(t.pos));
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Ring atom() {
        const Token& t = peek();
        switch (t.type) {
        case Tok::minus:
            advance();
            return Ring::zero() - factor();
        case Tok::lparen: {
            advance();
            Ring v = expr();
            if (!accept(Tok::rparen))
                fail(peek(), {")"});
            return v;
        }
        case Tok::integer:
            return Ring::constant(rational_atom());
        case Tok::sqrt2:
            advance();
            return Ring::constant(Scalar::sqrt2());
        case Tok::var:
            return variable(advance());
        default:
            fail(t, expected_atoms());
        }
    }

    Scalar rational_atom() {
        const Token& num = advance();
        mpq_class value(num.text);
        if (accept(Tok::slash)) {
            if (peek().type != Tok::integer)
                fail(peek(), {"integer denominator"});
            const Token& den = advance();
            mpq_class d(den.text);
            if (d == 0)
                throw ParseError(den.pos, {"nonzero integer"},
                                 "zero denominator at position " + std::to_string(den.pos));
            value /= d;
        }
        value.canonicalize();
        return Scalar(value);
    }

    Ring variable(const Token& t) {
        bool upper = t.text == "X" || t.text == "Y";
        if (weyl_ != upper)
            fail(t, expected_atoms());
        return (t.text == "X" || t.text == "x") ? Ring::gen_x() : Ring::gen_y();
    }

    std::vector<std::string> expected_atoms() const {
        if (weyl_)
            return {"X", "Y", "sqrt2", "rational", "(", "-"};
        return {"x", "y", "sqrt2", "rational", "(", "-"};
    }

    std::vector<Token> toks_;
    bool weyl_;
    std::size_t k_ = 0;
};

} // namespace

WeylPoly parse_weyl(const std::string& text) {
    return Parser<WeylPoly>(lex(text), true).run();
}

CommPoly parse_comm(const std::string& text) {
    return Parser<CommPoly>(lex(text), false).run();
}

Scalar parse_scalar(const std::string& text) {
    WeylPoly p = parse_weyl(text);
    if (!p.is_constant())
        throw ParseError(0, {"constant expression"}, "expected a constant scalar expression");
    return p.constant_term();
}

} // namespace weylkit
