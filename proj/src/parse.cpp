#include "newtonsing/errors.hpp"
#include "newtonsing/poly.hpp"

#include <cctype>

namespace newtonsing {

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

    MultiPoly run()
    {
        skip();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        MultiPoly r = expr();
        skip();
        if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    int n() const { return static_cast<int>(vars_.size()); }
    bool at_end() const { return pos_ >= s_.size(); }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // '+' or '-' (ASCII or U+2212); returns 0 if none
    int sign_here()
    {
        if (at_end()) return 0;
        if (s_[pos_] == '+') return 1;
        if (s_[pos_] == '-') return -1;
        if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) return -2;
        return 0;
    }

    void eat_sign(int sg) { pos_ += (sg == -2) ? 3 : 1; }

    MultiPoly expr()
    {
        skip();
        int sg = sign_here();
        if (sg) {
            eat_sign(sg);
            skip();
        }
        MultiPoly r = term();
        if (sg < 0) r = -r;
        for (;;) {
            skip();
            sg = sign_here();
            if (!sg) break;
            eat_sign(sg);
            skip();
            if (at_end()) throw ParseError("missing term after sign", pos_);
            MultiPoly t = term();
            if (sg > 0)
                r += t;
            else
                r -= t;
        }
        return r;
    }

    bool starts_factor()
    {
        if (at_end()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '_' || c == '(';
    }

    MultiPoly term()
    {
        MultiPoly r = factor();
        for (;;) {
            skip();
            if (at_end()) break;
            char c = s_[pos_];
            if (c == '*') {
                ++pos_;
                skip();
                r = r * factor();
            } else if (c == '/') {
                std::size_t at = pos_;
                ++pos_;
                skip();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("division only by a number", at);
                Integer d = integer();
                if (d == 0) throw ParseError("division by zero", at);
                r *= Rational(1) / Rational(d);
            } else if (starts_factor()) {
                r = r * factor();
            } else {
                break;
            }
        }
        return r;
    }

    MultiPoly factor()
    {
        skip();
        int sg = sign_here();
        if (sg) {
            eat_sign(sg);
            MultiPoly f = factor();
            return sg < 0 ? -f : f;
        }
        MultiPoly base = primary();
        for (;;) {
            skip();
            if (at_end() || s_[pos_] != '^') break;
            std::size_t at = ++pos_;
            skip();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("exponent must be a non-negative integer", at);
            Integer e = integer();
            if (e > 100000) throw ParseError("exponent too large", at);
            base = pow(base, e.convert_to<unsigned>());
        }
        return base;
    }

    Integer integer()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Integer(s_.substr(start, pos_ - start));
    }

    MultiPoly primary()
    {
        skip();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly r = expr();
            skip();
            if (at_end() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q = Rational(integer());
            skip();
            if (!at_end() && s_[pos_] == '/') {
                std::size_t save = pos_;
                ++pos_;
                skip();
                if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    Integer d = integer();
                    if (d == 0) throw ParseError("zero denominator", save);
                    q /= Rational(d);
                } else {
                    pos_ = save;
                }
            }
            return MultiPoly::constant(n(), q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            for (int i = 0; i < n(); ++i)
                if (vars_[i] == name) return MultiPoly::variable(n(), i);
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars)
{
    if (vars.empty()) throw ParseError("no variables declared", 0);
    return Parser(text, vars).run();
}

}  // namespace newtonsing
