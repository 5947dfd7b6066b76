#include "quasitoric/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace quasitoric {

namespace {

// Recursive-descent grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | primary
//   primary:= number | name | name '(' expr ')' | '(' expr ')'
struct ExprParser {
    const std::string& text;
    size_t pos = 0;
    const std::map<std::string, double>& vars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("expression error at position " + std::to_string(pos) + " in \"" + text +
                         "\": " + what);
    }

    double parse_expr() {
        double v = parse_term();
        for (;;) {
            if (eat('+'))
                v += parse_term();
            else if (eat('-'))
                v -= parse_term();
            else
                return v;
        }
    }

    double parse_term() {
        double v = parse_factor();
        for (;;) {
            if (eat('*'))
                v *= parse_factor();
            else if (eat('/'))
                v /= parse_factor();
            else
                return v;
        }
    }

    double parse_factor() {
        if (eat('-')) return -parse_factor();
        return parse_primary();
    }

    double parse_primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            char* end = nullptr;
            double v = std::strtod(text.c_str() + pos, &end);
            if (end == text.c_str() + pos) fail("bad number");
            pos = static_cast<size_t>(end - text.c_str());
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (eat('(')) {
                double arg = parse_expr();
                if (!eat(')')) fail("missing ')' after " + name);
                if (name == "sqrt") return std::sqrt(arg);
                if (name == "sin") return std::sin(arg);
                if (name == "cos") return std::cos(arg);
                fail("unknown function \"" + name + "\"");
            }
            if (name == "pi") return 3.14159265358979323846264338327950288;
            auto it = vars.find(name);
            if (it == vars.end()) fail("unknown name \"" + name + "\"");
            return it->second;
        }
        if (eat('(')) {
            double v = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

double eval_expression(const std::string& text, const std::map<std::string, double>& vars) {
    ExprParser p{text, 0, vars};
    double v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace quasitoric
