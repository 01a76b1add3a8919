#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>

#include "holosg/errors.hpp"
#include "holosg/expr.hpp"

namespace holosg {

namespace {

bool contains_var(const HoloExpr& e)
{
    switch (e.kind()) {
    case ExprKind::Const:
        return false;
    case ExprKind::Var:
    case ExprKind::Poly:
    case ExprKind::Mobius:
    case ExprKind::Exp:
        return true;
    default:
        break;
    }
    for (const auto& child : e.children()) {
        if (contains_var(child)) {
            return true;
        }
    }
    return false;
}

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/')? unary)*      juxtaposition multiplies
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' integer)?
//   primary := number | number 'i' | 'i' | 'z' | '(' expr ')'
//            | 'exp' '(' expr ')' | 'mobius' '(' c ',' c ',' c ',' c ')'
//            | 'compose' '(' expr ',' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    HoloExpr parse()
    {
        HoloExpr e = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    bool starts_primary()
    {
        const char c = peek();
        return c == '(' || c == '.' || std::isdigit(static_cast<unsigned char>(c))
            || std::isalpha(static_cast<unsigned char>(c));
    }

    HoloExpr expr()
    {
        HoloExpr acc = term();
        while (true) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    HoloExpr term()
    {
        HoloExpr acc = unary();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                const std::size_t at = pos_;
                HoloExpr den = unary();
                try {
                    acc = HoloExpr::ratio(acc, den);
                } catch (const BadParameter& e) {
                    throw ParseError(e.what(), at);
                }
            } else if (starts_primary()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    HoloExpr unary()
    {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            HoloExpr operand = unary();
            if (operand.kind() == ExprKind::Const) {
                return HoloExpr::constant(-operand.constant_value());
            }
            return -operand;
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    HoloExpr power()
    {
        HoloExpr base = primary();
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a nonnegative integer exponent");
        }
        const unsigned long n = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (n > 4096) {
            throw ParseError("exponent too large", start);
        }
        if (base.kind() == ExprKind::Var) {
            std::vector<cplx> c(n + 1, 0.0);
            c[n] = 1.0;
            return HoloExpr::poly(std::move(c));
        }
        if (base.kind() == ExprKind::Const) {
            return HoloExpr::constant(std::pow(base.constant_value(), static_cast<double>(n)));
        }
        if (n == 0) {
            return HoloExpr::constant(1.0);
        }
        HoloExpr acc = base;
        for (unsigned long k = 1; k < n; ++k) {
            acc = acc * base;
        }
        return acc;
    }

    HoloExpr number()
    {
        const std::size_t start = pos_;
        const std::string rest(text_.substr(pos_));
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str() || errno == ERANGE) {
            fail("malformed number");
        }
        pos_ = start + static_cast<std::size_t>(end - rest.c_str());
        // "2i" is an imaginary literal; "2 i" multiplies by juxtaposition, same value
        if (pos_ < text_.size() && text_[pos_] == 'i'
            && (pos_ + 1 >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            return HoloExpr::constant({0.0, v});
        }
        return HoloExpr::constant(v);
    }

    cplx constant_argument()
    {
        const std::size_t at = pos_;
        const HoloExpr e = expr();
        if (contains_var(e)) {
            throw ParseError("mobius coefficients must be constants", at);
        }
        try {
            return eval(e, 0.0);
        } catch (const PoleError& err) {
            throw ParseError(err.what(), at);
        }
    }

    HoloExpr primary()
    {
        const char c = peek();
        if (c == '\0') {
            fail("unexpected end of input");
        }
        if (c == '(') {
            ++pos_;
            HoloExpr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "z") {
            return HoloExpr::var();
        }
        if (name == "i") {
            return HoloExpr::constant({0.0, 1.0});
        }
        if (name == "exp") {
            expect('(');
            HoloExpr arg = expr();
            expect(')');
            if (arg.kind() == ExprKind::Var) {
                return HoloExpr::exp();
            }
            if (arg.kind() == ExprKind::Const) {
                return HoloExpr::constant(std::exp(arg.constant_value()));
            }
            return HoloExpr::compose(HoloExpr::exp(), arg);
        }
        if (name == "mobius") {
            expect('(');
            const cplx a = constant_argument();
            expect(',');
            const cplx b = constant_argument();
            expect(',');
            const cplx cc = constant_argument();
            expect(',');
            const cplx d = constant_argument();
            expect(')');
            try {
                return HoloExpr::mobius(a, b, cc, d);
            } catch (const BadParameter& e) {
                throw ParseError(e.what(), start);
            }
        }
        if (name == "compose") {
            expect('(');
            HoloExpr outer = expr();
            expect(',');
            HoloExpr inner = expr();
            expect(')');
            return HoloExpr::compose(outer, inner);
        }
        if (name.find_first_not_of("iz") == std::string::npos) {
            // "iz", "zz", ... : juxtaposed single-letter factors
            HoloExpr acc = name[0] == 'z' ? HoloExpr::var() : HoloExpr::constant({0.0, 1.0});
            for (std::size_t k = 1; k < name.size(); ++k) {
                acc = acc * (name[k] == 'z' ? HoloExpr::var() : HoloExpr::constant({0.0, 1.0}));
            }
            return acc;
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

HoloExpr parse_expr(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace holosg
