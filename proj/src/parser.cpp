#include "qx/parser.hpp"

#include <cctype>

namespace qx {

namespace {

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            advance();
    }
    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    char peek_raw(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_end() { return peek() == '\0'; }

    long long nat() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        long long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            advance();
        }
        return v;
    }
    long long integer() {
        bool neg = accept('-');
        long long v = nat();
        return neg ? -v : v;
    }
    std::string name() {
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a name");
        std::string s;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])))) {
            s += src[pos];
            advance();
        }
        return s;
    }
};

struct ScalarParser {
    Lexer& lx;
    VarSetPtr vars;

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (lx.accept('+'))
                v = v + term();
            else if (lx.accept('-'))
                v = v - term();
            else
                return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (lx.accept('*'))
                v = v * unary();
            else if (lx.accept('/')) {
                Scalar d = unary();
                if (d.is_zero()) lx.fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }
    Scalar unary() {
        if (lx.accept('-')) return -unary();
        return power();
    }
    Scalar power() {
        Scalar v = atom();
        if (lx.accept('^')) {
            long long e = lx.integer();
            if (e < 0) {
                if (v.is_zero()) lx.fail("zero to a negative power");
                Scalar r = Scalar::one(vars);
                for (long long k = 0; k < -e; ++k) r = r / v;
                return r;
            }
            Scalar r = Scalar::one(vars);
            for (long long k = 0; k < e; ++k) r = r * v;
            return r;
        }
        return v;
    }
    Scalar atom() {
        char c = lx.peek();
        if (c == '(') {
            lx.advance();
            Scalar v = expr();
            lx.expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long n = lx.nat();
            return Scalar(vars, static_cast<int>(n));
        }
        std::string n = lx.name();
        int idx = vars->index_of(n);
        if (idx < 0) lx.fail("unknown variable '" + n + "'");
        return Scalar::variable(vars, idx);
    }
};

struct ElementParser {
    Lexer& lx;
    const Presentation* p;

    bool gen_ahead() {
        char c = lx.peek();
        if (c != 'x' && c != 't' && c != 'y' && c != 'u' && c != 'v') return false;
        // a generator only if immediately followed by '['
        return lx.peek_raw(1) == '[';
    }

    Element gen() {
        char fam = lx.peek();
        lx.advance();
        lx.expect('[');
        int i = static_cast<int>(lx.nat());
        int j = -1;
        if (lx.accept(',')) j = static_cast<int>(lx.nat());
        lx.expect(']');
        const int N = p->n();
        auto range = [&](int k) {
            if (k < 1 || k > N) lx.fail("index out of range");
        };
        try {
            switch (fam) {
                case 'x':
                    if (j < 0) lx.fail("x takes two indices");
                    range(i);
                    range(j);
                    return p->x_entry(i, j);
                case 't':
                    if (j < 0) lx.fail("t takes two indices");
                    range(i);
                    range(j);
                    return p->t_entry(i, j);
                case 'u':
                case 'v':
                    if (j < 0) lx.fail("u/v take two indices");
                    range(i);
                    range(j);
                    return p->tensor_entry(fam == 'u' ? Family::U : Family::V, i, j);
                default:
                    if (j >= 0) lx.fail("y takes one index");
                    range(i);
                    return p->y_entry(i);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const NcError& e) {
            lx.fail(e.what());
        }
    }

    Element term() {
        Element prod = p->one();
        Scalar coeff = Scalar::one(p->vars());
        bool first = true;
        ScalarParser sp{lx, p->vars()};
        for (;;) {
            if (gen_ahead()) {
                Element g = gen();
                long long e = 1;
                if (lx.accept('^')) e = lx.nat();
                for (long long k = 0; k < e; ++k) prod = prod * g;
            } else {
                // a scalar factor (literal, variable, or parenthesized
                // expression), with optional integer exponent and divisions
                coeff = coeff * sp.power();
                while (lx.peek() == '/') {
                    lx.advance();
                    Scalar d = sp.power();
                    if (d.is_zero()) lx.fail("division by zero");
                    coeff = coeff / d;
                }
            }
            first = false;
            if (!lx.accept('*')) break;
        }
        (void)first;
        return prod * coeff;
    }

    Element element() {
        Element sum = p->zero();
        bool neg = lx.accept('-');
        for (;;) {
            Element t = term();
            sum += neg ? -t : t;
            if (lx.accept('-'))
                neg = true;
            else if (lx.accept('+'))
                neg = false;
            else
                break;
        }
        if (!lx.at_end()) lx.fail("unexpected trailing input");
        return sum;
    }
};

}  // namespace

Scalar parse_scalar(const std::string& src, VarSetPtr vars) {
    Lexer lx(src);
    ScalarParser sp{lx, std::move(vars)};
    Scalar v = sp.expr();
    if (!lx.at_end()) lx.fail("unexpected trailing input");
    return v;
}

Element parse_element(const std::string& src, const Presentation* p) {
    Lexer lx(src);
    ElementParser ep{lx, p};
    return ep.element();
}

}  // namespace qx
