#include "hpd/expr.hpp"

#include <cctype>
#include <sstream>

namespace hpd {

int VarTable::coord_index(const std::string& name) const {
    for (int i = 0; i < ncoords; ++i)
        if (vars[i] == name) return i;
    return -1;
}

namespace {

struct Token {
    enum Kind { Num, Ident, Op, End } kind = End;
    std::string text;
    size_t pos = 0;
};

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& src) : s(src) {}

    Token next() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
        Token t;
        t.pos = i;
        if (i >= s.size()) return t;
        char c = s[i];
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            t.kind = Token::Num;
            t.text = s.substr(i, j - i);
            i = j;
            return t;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum((unsigned char)s[j]) || s[j] == '_'))
                ++j;
            t.kind = Token::Ident;
            t.text = s.substr(i, j - i);
            i = j;
            return t;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            t.kind = Token::Op;
            t.text = std::string(1, c);
            ++i;
            return t;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
    }
};

// A parsed value: scalar jet times an optional direction tuple.
struct Value {
    PJet scalar;
    std::optional<IdxTuple> dirs; // unsorted as written; sign tracked separately
    int sign = 1;
};

struct Parser {
    Lexer lex;
    Token tok;
    const VarTable& vt;
    int chart;

    Parser(const std::string& s, const VarTable& table, int chart_id)
        : lex(s), vt(table), chart(chart_id) {
        advance();
    }

    void advance() { tok = lex.next(); }

    bool at_op(const char* o) const { return tok.kind == Token::Op && tok.text == o; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok.pos);
    }

    PJet one() const { return PJet(RatFn(vt.nvars(), Rat(1)), vt.nparams(), vt.order); }

    long parse_int_exponent() {
        int sign = 1;
        if (at_op("-")) {
            sign = -1;
            advance();
        }
        if (tok.kind != Token::Num) fail("expected integer exponent");
        long v = std::stol(tok.text);
        advance();
        return sign * v;
    }

    Value parse_base() {
        Value v;
        v.scalar = one();
        if (at_op("(")) {
            advance();
            v = parse_expr();
            if (!at_op(")")) fail("expected ')'");
            advance();
            return v;
        }
        if (tok.kind == Token::Num) {
            v.scalar = PJet(RatFn(vt.nvars(), Rat(tok.text)), vt.nparams(), vt.order);
            advance();
            return v;
        }
        if (tok.kind == Token::Ident) {
            const std::string name = tok.text;
            // Direction symbol d<coord>.
            if (name.size() > 1 && name[0] == 'd') {
                int ci = vt.coord_index(name.substr(1));
                if (ci >= 0) {
                    advance();
                    v.dirs = IdxTuple{ci};
                    return v;
                }
            }
            for (size_t k = 0; k < vt.vars.size(); ++k)
                if (vt.vars[k] == name) {
                    advance();
                    v.scalar = PJet::variable(vt.nvars(), vt.nparams(), vt.order, (int)k);
                    return v;
                }
            for (size_t k = 0; k < vt.params.size(); ++k)
                if (vt.params[k] == name) {
                    advance();
                    v.scalar = PJet::param(vt.nvars(), vt.nparams(), vt.order, (int)k);
                    return v;
                }
            fail("unknown identifier '" + name + "'");
        }
        fail("expected a value");
    }

    Value parse_factor() {
        Value v = parse_base();
        while (at_op("^")) {
            advance();
            if (v.dirs) {
                // Wedge chain: d<a>^d<b>^...
                Value w = parse_base();
                if (!w.dirs) fail("'^' after a direction expects another direction");
                auto merged = merge_tuples(*v.dirs, *w.dirs);
                if (!merged) {
                    // Repeated direction: the whole term is zero.
                    v.scalar = PJet(vt.nvars(), vt.nparams(), vt.order);
                    v.dirs->insert(v.dirs->end(), w.dirs->begin(), w.dirs->end());
                    std::sort(v.dirs->begin(), v.dirs->end());
                    v.dirs->erase(std::unique(v.dirs->begin(), v.dirs->end()),
                                  v.dirs->end());
                    // Keep a tuple of the attempted size for degree checking.
                } else {
                    v.sign *= merged->second;
                    v.dirs = merged->first;
                }
                v.scalar = v.scalar * w.scalar;
            } else {
                v.scalar = v.scalar.pow(parse_int_exponent());
            }
        }
        return v;
    }

    Value parse_term() {
        Value v = parse_factor();
        while (at_op("*") || at_op("/")) {
            bool div = at_op("/");
            advance();
            Value w = parse_factor();
            if (div) {
                auto c0 = w.scalar.at_zero().as_lpoly();
                std::optional<Rat> c = c0 ? c0->as_constant() : std::nullopt;
                if (w.dirs || !c || w.scalar.terms().size() > 1)
                    fail("division only by rational constants");
                if (c->is_zero()) throw ZeroDenominator("division by zero constant");
                v.scalar = v.scalar * (Rat(1) / *c);
                continue;
            }
            v.scalar = v.scalar * w.scalar;
            v.sign *= w.sign;
            if (w.dirs) {
                if (!v.dirs) {
                    v.dirs = w.dirs;
                } else {
                    auto merged = merge_tuples(*v.dirs, *w.dirs);
                    if (!merged) {
                        v.scalar = PJet(vt.nvars(), vt.nparams(), vt.order);
                        v.dirs->insert(v.dirs->end(), w.dirs->begin(), w.dirs->end());
                    } else {
                        v.sign *= merged->second;
                        v.dirs = merged->first;
                    }
                }
            }
        }
        return v;
    }

    // Sum of terms; accumulates directly into a multivector-or-scalar pair.
    struct Sum {
        std::optional<Multivector<PJet>> mv;
        std::optional<PJet> scalar;
    };

    Value parse_signed_term(int outer_sign) {
        Value v = parse_term();
        v.sign *= outer_sign;
        return v;
    }

    Value parse_expr_single() { return parse_term(); }

    Value parse_expr() {
        // Used inside parentheses: restricted to scalar sums unless a single
        // direction term.
        int sign = 1;
        if (at_op("-")) {
            sign = -1;
            advance();
        } else if (at_op("+")) {
            advance();
        }
        Value acc = parse_signed_term(sign);
        while (at_op("+") || at_op("-")) {
            int s = at_op("-") ? -1 : 1;
            advance();
            Value w = parse_signed_term(s);
            if (acc.dirs || w.dirs) fail("direction terms cannot be added inside '()'");
            if (acc.sign < 0) {
                acc.scalar = -acc.scalar;
                acc.sign = 1;
            }
            acc.scalar = acc.scalar + (w.sign < 0 ? -w.scalar : w.scalar);
        }
        return acc;
    }

    Sum parse_top() {
        Sum sum;
        int sign = 1;
        if (at_op("-")) {
            sign = -1;
            advance();
        } else if (at_op("+")) {
            advance();
        }
        while (true) {
            Value v = parse_signed_term(sign);
            PJet s = v.sign < 0 ? -v.scalar : v.scalar;
            if (v.dirs) {
                Multivector<PJet> term(chart, vt.ncoords, (int)v.dirs->size());
                term.add_term(*v.dirs, s);
                if (!sum.mv) {
                    sum.mv = term;
                } else {
                    if (sum.mv->degree() != term.degree())
                        fail("mixed polyvector degrees in one expression");
                    *sum.mv += term;
                }
            } else {
                if (!sum.scalar)
                    sum.scalar = s;
                else
                    sum.scalar = *sum.scalar + s;
            }
            if (at_op("+")) {
                sign = 1;
                advance();
            } else if (at_op("-")) {
                sign = -1;
                advance();
            } else {
                break;
            }
        }
        if (tok.kind != Token::End) fail("trailing input");
        return sum;
    }
};

} // namespace

PJet parse_scalar(const std::string& text, const VarTable& vt) {
    Parser p(text, vt, -1);
    auto sum = p.parse_top();
    if (sum.mv) throw ParseError("expected a scalar expression", 0);
    if (!sum.scalar) return PJet(vt.nvars(), vt.nparams(), vt.order);
    return *sum.scalar;
}

Multivector<PJet> parse_multivector(const std::string& text, const VarTable& vt,
                                    int chart) {
    Parser p(text, vt, chart);
    auto sum = p.parse_top();
    if (sum.scalar && !sum.scalar->is_zero())
        throw ParseError("expected polyvector terms (use d<var> directions)", 0);
    if (!sum.mv) return Multivector<PJet>(chart, vt.ncoords, 0);
    return *sum.mv;
}

std::string scalar_str(const PJet& p, const VarTable& vt) {
    return p.str(vt.vars, vt.params);
}

namespace {

template <class C, class Str>
std::string mv_str_impl(const Multivector<C>& m, const VarTable& vt, Str coeff_str) {
    if (m.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [idx, c] : m.components()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff_str(c) << ")";
        for (size_t i = 0; i < idx.size(); ++i)
            os << (i ? "^" : "*") << "d" << vt.vars.at(idx[i]);
    }
    return os.str();
}

} // namespace

std::string mv_str(const Multivector<PJet>& m, const VarTable& vt) {
    return mv_str_impl(m, vt, [&](const PJet& c) { return c.str(vt.vars, vt.params); });
}

std::string mv_str(const Multivector<LPoly>& m, const VarTable& vt) {
    return mv_str_impl(m, vt, [&](const LPoly& c) { return c.str(vt.vars); });
}

} // namespace hpd
