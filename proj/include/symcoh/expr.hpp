#pragma once

#include "symcoh/char_classes.hpp"
#include "symcoh/format.hpp"
#include "symcoh/geo_maps.hpp"
#include "symcoh/product.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace symcoh {

struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SourcePos p)
        : std::runtime_error("line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " + msg),
          pos(p) {}
    SourcePos pos;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Generator, Add, Sub, Mul, Div, Neg, Pow, Call };
    Kind kind = Kind::Number;
    Rational number;           // Number
    std::string name;          // Generator (eta, theta, xi, xi', sigma) or Call
    int index = 0;             // xi / xi' / sigma
    int factor = 0;            // 1-based @k, 0 if untagged
    unsigned exponent = 0;     // Pow
    std::vector<ExprPtr> args; // operands
    SourcePos pos;
};

/// Structural equality, ignoring positions.
inline bool same_tree(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.number != b.number || a.name != b.name || a.index != b.index ||
        a.factor != b.factor || a.exponent != b.exponent || a.args.size() != b.args.size())
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!same_tree(*a.args[i], *b.args[i])) return false;
    return true;
}

namespace detail {

struct FunctionSig {
    const char* name;
    int min_args;
    int max_args;  // -1: unbounded
};

inline const std::vector<FunctionSig>& function_table() {
    static const std::vector<FunctionSig> t = {
        {"integrate", 1, 1}, {"pull_sum", 1, 1},  {"push_sum", 3, 3}, {"kunneth", 2, -1},
        {"secant", 4, 4},    {"chern", 2, 2},     {"involution", 1, 2}, {"w_integrate", 2, 3},
        {"delta", 2, 2},
    };
    return t;
}

inline const FunctionSig* find_function(const std::string& n) {
    for (const auto& f : function_table())
        if (n == f.name) return &f;
    return nullptr;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr parse() {
        skip();
        if (at_end()) fail("empty expression");
        auto e = expr();
        skip();
        if (!at_end()) fail(std::string("unexpected '") + s_[i_] + "'");
        return e;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
    SourcePos p_;
    SourcePos op_pos_;
    char op_ = 0;  // last operator consumed, for "missing operand" errors

    bool at_end() const { return i_ >= s_.size(); }
    [[noreturn]] void fail(const std::string& m) const { throw ParseError(m, p_); }
    [[noreturn]] void fail_at(const std::string& m, SourcePos p) const { throw ParseError(m, p); }

    void advance() {
        if (s_[i_] == '\n') {
            ++p_.line;
            p_.column = 1;
        } else {
            ++p_.column;
        }
        ++i_;
    }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
    }
    bool accept(char c) {
        skip();
        if (!at_end() && s_[i_] == c) {
            op_ = c;
            op_pos_ = p_;
            advance();
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip();
        if (at_end()) fail(std::string("expected '") + c + "', got end of input");
        if (s_[i_] != c) fail(std::string("expected '") + c + "', got '" + s_[i_] + "'");
        advance();
    }

    static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
    static ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b, SourcePos p) {
        Expr e;
        e.kind = k;
        e.args = {std::move(a), std::move(b)};
        e.pos = p;
        return node(std::move(e));
    }

    ExprPtr expr() {
        auto lhs = term();
        for (;;) {
            skip();
            SourcePos p = p_;
            if (accept('+')) lhs = binary(Expr::Kind::Add, lhs, term(), p);
            else if (accept('-')) lhs = binary(Expr::Kind::Sub, lhs, term(), p);
            else return lhs;
        }
    }

    ExprPtr term() {
        auto lhs = unary();
        for (;;) {
            skip();
            SourcePos p = p_;
            if (accept('*')) lhs = binary(Expr::Kind::Mul, lhs, unary(), p);
            else if (accept('/')) lhs = binary(Expr::Kind::Div, lhs, unary(), p);
            else return lhs;
        }
    }

    ExprPtr unary() {
        skip();
        SourcePos p = p_;
        if (accept('-')) {
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.args = {unary()};
            e.pos = p;
            return node(std::move(e));
        }
        return factor();
    }

    ExprPtr factor() {
        auto base = atom();
        skip();
        SourcePos p = p_;
        if (accept('^')) {
            skip();
            Expr e;
            e.kind = Expr::Kind::Pow;
            e.exponent = static_cast<unsigned>(uint_literal("exponent"));
            e.args = {base};
            e.pos = p;
            return node(std::move(e));
        }
        return base;
    }

    long long uint_literal(const char* what) {
        skip();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            fail(std::string("expected ") + what + (at_end() ? ", got end of input" : ""));
        long long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (v > 100000000000LL) fail("integer literal too large");
            v = v * 10 + (s_[i_] - '0');
            advance();
        }
        if (!at_end() && (s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E'))
            fail("floating-point literals are not supported; use exact rationals such as 3/2");
        return v;
    }

    std::string identifier() {
        std::string id;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
            id += s_[i_];
            advance();
        }
        if (id == "xi" && !at_end() && s_[i_] == '\'') {
            id += '\'';
            advance();
        }
        return id;
    }

    int factor_tag() {
        if (!at_end() && s_[i_] == '@') {
            advance();
            long long k = uint_literal("factor index after '@'");
            if (k < 1 || k > 8) fail("factor index must be between 1 and 8");
            return static_cast<int>(k);
        }
        return 0;
    }

    ExprPtr atom() {
        skip();
        if (at_end()) {
            if (op_) fail_at(std::string("missing operand after '") + op_ + "'", op_pos_);
            fail("unexpected end of input");
        }
        SourcePos start = p_;
        char c = s_[i_];
        if (c == '.') fail("floating-point literals are not supported; use exact rationals such as 3/2");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e;
            e.kind = Expr::Kind::Number;
            e.number = Rational(uint_literal("number"));
            e.pos = start;
            return node(std::move(e));
        }
        if (c == '(') {
            advance();
            auto e = expr();
            expect(')');
            return e;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
        std::string id = identifier();
        Expr e;
        e.pos = start;
        if (id == "eta" || id == "theta") {
            e.kind = Expr::Kind::Generator;
            e.name = id;
            e.factor = factor_tag();
            return node(std::move(e));
        }
        if (id == "xi" || id == "xi'" || id == "sigma") {
            e.kind = Expr::Kind::Generator;
            e.name = id;
            expect('(');
            e.index = static_cast<int>(uint_literal("generator index"));
            expect(')');
            e.factor = factor_tag();
            return node(std::move(e));
        }
        const FunctionSig* f = find_function(id);
        if (!f) fail_at("unknown identifier '" + id + "'", start);
        e.kind = Expr::Kind::Call;
        e.name = id;
        expect('(');
        if (!accept(')')) {
            do e.args.push_back(expr());
            while (accept(','));
            expect(')');
        }
        int n = static_cast<int>(e.args.size());
        if (n < f->min_args || (f->max_args >= 0 && n > f->max_args)) {
            std::string want = f->min_args == f->max_args ? std::to_string(f->min_args)
                               : f->max_args < 0 ? "at least " + std::to_string(f->min_args)
                                                 : std::to_string(f->min_args) + " or " + std::to_string(f->max_args);
            fail_at("arity mismatch: " + id + " takes " + want + " arguments, got " + std::to_string(n), start);
        }
        return node(std::move(e));
    }
};

inline int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

}  // namespace detail

inline ExprPtr parse_expression(const std::string& text) { return detail::Parser(text).parse(); }

/// Prints an AST so that parsing the output gives the same tree.
inline std::string print_expression(const Expr& e) {
    using K = Expr::Kind;
    auto wrap = [](const Expr& c, bool paren) {
        std::string s = print_expression(c);
        return paren ? "(" + s + ")" : s;
    };
    int p = detail::precedence(e);
    switch (e.kind) {
        case K::Number: return e.number.str();
        case K::Generator: {
            std::string s = e.name;
            if (e.name != "eta" && e.name != "theta") s += "(" + std::to_string(e.index) + ")";
            if (e.factor) s += "@" + std::to_string(e.factor);
            return s;
        }
        case K::Add:
        case K::Sub:
        case K::Mul:
        case K::Div: {
            const char* op = e.kind == K::Add ? " + " : e.kind == K::Sub ? " - " : e.kind == K::Mul ? "*" : "/";
            return wrap(*e.args[0], detail::precedence(*e.args[0]) < p) + op +
                   wrap(*e.args[1], detail::precedence(*e.args[1]) <= p);
        }
        case K::Neg: return "-" + wrap(*e.args[0], detail::precedence(*e.args[0]) < p);
        case K::Pow: return wrap(*e.args[0], detail::precedence(*e.args[0]) < 5) + "^" + std::to_string(e.exponent);
        case K::Call: {
            std::string s = e.name + "(";
            for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print_expression(*e.args[i]);
            return s + ")";
        }
    }
    return {};
}

/// Result of evaluation: a scalar or a class on the declared space.
using Value = std::variant<Rational, CohClass>;

inline std::string value_to_string(const Value& v, bool pretty = false) {
    if (auto r = std::get_if<Rational>(&v)) return r->str();
    const auto& c = std::get<CohClass>(v);
    return pretty ? to_pretty_string(c) : to_raw_string(c);
}

class Evaluator {
public:
    explicit Evaluator(SpaceSpec space) : space_(std::move(space)) {}

    Value eval(const Expr& e) const { return eval_in(e, space_); }

private:
    SpaceSpec space_;

    [[noreturn]] static void fail(const Expr& e, const std::string& m) {
        throw EvalError("line " + std::to_string(e.pos.line) + ", column " + std::to_string(e.pos.column) + ": " + m);
    }

    static CohClass as_class(const Value& v, const SpaceSpec& s) {
        if (auto r = std::get_if<Rational>(&v)) return CohClass::scalar(s, *r);
        return std::get<CohClass>(v);
    }

    Rational eval_scalar(const Expr& e, const SpaceSpec& s) const {
        Value v = eval_in(e, s);
        if (auto r = std::get_if<Rational>(&v)) return *r;
        const auto& c = std::get<CohClass>(v);
        if (c.is_zero()) return 0;
        if (c.degree() == 0) return c.terms().begin()->second;
        fail(e, "expected a scalar, got a class of degree " + std::to_string(c.degree()));
    }

    int eval_int(const Expr& e, const SpaceSpec& s) const {
        Rational r = eval_scalar(e, s);
        if (!r.is_integer()) fail(e, "expected an integer argument, got " + r.str());
        return static_cast<int>(r.to_int());
    }

    std::size_t resolve_factor(const Expr& e, const SpaceSpec& s) const {
        if (e.factor == 0) {
            if (s.size() > 1) fail(e, "generator '" + e.name + "' is ambiguous on " + s.str() + "; tag it with @k");
            return 0;
        }
        if (static_cast<std::size_t>(e.factor) > s.size())
            fail(e, "factor @" + std::to_string(e.factor) + " out of range for " + s.str());
        return static_cast<std::size_t>(e.factor - 1);
    }

    CohClass generator(const Expr& e, const SpaceSpec& s) const {
        std::size_t k = resolve_factor(e, s);
        const auto& f = s[k];
        int g = f.genus;
        if (e.name == "eta") {
            if (!f.is_sym()) fail(e, "eta is not defined on " + f.str());
            return gen_eta(s, k);
        }
        if (e.name == "theta") return gen_theta(s, k);
        int bound = e.name == "xi" ? 2 * g : g;
        if (e.index < 1 || e.index > bound)
            fail(e, e.name + " index " + std::to_string(e.index) + " out of range 1.." + std::to_string(bound));
        if (e.name == "xi") return gen_xi(s, k, e.index);
        if (e.name == "xi'") return gen_xi(s, k, e.index + g);
        return gen_sigma(s, k, e.index);
    }

    static const FactorSpec& single_sym(const Expr& e, const SpaceSpec& s) {
        if (s.size() != 1 || !s[0].is_sym()) fail(e, e.name + " needs a single sym(g,n) space, got " + s.str());
        return s[0];
    }

    Value eval_in(const Expr& e, const SpaceSpec& s) const {
        using K = Expr::Kind;
        try {
            switch (e.kind) {
                case K::Number: return e.number;
                case K::Generator: return generator(e, s);
                case K::Neg: {
                    Value v = eval_in(*e.args[0], s);
                    if (auto r = std::get_if<Rational>(&v)) return -*r;
                    return -std::get<CohClass>(v);
                }
                case K::Add:
                case K::Sub:
                case K::Mul: {
                    Value a = eval_in(*e.args[0], s), b = eval_in(*e.args[1], s);
                    auto ra = std::get_if<Rational>(&a);
                    auto rb = std::get_if<Rational>(&b);
                    if (ra && rb) return e.kind == K::Add ? *ra + *rb : e.kind == K::Sub ? *ra - *rb : *ra * *rb;
                    if (e.kind == K::Mul && ra) return *ra * std::get<CohClass>(b);
                    if (e.kind == K::Mul && rb) return std::get<CohClass>(a) * *rb;
                    CohClass ca = as_class(a, s), cb = as_class(b, s);
                    if (e.kind == K::Add) return ca + cb;
                    if (e.kind == K::Sub) return ca - cb;
                    return mul(ca, cb);
                }
                case K::Div: {
                    Rational d = eval_scalar(*e.args[1], s);
                    if (d.is_zero()) fail(e, "division by zero");
                    Value a = eval_in(*e.args[0], s);
                    if (auto r = std::get_if<Rational>(&a)) return *r / d;
                    return std::get<CohClass>(a) * (Rational(1) / d);
                }
                case K::Pow: {
                    Value a = eval_in(*e.args[0], s);
                    if (auto r = std::get_if<Rational>(&a)) {
                        Rational out = 1;
                        for (unsigned i = 0; i < e.exponent; ++i) out *= *r;
                        return out;
                    }
                    return pow(std::get<CohClass>(a), e.exponent);
                }
                case K::Call: return call(e, s);
            }
        } catch (const EvalError&) {
            throw;
        } catch (const std::exception& ex) {
            fail(e, ex.what());
        }
        return Rational(0);
    }

    Value call(const Expr& e, const SpaceSpec& s) const {
        const auto& a = e.args;
        const std::string& n = e.name;
        if (n == "integrate") return integrate(as_class(eval_in(*a[0], s), s));
        if (n == "delta") {
            int k = eval_int(*a[0], s), l = eval_int(*a[1], s);
            if (k < 1 || l < 1) fail(e, "delta factor indices are 1-based");
            return delta(s, static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1));
        }
        if (n == "secant") {
            int d = eval_int(*a[0], s), g = eval_int(*a[1], s), r = eval_int(*a[2], s), k = eval_int(*a[3], s);
            SpaceSpec want = sym_space(g, k);
            if (!(s == want)) fail(e, "secant space mismatch: evaluate on " + want.str() + ", not " + s.str());
            return secant_class(d, g, r, k);
        }
        if (n == "chern") {
            int g = eval_int(*a[0], s), m = eval_int(*a[1], s);
            SpaceSpec want = sym_space(g, m);
            if (!(s == want)) fail(e, "chern space mismatch: evaluate on " + want.str() + ", not " + s.str());
            return chern_sym(g, m);
        }
        if (n == "pull_sum") {
            if (s.size() != 2 || !s[0].is_sym() || !s[1].is_sym() || s[0].genus != s[1].genus)
                fail(e, "pull_sum needs a space sym(g,a) x sym(g,b), got " + s.str());
            SpaceSpec src = sym_space(s[0].genus, s[0].exponent + s[1].exponent);
            return pull_sum(as_class(eval_in(*a[0], src), src), s[0].exponent, s[1].exponent);
        }
        if (n == "push_sum") {
            const auto& f = single_sym(e, s);
            int p = eval_int(*a[1], s), q = eval_int(*a[2], s);
            if (p < 0 || q < 0 || p + q != f.exponent)
                fail(e, "push_sum exponents must add up to " + std::to_string(f.exponent));
            SpaceSpec src = sym_pair(f.genus, p, q);
            return gysin_sum(as_class(eval_in(*a[0], src), src));
        }
        if (n == "kunneth") {
            if (a.size() != s.size() + 1)
                fail(e, "kunneth needs one degree per factor (" + std::to_string(s.size()) + ")");
            MultiDegree md;
            for (std::size_t i = 1; i < a.size(); ++i) md.push_back(eval_int(*a[i], s));
            return kunneth_component(as_class(eval_in(*a[0], s), s), md);
        }
        if (n == "involution") {
            CohClass c = as_class(eval_in(*a[0], s), s);
            if (a.size() == 1) {
                if (s.size() != 1) fail(e, "involution on a product needs a factor index");
                return serre_involution(c);
            }
            int k = eval_int(*a[1], s);
            if (k < 1) fail(e, "factor indices are 1-based");
            return serre_involution_on_factor(c, static_cast<std::size_t>(k - 1));
        }
        if (n == "w_integrate") {
            single_sym(e, s);
            CohClass x = as_class(eval_in(*a[0], s), s), y = as_class(eval_in(*a[1], s), s);
            CohClass extra = a.size() == 3 ? as_class(eval_in(*a[2], s), s) : CohClass::unit(s);
            return integrate_over_W(x, y, extra);
        }
        fail(e, "unknown function '" + n + "'");
    }
};

/// Parses and evaluates `text` on `space`.
inline Value evaluate(const std::string& text, const SpaceSpec& space) {
    return Evaluator(space).eval(*parse_expression(text));
}

/// Like evaluate, but always returns a class (scalars become multiples of 1).
inline CohClass evaluate_class(const std::string& text, const SpaceSpec& space) {
    Value v = evaluate(text, space);
    if (auto r = std::get_if<Rational>(&v)) return CohClass::scalar(space, *r);
    return std::get<CohClass>(v);
}

}  // namespace symcoh
