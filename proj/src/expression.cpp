#include "galmann/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>

#include "galmann/errors.hpp"
#include "galmann/numformat.hpp"

namespace galmann {
namespace detail {

enum class Func { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt, Abs };

struct FuncName {
    std::string_view name;
    Func func;
};

constexpr std::array<FuncName, 10> kFuncs{{
    {"sin", Func::Sin}, {"cos", Func::Cos}, {"tan", Func::Tan},
    {"sinh", Func::Sinh}, {"cosh", Func::Cosh}, {"tanh", Func::Tanh},
    {"exp", Func::Exp}, {"log", Func::Log}, {"sqrt", Func::Sqrt},
    {"abs", Func::Abs},
}};

struct Node {
    enum class Kind { Number, Constant, Var, Neg, Add, Sub, Mul, Div, Pow, Call };

    Kind kind;
    double number = 0.0;   // Number
    std::string name;      // Constant: "pi" or "e"
    Func func = Func::Sin; // Call
    NodePtr a, b;
};

namespace {

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool node_depends_on_s(const Node& n) {
    switch (n.kind) {
    case Node::Kind::Number:
    case Node::Kind::Constant: return false;
    case Node::Kind::Var: return true;
    case Node::Kind::Neg:
    case Node::Kind::Call: return node_depends_on_s(*n.a);
    default: return node_depends_on_s(*n.a) || node_depends_on_s(*n.b);
    }
}

// ---------------------------------------------------------------- lexer

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::size_t offset;
    std::string text;
    double number = 0.0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_.offset = pos_;
        if (pos_ >= src_.size()) {
            tok_ = {TokKind::End, pos_, ""};
            return;
        }
        const char c = src_[pos_];
        switch (c) {
        case '+': single(TokKind::Plus); return;
        case '-': single(TokKind::Minus); return;
        case '*': single(TokKind::Star); return;
        case '/': single(TokKind::Slash); return;
        case '^': single(TokKind::Caret); return;
        case '(': single(TokKind::LParen); return;
        case ')': single(TokKind::RParen); return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            tok_ = {TokKind::Ident, pos_, std::string(src_.substr(pos_, end - pos_))};
            pos_ = end;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    void single(TokKind k) {
        tok_ = {k, pos_, std::string(1, src_[pos_])};
        ++pos_;
    }

    // digits [. digits] [ (e|E) (+|-)? digits ] -- the exponent part is
    // consumed only when complete, so "2e" lexes as the number 2
    // followed by the identifier e.
    void lex_number() {
        std::size_t end = pos_;
        bool any_digit = false;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) {
            ++end;
            any_digit = true;
        }
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) {
                ++end;
                any_digit = true;
            }
        }
        if (!any_digit) throw ParseError("malformed number", pos_);
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t exp = end + 1;
            if (exp < src_.size() && (src_[exp] == '+' || src_[exp] == '-')) ++exp;
            if (exp < src_.size() && std::isdigit(static_cast<unsigned char>(src_[exp]))) {
                ++exp;
                while (exp < src_.size() && std::isdigit(static_cast<unsigned char>(src_[exp]))) ++exp;
                end = exp;
            }
        }
        double value = 0.0;
        const auto res = std::from_chars(src_.data() + pos_, src_.data() + end, value);
        if (res.ec != std::errc{})
            throw ParseError("malformed number", pos_);
        tok_ = {TokKind::Number, pos_, std::string(src_.substr(pos_, end - pos_)), value};
        pos_ = end;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token tok_{TokKind::End, 0, ""};
};

// --------------------------------------------------------------- parser

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    NodePtr parse() {
        NodePtr e = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != TokKind::End)
            throw ParseError("unexpected '" + t.text + "'", t.offset);
        return e;
    }

private:
    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
            const Token op = lex_.take();
            NodePtr rhs = parse_term();
            Node n;
            n.kind = op.kind == TokKind::Plus ? Node::Kind::Add : Node::Kind::Sub;
            n.a = lhs;
            n.b = rhs;
            lhs = make_node(std::move(n));
        }
        return lhs;
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (lex_.peek().kind == TokKind::Star || lex_.peek().kind == TokKind::Slash) {
            const Token op = lex_.take();
            NodePtr rhs = parse_factor();
            Node n;
            n.kind = op.kind == TokKind::Star ? Node::Kind::Mul : Node::Kind::Div;
            n.a = lhs;
            n.b = rhs;
            lhs = make_node(std::move(n));
        }
        return lhs;
    }

    NodePtr parse_factor() {
        if (lex_.peek().kind == TokKind::Minus) {
            lex_.take();
            Node n;
            n.kind = Node::Kind::Neg;
            n.a = parse_power();
            return make_node(std::move(n));
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (lex_.peek().kind == TokKind::Caret) {
            const Token caret = lex_.take();
            NodePtr exponent = parse_factor();
            if (node_depends_on_s(*exponent))
                throw ParseError("exponent must be constant", caret.offset);
            Node n;
            n.kind = Node::Kind::Pow;
            n.a = base;
            n.b = exponent;
            return make_node(std::move(n));
        }
        return base;
    }

    NodePtr parse_atom() {
        const Token t = lex_.take();
        switch (t.kind) {
        case TokKind::Number: {
            Node n;
            n.kind = Node::Kind::Number;
            n.number = t.number;
            return make_node(std::move(n));
        }
        case TokKind::LParen: {
            NodePtr e = parse_expr();
            expect_rparen();
            return e;
        }
        case TokKind::Ident: {
            if (t.text == "s") {
                Node n;
                n.kind = Node::Kind::Var;
                return make_node(std::move(n));
            }
            if (t.text == "pi" || t.text == "e") {
                if (lex_.peek().kind == TokKind::LParen)
                    throw ParseError("'" + t.text + "' is not a function", lex_.peek().offset);
                Node n;
                n.kind = Node::Kind::Constant;
                n.name = t.text;
                return make_node(std::move(n));
            }
            for (const FuncName& f : kFuncs) {
                if (t.text != f.name) continue;
                if (lex_.peek().kind != TokKind::LParen)
                    throw ParseError("function '" + t.text + "' needs an argument list",
                                     lex_.peek().offset);
                lex_.take();
                NodePtr arg = parse_expr();
                expect_rparen();
                Node n;
                n.kind = Node::Kind::Call;
                n.func = f.func;
                n.name = std::string(f.name);
                n.a = arg;
                return make_node(std::move(n));
            }
            throw ParseError("unknown identifier '" + t.text + "'", t.offset);
        }
        case TokKind::End:
            throw ParseError("expected expression", t.offset);
        default:
            throw ParseError("unexpected '" + t.text + "'", t.offset);
        }
    }

    void expect_rparen() {
        const Token& t = lex_.peek();
        if (t.kind != TokKind::RParen)
            throw ParseError("expected ')'", t.offset);
        lex_.take();
    }

    Lexer lex_;
};

// -------------------------------------------------------------- unparse

// Precedence: +- (1), */ (2), unary - (3), ^ (4), atoms (5).  Parentheses
// are emitted exactly where reparsing would otherwise change the tree.
int precedence(const Node& n) {
    switch (n.kind) {
    case Node::Kind::Add:
    case Node::Kind::Sub: return 1;
    case Node::Kind::Mul:
    case Node::Kind::Div: return 2;
    case Node::Kind::Neg: return 3;
    case Node::Kind::Pow: return 4;
    default: return n.kind == Node::Kind::Number && n.number < 0.0 ? 3 : 5;
    }
}

std::string unparse(const Node& n);

std::string wrap(const Node& child, bool parens) {
    std::string s = unparse(child);
    return parens ? "(" + s + ")" : s;
}

std::string unparse(const Node& n) {
    switch (n.kind) {
    case Node::Kind::Number: return format_double(n.number);
    case Node::Kind::Constant: return n.name;
    case Node::Kind::Var: return "s";
    case Node::Kind::Neg: return "-" + wrap(*n.a, precedence(*n.a) < 4);
    case Node::Kind::Add:
        return wrap(*n.a, precedence(*n.a) < 1) + "+" + wrap(*n.b, precedence(*n.b) <= 1);
    case Node::Kind::Sub:
        return wrap(*n.a, precedence(*n.a) < 1) + "-" + wrap(*n.b, precedence(*n.b) <= 1);
    case Node::Kind::Mul:
        return wrap(*n.a, precedence(*n.a) < 2) + "*" + wrap(*n.b, precedence(*n.b) <= 2);
    case Node::Kind::Div:
        return wrap(*n.a, precedence(*n.a) < 2) + "/" + wrap(*n.b, precedence(*n.b) <= 2);
    case Node::Kind::Pow:
        return wrap(*n.a, precedence(*n.a) <= 4) + "^" + wrap(*n.b, precedence(*n.b) < 3);
    case Node::Kind::Call: return n.name + "(" + unparse(*n.a) + ")";
    }
    return {};
}

// ----------------------------------------------------------- evaluation

double eval_value(const Node& n, double s);

double call_value(const Node& n, double s) {
    const double x = eval_value(*n.a, s);
    switch (n.func) {
    case Func::Sin: return std::sin(x);
    case Func::Cos: return std::cos(x);
    case Func::Tan: return std::tan(x);
    case Func::Sinh: return std::sinh(x);
    case Func::Cosh: return std::cosh(x);
    case Func::Tanh: return std::tanh(x);
    case Func::Exp: return std::exp(x);
    case Func::Log:
        if (x <= 0.0) throw DomainError("log of a non-positive value");
        return std::log(x);
    case Func::Sqrt:
        if (x < 0.0) throw DomainError("sqrt of a negative value");
        return std::sqrt(x);
    case Func::Abs: return std::abs(x);
    }
    return 0.0;
}

double eval_value(const Node& n, double s) {
    try {
        switch (n.kind) {
        case Node::Kind::Number: return n.number;
        case Node::Kind::Constant: return n.name == "pi" ? std::numbers::pi : std::numbers::e;
        case Node::Kind::Var: return s;
        case Node::Kind::Neg: return -eval_value(*n.a, s);
        case Node::Kind::Add: return eval_value(*n.a, s) + eval_value(*n.b, s);
        case Node::Kind::Sub: return eval_value(*n.a, s) - eval_value(*n.b, s);
        case Node::Kind::Mul: return eval_value(*n.a, s) * eval_value(*n.b, s);
        case Node::Kind::Div: {
            const double num = eval_value(*n.a, s);
            const double den = eval_value(*n.b, s);
            if (den == 0.0) throw DomainError("division by zero");
            return num / den;
        }
        case Node::Kind::Pow: {
            const double base = eval_value(*n.a, s);
            const double p = eval_value(*n.b, s);
            if (p != std::nearbyint(p) && base <= 0.0)
                throw DomainError("pow of a non-positive base with fractional exponent");
            return std::pow(base, p);
        }
        case Node::Kind::Call: return call_value(n, s);
        }
    } catch (const EvalDomainError&) {
        throw;
    } catch (const DomainError& e) {
        throw EvalDomainError(e.what(), unparse(n), s);
    }
    return 0.0;
}

Jet eval_jet_node(const Node& n, double s0, int order);

Jet call_jet(const Node& n, double s0, int order) {
    const Jet x = eval_jet_node(*n.a, s0, order);
    switch (n.func) {
    case Func::Sin: return sin(x);
    case Func::Cos: return cos(x);
    case Func::Tan: return tan(x);
    case Func::Sinh: return sinh(x);
    case Func::Cosh: return cosh(x);
    case Func::Tanh: return tanh(x);
    case Func::Exp: return exp(x);
    case Func::Log: return log(x);
    case Func::Sqrt: return sqrt(x);
    case Func::Abs: return abs(x);
    }
    return Jet(order);
}

Jet eval_jet_node(const Node& n, double s0, int order) {
    try {
        switch (n.kind) {
        case Node::Kind::Number: return Jet::constant(n.number, order);
        case Node::Kind::Constant:
            return Jet::constant(n.name == "pi" ? std::numbers::pi : std::numbers::e, order);
        case Node::Kind::Var: return Jet::variable(s0, order);
        case Node::Kind::Neg: return -eval_jet_node(*n.a, s0, order);
        case Node::Kind::Add: return eval_jet_node(*n.a, s0, order) + eval_jet_node(*n.b, s0, order);
        case Node::Kind::Sub: return eval_jet_node(*n.a, s0, order) - eval_jet_node(*n.b, s0, order);
        case Node::Kind::Mul: return eval_jet_node(*n.a, s0, order) * eval_jet_node(*n.b, s0, order);
        case Node::Kind::Div: return eval_jet_node(*n.a, s0, order) / eval_jet_node(*n.b, s0, order);
        case Node::Kind::Pow:
            return pow(eval_jet_node(*n.a, s0, order), eval_value(*n.b, 0.0));
        case Node::Kind::Call: return call_jet(n, s0, order);
        }
    } catch (const EvalDomainError&) {
        throw;
    } catch (const DomainError& e) {
        throw EvalDomainError(e.what(), unparse(n), s0);
    }
    return Jet(order);
}

bool nodes_equal(const Node& x, const Node& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
    case Node::Kind::Number: return x.number == y.number;
    case Node::Kind::Constant: return x.name == y.name;
    case Node::Kind::Var: return true;
    case Node::Kind::Neg: return nodes_equal(*x.a, *y.a);
    case Node::Kind::Call: return x.func == y.func && nodes_equal(*x.a, *y.a);
    default: return nodes_equal(*x.a, *y.a) && nodes_equal(*x.b, *y.b);
    }
}

} // namespace
} // namespace detail

Expression Expression::parse(std::string_view text) {
    detail::Parser p(text);
    return Expression(p.parse());
}

std::string Expression::text() const { return detail::unparse(*root_); }

double Expression::eval(double s) const {
    const double v = detail::eval_value(*root_, s);
    if (!std::isfinite(v))
        throw EvalDomainError("non-finite result", text(), s);
    return v;
}

Jet Expression::eval_jet(double s0, int order) const {
    Jet j = detail::eval_jet_node(*root_, s0, order);
    if (!j.all_finite())
        throw EvalDomainError("non-finite result", text(), s0);
    return j;
}

bool Expression::depends_on_s() const { return detail::node_depends_on_s(*root_); }

bool Expression::structurally_equal(const Expression& other) const {
    return detail::nodes_equal(*root_, *other.root_);
}

} // namespace galmann
